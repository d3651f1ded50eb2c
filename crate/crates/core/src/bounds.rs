//! Closed-form lower bounds on the (≤k)-facet count and reports comparing
//! them against exact counts.
//!
//! Conventions: C(a,b) is zero whenever a < b or b < 0, which lets every
//! formula below be evaluated without range bookkeeping at the call site.

use crate::count::count_facets;
use crate::geom::{GeomError, PointSet};

/// Binomial coefficient with out-of-range arguments clamped to zero.
pub fn binom(a: i64, b: i64) -> u64 {
    if b < 0 || a < b {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for i in 0..b {
        acc = acc * (a - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial out of u64 range")
}

/// Planar bound 3*C(k+2,2), valid for k < floor((n-2)/2).
pub fn lb_planar_basic(k: usize) -> u64 {
    3 * binom(k as i64 + 2, 2)
}

/// Planar bound with the surplus sum that kicks in at k >= floor(n/3):
/// 3*C(k+2,2) + sum_{j=floor(n/3)}^{k} (3j - n + 3).
pub fn lb_planar_improved(n: usize, k: usize) -> u64 {
    let mut v = lb_planar_basic(k);
    for j in n / 3..=k {
        let term = 3 * j as i64 - n as i64 + 3;
        debug_assert!(term > 0);
        v += term as u64;
    }
    v
}

/// d-dimensional bound (d+1)*C(k+d,d), applicable only for
/// k < floor(n/(d+1)).
pub fn lb_simplicial(n: usize, d: usize, k: usize) -> Option<u64> {
    if k < n / (d + 1) {
        Some((d as u64 + 1) * binom((k + d) as i64, d as i64))
    } else {
        None
    }
}

/// Comparison of the counted E_k at one k against every applicable formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundRow {
    pub k: usize,
    pub counted: u64,
    /// 3*C(k+2,2); present iff dim = 2 and k < floor((n-2)/2).
    pub basic: Option<u64>,
    /// The surplus-sum bound; same applicability as `basic`.
    pub improved: Option<u64>,
    /// (d+1)*C(k+d,d); present iff k < floor(n/(d+1)).
    pub simplicial: Option<u64>,
    pub satisfied: bool,
    pub tight: bool,
    pub optimal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub n: usize,
    pub dim: usize,
    pub rows: Vec<BoundRow>,
}

impl BoundReport {
    pub fn all_satisfied(&self) -> bool {
        self.rows.iter().all(|r| r.satisfied)
    }
}

/// Counts facets and checks every applicable lower bound for k up to
/// `k_max` (clamped to the largest defined k).
pub fn verify_bounds(s: &PointSet, k_max: usize) -> Result<BoundReport, GeomError> {
    let fv = count_facets(s)?;
    let n = s.len();
    let d = s.dim();
    let planar_range = |k: usize| d == 2 && k < (n - 2) / 2;
    let mut rows = Vec::new();
    for k in 0..=k_max.min(n - d) {
        let counted = fv.leq(k);
        let basic = planar_range(k).then(|| lb_planar_basic(k));
        let improved = planar_range(k).then(|| lb_planar_improved(n, k));
        let simplicial = lb_simplicial(n, d, k);
        let bounds = [basic, improved, simplicial];
        let satisfied = bounds.iter().flatten().all(|&b| counted >= b);
        let tight = bounds.iter().flatten().any(|&b| counted == b);
        let optimal = d == 2 && n / 3 > 0 && k + 1 <= n / 3 && counted == lb_planar_basic(k);
        rows.push(BoundRow {
            k,
            counted,
            basic,
            improved,
            simplicial,
            satisfied,
            tight,
            optimal,
        });
    }
    Ok(BoundReport { n, dim: d, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binom_clamps() {
        assert_eq!(binom(5, 2), 10);
        assert_eq!(binom(2, 5), 0);
        assert_eq!(binom(4, -1), 0);
        assert_eq!(binom(0, 0), 1);
        assert_eq!(binom(-3, 2), 0);
    }

    #[test]
    fn planar_basic_values() {
        assert_eq!(lb_planar_basic(0), 3);
        assert_eq!(lb_planar_basic(1), 9);
        assert_eq!(lb_planar_basic(4), 45);
    }

    #[test]
    fn planar_improved_values() {
        // Sum empty below floor(n/3): reduces to the basic bound.
        assert_eq!(lb_planar_improved(12, 3), 30);
        assert_eq!(lb_planar_improved(12, 4), 48);
        assert_eq!(lb_planar_improved(24, 9), 174);
    }

    #[test]
    fn planar_improved_closed_form_when_divisible() {
        // For 3 | n the sum telescopes to 3*C(k - n/3 + 2, 2).
        for n in [12usize, 15, 21, 24, 30, 60] {
            for k in 0..n {
                let direct = lb_planar_improved(n, k);
                let closed =
                    lb_planar_basic(k) + 3 * binom(k as i64 - (n / 3) as i64 + 2, 2);
                assert_eq!(direct, closed, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn simplicial_values_and_range() {
        assert_eq!(lb_simplicial(9, 2, 0), Some(3));
        assert_eq!(lb_simplicial(12, 3, 2), Some(40));
        assert_eq!(lb_simplicial(12, 3, 3), None);
        // Agrees with the planar bound in the plane.
        for n in [6usize, 9, 14] {
            for k in 0..n / 3 {
                assert_eq!(lb_simplicial(n, 2, k), Some(lb_planar_basic(k)));
            }
        }
    }

    #[test]
    fn binomial_sum_identity() {
        // sum_j C(d+1,j) * (d-j+1) * C(k,d-j) = (d+1) * C(k+d,d)
        for d in 0i64..=6 {
            for k in 0i64..=30 {
                let lhs: u64 = (0..=d)
                    .map(|j| binom(d + 1, j) * (d - j + 1) as u64 * binom(k, d - j))
                    .sum();
                assert_eq!(lhs, (d as u64 + 1) * binom(k + d, d), "d={d} k={k}");
            }
        }
    }

    #[test]
    fn report_on_convex_quad() {
        let s = PointSet::from_int_rows(
            2,
            &[vec![0, 0], vec![4, 0], vec![4, 4], vec![0, 4]],
        )
        .unwrap();
        let rep = verify_bounds(&s, 0).unwrap();
        let row = &rep.rows[0];
        assert_eq!(row.counted, 4);
        assert_eq!(row.basic, Some(3));
        assert!(row.satisfied && !row.tight && !row.optimal);
    }
}
