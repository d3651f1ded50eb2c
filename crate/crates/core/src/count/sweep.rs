//! Rotational-sweep counter for the plane: per source point, sort the rest
//! by angle and maintain the left-side count of the rotating directed edge
//! with a circular two-pointer. Emits every directed edge exactly once, so
//! the result must equal the brute-force histogram.

use super::FacetVector;
use crate::geom::{sign_tuple, GeomError, PointSet};
use std::cmp::Ordering;

pub fn sweep_count_2d(s: &PointSet) -> Result<FacetVector, GeomError> {
    if s.dim() != 2 {
        return Err(GeomError::DimensionMismatch {
            expected: 2,
            got: s.dim(),
        });
    }
    let n = s.len();
    if n < 3 {
        return Err(GeomError::TooFewPoints { needed: 3, got: n });
    }

    let mut e = vec![0u64; n - 1];
    for p in 0..n {
        let mut others: Vec<usize> = (0..n).filter(|&q| q != p).collect();
        others.sort_unstable_by(|&a, &b| angle_cmp(s, p, a, b));

        // Equal directions survive the sort as neighbours; they are exactly
        // the collinear triples through p on a common side.
        let m = others.len();
        for w in others.windows(2) {
            if half(s, p, w[0]) == half(s, p, w[1]) && sign_tuple(s, &[p, w[0], w[1]]) == 0 {
                return Err(degenerate(p, w[0], w[1]));
            }
        }

        // t chases the far end of the open half-plane arc (theta, theta+pi).
        let mut t = 1usize;
        for i in 0..m {
            if t < i + 1 {
                t = i + 1;
            }
            while t < i + m {
                match sign_tuple(s, &[p, others[i], others[t % m]]) {
                    1 => t += 1,
                    0 => return Err(degenerate(p, others[i], others[t % m])),
                    _ => break,
                }
            }
            let k = t - i - 1;
            e[k] += 1;
        }
    }
    Ok(FacetVector::from_histogram(e))
}

fn degenerate(a: usize, b: usize, c: usize) -> GeomError {
    let mut tuple = vec![a, b, c];
    tuple.sort_unstable();
    GeomError::Degenerate(tuple)
}

/// 0 for directions in [0, pi) measured from the positive x-axis, 1 for the
/// rest; the zero direction itself counts as upper.
fn half(s: &PointSet, p: usize, q: usize) -> u8 {
    let py = s.point(p).coord(1);
    let qy = s.point(q).coord(1);
    match qy.cmp(py) {
        Ordering::Greater => 0,
        Ordering::Less => 1,
        Ordering::Equal => {
            if s.point(q).coord(0) > s.point(p).coord(0) {
                0
            } else {
                1
            }
        }
    }
}

fn angle_cmp(s: &PointSet, p: usize, a: usize, b: usize) -> Ordering {
    let ha = half(s, p, a);
    let hb = half(s, p, b);
    if ha != hb {
        return ha.cmp(&hb);
    }
    match sign_tuple(s, &[p, a, b]) {
        1 => Ordering::Less,
        -1 => Ordering::Greater,
        _ => Ordering::Equal,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::count_facets;

    fn set2(rows: &[[i64; 2]]) -> PointSet {
        PointSet::from_int_rows(2, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn triangle_matches() {
        let s = set2(&[[0, 0], [4, 0], [0, 4]]);
        assert_eq!(sweep_count_2d(&s).unwrap().histogram(), &[3, 3]);
    }

    #[test]
    fn convex_four_matches() {
        let s = set2(&[[0, 0], [4, 0], [4, 4], [0, 4]]);
        assert_eq!(sweep_count_2d(&s).unwrap().histogram(), &[4, 4, 4]);
    }

    #[test]
    fn agrees_with_enumeration() {
        let s = set2(&[
            [0, 0],
            [7, 1],
            [5, 6],
            [1, 5],
            [3, 3],
            [8, 4],
            [2, 7],
        ]);
        assert_eq!(sweep_count_2d(&s).unwrap(), count_facets(&s).unwrap());
    }

    #[test]
    fn detects_collinearity() {
        let s = set2(&[[0, 0], [2, 2], [4, 4], [0, 5]]);
        assert!(matches!(
            sweep_count_2d(&s),
            Err(GeomError::Degenerate(_))
        ));
    }
}
