//! Checks that an optimal count at k forces the full structural cascade:
//! triangular hull, triangular outer layers, optimal prefix counts and the
//! exact per-level histogram.

use super::StructureError;
use crate::bounds::lb_planar_basic;
use crate::count::count_facets;
use crate::geom::{convex_hull_2d, convex_layers_2d, GeomError, PointSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OptRow {
    pub j: usize,
    pub counted_leq: u64,
    pub expected_leq: u64,
    pub leq_optimal: bool,
    pub counted_exact: u64,
    pub expected_exact: u64,
    pub exact_matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OptimalityReport {
    pub k: usize,
    /// E_k equals 3*C(k+2,2).
    pub optimal_at_k: bool,
    pub rows: Vec<OptRow>,
    pub hull_is_triangle: bool,
    /// Leading convex layers that are triangles.
    pub triangular_layers: usize,
    /// ceil(k/2), the number that optimality at k forces.
    pub required_layers: usize,
    /// When optimal_at_k: hull triangular, enough triangular layers, and
    /// every row optimal/exact. Vacuously true otherwise.
    pub cascade_holds: bool,
}

pub fn check_structural_optimality(
    s: &PointSet,
    k: usize,
) -> Result<OptimalityReport, StructureError> {
    if s.dim() != 2 {
        return Err(StructureError::Geom(GeomError::DimensionMismatch {
            expected: 2,
            got: s.dim(),
        }));
    }
    let n = s.len();
    let max = n as i64 / 3 - 1;
    if k as i64 > max {
        return Err(StructureError::KOutOfRange { k, max });
    }
    let fv = count_facets(s)?;
    let hull = convex_hull_2d(s)?;
    let layers = convex_layers_2d(s)?;

    let optimal_at_k = fv.leq(k) == lb_planar_basic(k);
    let rows: Vec<OptRow> = (0..=k)
        .map(|j| {
            let counted_leq = fv.leq(j);
            let expected_leq = lb_planar_basic(j);
            let counted_exact = fv.e(j);
            let expected_exact = 3 * (j as u64 + 1);
            OptRow {
                j,
                counted_leq,
                expected_leq,
                leq_optimal: counted_leq == expected_leq,
                counted_exact,
                expected_exact,
                exact_matches: counted_exact == expected_exact,
            }
        })
        .collect();

    let hull_is_triangle = hull.len() == 3;
    let triangular_layers = layers.iter().take_while(|l| l.len() == 3).count();
    let required_layers = (k + 1) / 2;
    let cascade_holds = !optimal_at_k
        || (hull_is_triangle
            && triangular_layers >= required_layers
            && rows.iter().all(|r| r.leq_optimal && r.exact_matches));

    Ok(OptimalityReport {
        k,
        optimal_at_k,
        rows,
        hull_is_triangle,
        triangular_layers,
        required_layers,
        cascade_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn convex_quad_not_optimal() {
        let s = PointSet::from_int_rows(
            2,
            &[vec![0, 0], vec![9, 0], vec![9, 9], vec![0, 9], vec![4, 3], vec![5, 6]],
        )
        .unwrap();
        let rep = check_structural_optimality(&s, 0).unwrap();
        assert!(!rep.optimal_at_k);
        assert!(!rep.hull_is_triangle);
        assert!(rep.cascade_holds); // vacuous
    }

    #[test]
    fn k_range_enforced() {
        let s = PointSet::from_int_rows(2, &[vec![0, 0], vec![4, 0], vec![0, 4]]).unwrap();
        assert!(matches!(
            check_structural_optimality(&s, 1),
            Err(StructureError::KOutOfRange { .. })
        ));
        assert!(check_structural_optimality(&s, 0).is_ok());
    }
}
