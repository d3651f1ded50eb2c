//! Cross-cutting properties of the geometric kernel and counters, plus
//! frozen reference values for the generated families. The frozen numbers
//! were computed by an independent brute-force pass and must never drift.

use std::collections::BTreeSet;

use kfacets::bounds::{binom, lb_planar_basic, verify_bounds};
use kfacets::conjecture::random_point_set;
use kfacets::construct::{gen_tight_planar_basic, gen_tight_planar_extended};
use kfacets::count::{
    adjacent_leq_k, convex_quadrilaterals, count_facets, crossing_identity, sweep_count_2d,
};
use kfacets::geom::{convex_hull_2d, convex_layers_2d, hull_vertices, side_counts};
use kfacets::{Point, PointSet, Rational};
use proptest::prelude::*;

fn small_points(d: usize, count: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-50i64..=50, d), count)
}

fn to_points(rows: &[Vec<i64>]) -> Vec<Point> {
    rows.iter().map(|r| Point::from_ints(r)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// Swapping two rows of the orientation tuple flips the sign.
    #[test]
    fn orientation_antisymmetry(rows in small_points(2, 3), (i, j) in (0usize..3, 0usize..3)) {
        prop_assume!(i != j);
        let pts = to_points(&rows);
        let refs: Vec<&Point> = pts.iter().collect();
        let base = kfacets::geom::orientation(&refs, 2).unwrap();
        let mut swapped = pts.clone();
        swapped.swap(i, j);
        let refs: Vec<&Point> = swapped.iter().collect();
        prop_assert_eq!(kfacets::geom::orientation(&refs, 2).unwrap(), -base);
    }

    /// Translating every point leaves the orientation unchanged.
    #[test]
    fn orientation_translation_invariant(rows in small_points(3, 4), shift in prop::collection::vec(-100i64..=100, 3)) {
        let pts = to_points(&rows);
        let refs: Vec<&Point> = pts.iter().collect();
        let base = kfacets::geom::orientation(&refs, 3).unwrap();
        let moved: Vec<Point> = rows
            .iter()
            .map(|r| Point::from_ints(&[r[0] + shift[0], r[1] + shift[1], r[2] + shift[2]]))
            .collect();
        let refs: Vec<&Point> = moved.iter().collect();
        prop_assert_eq!(kfacets::geom::orientation(&refs, 3).unwrap(), base);
    }

    /// Scaling by a positive rational leaves the orientation unchanged.
    #[test]
    fn orientation_scale_invariant(rows in small_points(2, 3), num in 1i64..=20, den in 1i64..=20) {
        let pts = to_points(&rows);
        let refs: Vec<&Point> = pts.iter().collect();
        let base = kfacets::geom::orientation(&refs, 2).unwrap();
        let factor = Rational::new(num.into(), den.into());
        let scaled: Vec<Point> = pts
            .iter()
            .map(|p| Point::new(p.coords().iter().map(|c| c * &factor).collect()))
            .collect();
        let refs: Vec<&Point> = scaled.iter().collect();
        prop_assert_eq!(kfacets::geom::orientation(&refs, 2).unwrap(), base);
    }

    /// The facet histogram is symmetric and sums to twice the number of
    /// d-subsets; the prefix total agrees.
    #[test]
    fn histogram_symmetry_and_total(seed in any::<u64>(), n in 5usize..=12, d in 2usize..=3) {
        prop_assume!(n > d + 1);
        let s = random_point_set(n, d, seed, 1000).unwrap();
        let fv = count_facets(&s).unwrap();
        prop_assert!(fv.is_symmetric());
        prop_assert_eq!(fv.total(), 2 * binom(n as i64, d as i64));
        prop_assert_eq!(fv.leq(fv.max_k()), fv.total());
        prop_assert_eq!(fv.max_k(), n - d);
    }

    /// The rotating sweep and brute-force enumeration agree everywhere.
    #[test]
    fn sweep_matches_enumeration(seed in any::<u64>(), n in 5usize..=20) {
        let s = random_point_set(n, 2, seed, 1000).unwrap();
        prop_assert_eq!(sweep_count_2d(&s).unwrap(), count_facets(&s).unwrap());
    }

    /// Reversing a facet's orientation exchanges the two side counts.
    #[test]
    fn side_counts_swap_under_flip(seed in any::<u64>(), n in 4usize..=10) {
        let s = random_point_set(n, 2, seed, 1000).unwrap();
        let (pos, neg) = side_counts(&s, &[0, 1], 1).unwrap();
        prop_assert_eq!(side_counts(&s, &[0, 1], -1).unwrap(), (neg, pos));
        prop_assert_eq!(side_counts(&s, &[1, 0], 1).unwrap(), (neg, pos));
        prop_assert_eq!(pos + neg, n - 2);
    }

    /// The general hull extractor agrees with the planar gift-wrap.
    #[test]
    fn hull_extractors_agree(seed in any::<u64>(), n in 4usize..=15) {
        let s = random_point_set(n, 2, seed, 1000).unwrap();
        let cycle: BTreeSet<usize> = convex_hull_2d(&s).unwrap().into_iter().collect();
        prop_assert_eq!(hull_vertices(&s).unwrap(), cycle);
    }

    /// Every 4-subset of points on a convex curve is a convex
    /// quadrilateral, so the crossing count is exactly C(n,4).
    #[test]
    fn convex_position_crossing_count(n in 4usize..=10) {
        let rows: Vec<Vec<i64>> = (0..n as i64).map(|t| vec![t, t * t]).collect();
        let s = PointSet::from_int_rows(2, &rows).unwrap();
        prop_assert_eq!(convex_quadrilaterals(&s).unwrap(), binom(n as i64, 4));
        let id = crossing_identity(&s).unwrap();
        prop_assert!(id.equal);
    }
}

#[test]
fn extended_twelve_frozen_profile() {
    let cfg = gen_tight_planar_extended(12).unwrap();
    let fv = count_facets(cfg.set()).unwrap();
    assert_eq!(fv.histogram(), &[3, 6, 9, 12, 18, 36, 18, 12, 9, 6, 3]);
    let layers = convex_layers_2d(cfg.set()).unwrap();
    let lens: Vec<usize> = layers.iter().map(Vec::len).collect();
    assert_eq!(lens, vec![3, 3, 3, 3]);
}

#[test]
fn basic_thirty_frozen_profile() {
    let cfg = gen_tight_planar_basic(30).unwrap();
    let s = cfg.set();
    let fv = count_facets(s).unwrap();
    for j in 0..=9usize {
        assert_eq!(fv.e(j), 3 * (j as u64 + 1), "e_{j}");
        assert_eq!(fv.leq(j), lb_planar_basic(j), "E_{j}");
    }
    assert_eq!(fv.leq(9), 165);
    let hull = hull_vertices(s).unwrap();
    assert_eq!(hull, BTreeSet::from([0, 10, 20]));
}

#[test]
fn basic_thirty_adjacency_counts() {
    // Facets touching the outer triangle: 3 hull edges plus, per k-value
    // j <= k, three oriented pairs through each corner; 6k + 3 in all.
    let cfg = gen_tight_planar_basic(30).unwrap();
    let t: BTreeSet<usize> = [0, 10, 20].into();
    for k in [2usize, 5, 9] {
        let adj = adjacent_leq_k(cfg.set(), &t, k).unwrap();
        assert_eq!(adj.len() as u64, 6 * k as u64 + 3, "k={k}");
    }
}

#[test]
fn extended_twentyfour_bound_rows() {
    let cfg = gen_tight_planar_extended(24).unwrap();
    let rep = verify_bounds(cfg.set(), 9).unwrap();
    assert!(rep.all_satisfied());
    for r in &rep.rows {
        assert!(r.tight, "k={} not tight", r.k);
        assert_eq!(r.optimal, r.k < 8, "optimal flag at k={}", r.k);
    }
}
