//! Exact geometric kernel: rational points, orientation predicates,
//! sidedness counts, general-position checks, hulls and layers.
//!
//! Every decision in this crate funnels through the sign of an exact
//! integer determinant; there is no floating point anywhere.

pub(crate) mod combin;
pub mod hull;
mod predicates;

pub use hull::{convex_hull_2d, convex_layers_2d, hull_vertices};
pub(crate) use predicates::det_big;

use num::integer::Integer as _;
use num::ToPrimitive;
use num::{BigInt, BigRational, One, Signed};

/// Arbitrary-precision integer used throughout the kernel.
pub type Int = BigInt;
/// Arbitrary-precision rational, always normalized (lowest terms, positive denominator).
pub type Rational = BigRational;

/// Entries of a cached homogeneous row must stay below this bound for the
/// machine-integer determinant paths to be provably overflow-free
/// (see `predicates` for the arithmetic budget).
const SMALL_LIMIT: i64 = 1 << 30;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum GeomError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("expected {expected} indices, got {got}")]
    TupleSize { expected: usize, got: usize },
    #[error("indices must be distinct: {0:?}")]
    RepeatedIndex(Vec<usize>),
    #[error("orientation sign must be +1 or -1, got {0}")]
    InvalidSign(i8),
    #[error("degenerate point tuple {0:?} (general position violated)")]
    Degenerate(Vec<usize>),
    #[error("need at least {needed} points, got {got}")]
    TooFewPoints { needed: usize, got: usize },
}

/// Homogeneous integer row for a point: denominators cleared, last entry the
/// (positive) common denominator. Row-scaling by a positive integer preserves
/// every determinant sign, so these rows are a faithful stand-in for the
/// rational coordinates in all orientation tests.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct HomRow {
    pub big: Vec<Int>,
    /// Present iff every entry fits comfortably in machine integers.
    pub small: Option<Vec<i64>>,
}

impl HomRow {
    fn from_coords(coords: &[Rational]) -> Self {
        let mut scale = Int::one();
        for c in coords {
            scale = scale.lcm(c.denom());
        }
        let mut big: Vec<Int> = coords
            .iter()
            .map(|c| c.numer() * (&scale / c.denom()))
            .collect();
        big.push(scale);
        let small = big
            .iter()
            .map(|v| v.to_i64().filter(|x| x.abs() <= SMALL_LIMIT))
            .collect::<Option<Vec<i64>>>();
        HomRow { big, small }
    }
}

/// A point with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point {
    coords: Vec<Rational>,
    pub(crate) hom: HomRow,
}

impl Point {
    pub fn new(coords: Vec<Rational>) -> Self {
        let hom = HomRow::from_coords(&coords);
        Point { coords, hom }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self::new(
            coords
                .iter()
                .map(|&v| Rational::from_integer(v.into()))
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Rational {
        &self.coords[i]
    }
}

/// An indexed set of points in a fixed ambient dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    dim: usize,
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(dim: usize, points: Vec<Point>) -> Result<Self, GeomError> {
        if dim == 0 {
            return Err(GeomError::DimensionMismatch { expected: 1, got: 0 });
        }
        for p in &points {
            if p.dim() != dim {
                return Err(GeomError::DimensionMismatch {
                    expected: dim,
                    got: p.dim(),
                });
            }
        }
        Ok(PointSet { dim, points })
    }

    pub fn from_int_rows(dim: usize, rows: &[Vec<i64>]) -> Result<Self, GeomError> {
        Self::new(dim, rows.iter().map(|r| Point::from_ints(r)).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// Sub-set with the listed indices removed. Returns the reduced set and,
    /// for each new index, the index it had in `self` (ascending order is
    /// preserved, so orientation signs relative to sorted index order carry
    /// over unchanged).
    pub fn without(&self, drop: &std::collections::BTreeSet<usize>) -> (PointSet, Vec<usize>) {
        let mut points = Vec::new();
        let mut back = Vec::new();
        for (i, p) in self.points.iter().enumerate() {
            if !drop.contains(&i) {
                points.push(p.clone());
                back.push(i);
            }
        }
        (
            PointSet {
                dim: self.dim,
                points,
            },
            back,
        )
    }
}

/// Sign of the (d+1)x(d+1) homogeneous determinant of the given points.
/// In 2-D, +1 means the third point lies to the left of the directed
/// segment through the first two.
pub fn orientation(points: &[&Point], dim: usize) -> Result<i8, GeomError> {
    if points.len() != dim + 1 {
        return Err(GeomError::TupleSize {
            expected: dim + 1,
            got: points.len(),
        });
    }
    for p in points {
        if p.dim() != dim {
            return Err(GeomError::DimensionMismatch {
                expected: dim,
                got: p.dim(),
            });
        }
    }
    Ok(match points {
        [a, b, c] => predicates::sign3(&a.hom, &b.hom, &c.hom),
        [a, b, c, d] => predicates::sign4(&a.hom, &b.hom, &c.hom, &d.hom),
        _ => {
            let rows: Vec<&HomRow> = points.iter().map(|p| &p.hom).collect();
            predicates::sign_general(&rows)
        }
    })
}

/// `orientation` addressed by point indices of a set.
pub fn orientation_indexed(s: &PointSet, tuple: &[usize]) -> Result<i8, GeomError> {
    if tuple.len() != s.dim + 1 {
        return Err(GeomError::TupleSize {
            expected: s.dim + 1,
            got: tuple.len(),
        });
    }
    Ok(sign_tuple(s, tuple))
}

/// Internal unchecked orientation over indices (length must be dim+1).
pub(crate) fn sign_tuple(s: &PointSet, tuple: &[usize]) -> i8 {
    match *tuple {
        [a, b, c] => predicates::sign3(&s.points[a].hom, &s.points[b].hom, &s.points[c].hom),
        [a, b, c, d] => predicates::sign4(
            &s.points[a].hom,
            &s.points[b].hom,
            &s.points[c].hom,
            &s.points[d].hom,
        ),
        _ => {
            let rows: Vec<&HomRow> = tuple.iter().map(|&i| &s.points[i].hom).collect();
            predicates::sign_general(&rows)
        }
    }
}

/// Orientation of a facet's d stored points against query point `x`.
pub(crate) fn facet_side(s: &PointSet, facet: &[usize], x: usize) -> i8 {
    match *facet {
        [a, b] => predicates::sign3(&s.points[a].hom, &s.points[b].hom, &s.points[x].hom),
        [a, b, c] => predicates::sign4(
            &s.points[a].hom,
            &s.points[b].hom,
            &s.points[c].hom,
            &s.points[x].hom,
        ),
        _ => {
            let mut rows: Vec<&HomRow> = facet.iter().map(|&i| &s.points[i].hom).collect();
            rows.push(&s.points[x].hom);
            predicates::sign_general(&rows)
        }
    }
}

/// Number of points of `S` strictly on the positive and negative side of the
/// oriented hyperplane through `facet` (orientation flipped when `orient` is
/// -1). A zero sign along the way is a general-position violation.
pub fn side_counts(
    s: &PointSet,
    facet: &[usize],
    orient: i8,
    // (pos, neg)
) -> Result<(usize, usize), GeomError> {
    if facet.len() != s.dim {
        return Err(GeomError::TupleSize {
            expected: s.dim,
            got: facet.len(),
        });
    }
    if orient != 1 && orient != -1 {
        return Err(GeomError::InvalidSign(orient));
    }
    let mut sorted = facet.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(GeomError::RepeatedIndex(facet.to_vec()));
    }
    let mut pos = 0;
    let mut neg = 0;
    for x in 0..s.len() {
        if facet.contains(&x) {
            continue;
        }
        match facet_side(s, facet, x) * orient {
            1 => pos += 1,
            -1 => neg += 1,
            _ => {
                let mut tuple = facet.to_vec();
                tuple.push(x);
                tuple.sort_unstable();
                return Err(GeomError::Degenerate(tuple));
            }
        }
    }
    Ok((pos, neg))
}

/// Checks that no d+1 points lie on a common hyperplane. On failure returns
/// the lexicographically first violating tuple.
pub fn is_general_position(s: &PointSet) -> Result<(), GeomError> {
    let d = s.dim;
    if s.len() < d + 1 {
        return Ok(());
    }
    let mut combos = combin::Combinations::new(s.len(), d + 1);
    while let Some(tuple) = combos.advance() {
        if sign_tuple(s, tuple) == 0 {
            return Err(GeomError::Degenerate(tuple.to_vec()));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set2(rows: &[[i64; 2]]) -> PointSet {
        PointSet::from_int_rows(2, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn orientation_base_cases() {
        let s = set2(&[[0, 0], [1, 0], [0, 1], [0, -1], [2, 0]]);
        assert_eq!(orientation_indexed(&s, &[0, 1, 2]).unwrap(), 1);
        assert_eq!(orientation_indexed(&s, &[0, 1, 3]).unwrap(), -1);
        assert_eq!(orientation_indexed(&s, &[0, 1, 4]).unwrap(), 0);
    }

    #[test]
    fn orientation_antisymmetry() {
        let s = set2(&[[0, 0], [3, 1], [1, 4]]);
        let a = orientation_indexed(&s, &[0, 1, 2]).unwrap();
        let b = orientation_indexed(&s, &[1, 0, 2]).unwrap();
        assert_eq!(a, -b);
    }

    #[test]
    fn orientation_rejects_bad_tuples() {
        let s = set2(&[[0, 0], [1, 0], [0, 1]]);
        assert!(matches!(
            orientation_indexed(&s, &[0, 1]),
            Err(GeomError::TupleSize { .. })
        ));
    }

    #[test]
    fn side_counts_triangle() {
        let s = set2(&[[0, 0], [4, 0], [0, 4]]);
        // (0,4) lies to the left of (0,0)->(4,0)
        assert_eq!(side_counts(&s, &[0, 1], 1).unwrap(), (1, 0));
        assert_eq!(side_counts(&s, &[0, 1], -1).unwrap(), (0, 1));
    }

    #[test]
    fn side_counts_square_diagonal() {
        let s = set2(&[[0, 0], [2, 0], [2, 2], [0, 2]]);
        assert_eq!(side_counts(&s, &[0, 2], 1).unwrap(), (1, 1));
        assert_eq!(side_counts(&s, &[0, 2], -1).unwrap(), (1, 1));
    }

    #[test]
    fn general_position_detects_collinear() {
        let ok = set2(&[[0, 0], [1, 0], [0, 1]]);
        assert!(is_general_position(&ok).is_ok());
        let bad = set2(&[[0, 0], [1, 1], [2, 2]]);
        assert_eq!(
            is_general_position(&bad),
            Err(GeomError::Degenerate(vec![0, 1, 2]))
        );
    }

    #[test]
    fn general_position_3d_simplex() {
        let s = PointSet::from_int_rows(
            3,
            &[
                vec![0, 0, 0],
                vec![1, 0, 0],
                vec![0, 1, 0],
                vec![0, 0, 1],
            ],
        )
        .unwrap();
        assert!(is_general_position(&s).is_ok());
    }

    #[test]
    fn rational_points_match_scaled_integers() {
        // Same configuration expressed with denominators: signs must agree.
        let a = Point::new(vec![
            "1/3".parse().unwrap(),
            "1/7".parse().unwrap(),
        ]);
        let b = Point::new(vec!["2/3".parse().unwrap(), "0".parse().unwrap()]);
        let c = Point::new(vec!["1/2".parse().unwrap(), "5/7".parse().unwrap()]);
        let s1 = orientation(&[&a, &b, &c], 2).unwrap();
        let ai = Point::from_ints(&[14, 6]);
        let bi = Point::from_ints(&[28, 0]);
        let ci = Point::from_ints(&[21, 30]);
        let s2 = orientation(&[&ai, &bi, &ci], 2).unwrap();
        assert_eq!(s1, s2);
        assert_ne!(s1, 0);
    }
}
