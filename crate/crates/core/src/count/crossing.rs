//! Convex-quadrilateral counting and the exact identity tying it to the
//! (≤k)-edge vector.

use super::count_facets;
use crate::bounds::binom;
use crate::geom::combin::Combinations;
use crate::geom::{sign_tuple, GeomError, PointSet, Rational};
use num::BigInt;

/// Number of 4-subsets in convex position. Equals the number of edge
/// crossings when the complete graph is drawn with straight edges on `S`.
pub fn convex_quadrilaterals(s: &PointSet) -> Result<u64, GeomError> {
    if s.dim() != 2 {
        return Err(GeomError::DimensionMismatch {
            expected: 2,
            got: s.dim(),
        });
    }
    let n = s.len();
    let mut count = 0u64;
    if n < 4 {
        return Ok(count);
    }
    let mut combos = Combinations::new(n, 4);
    while let Some(q) = combos.advance() {
        if is_convex_quad(s, q)? {
            count += 1;
        }
    }
    Ok(count)
}

/// A 4-point subset in general position is convex iff none of the points
/// lies inside the triangle of the other three.
fn is_convex_quad(s: &PointSet, q: &[usize]) -> Result<bool, GeomError> {
    for hole in 0..4 {
        let tri: Vec<usize> = (0..4).filter(|&i| i != hole).map(|i| q[i]).collect();
        let x = q[hole];
        let base_sign = sign_tuple(s, &tri);
        if base_sign == 0 {
            let mut tuple = tri.clone();
            tuple.sort_unstable();
            return Err(GeomError::Degenerate(tuple));
        }
        let mut inside = true;
        for edge in 0..3 {
            let t = [tri[edge], tri[(edge + 1) % 3], x];
            let sg = sign_tuple(s, &t);
            if sg == 0 {
                let mut tuple = t.to_vec();
                tuple.sort_unstable();
                return Err(GeomError::Degenerate(tuple));
            }
            if sg != base_sign {
                inside = false;
                break;
            }
        }
        if inside {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Both sides of the crossing identity, evaluated exactly: the direct
/// quadrilateral count against the weighted (≤k)-edge sum with its
/// odd-n correction term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingIdentity {
    pub lhs: u64,
    pub rhs: Rational,
    pub equal: bool,
}

pub fn crossing_identity(s: &PointSet) -> Result<CrossingIdentity, GeomError> {
    if s.dim() != 2 {
        return Err(GeomError::DimensionMismatch {
            expected: 2,
            got: s.dim(),
        });
    }
    let n = s.len();
    if n < 4 {
        return Err(GeomError::TooFewPoints { needed: 4, got: n });
    }
    let fv = count_facets(s)?;
    let lhs = convex_quadrilaterals(s)?;

    // Sum over k < (n-2)/2, i.e. k <= ceil((n-2)/2) - 1 for integer k.
    let k_hi = (n - 1) / 2; // exclusive
    let mut rhs = Rational::from_integer(0.into());
    for k in 0..k_hi {
        let coeff = n as i64 - 2 * k as i64 - 3;
        rhs += Rational::from_integer(BigInt::from(coeff) * BigInt::from(fv.leq(k)));
    }
    rhs -= Rational::new(3.into(), 4.into()) * Rational::from_integer(binom(n as i64, 3).into());
    if n % 2 == 1 {
        let c = Rational::new(1.into(), 4.into())
            * Rational::from_integer(BigInt::from(fv.leq((n - 3) / 2)));
        rhs += c;
    }

    let equal = Rational::from_integer(BigInt::from(lhs)) == rhs;
    Ok(CrossingIdentity { lhs, rhs, equal })
}
