//! Constructive half-net search in the plane and exact ε-net verification
//! in any dimension.

use super::{HalfspaceWitness, StructureError};
use crate::geom::combin::Combinations;
use crate::geom::{
    convex_hull_2d, facet_side, orientation, sign_tuple, GeomError, Point, PointSet, Rational,
};

/// d+1 hull vertices forming an ε-net with respect to closed halfspaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialNet {
    pub vertices: Vec<usize>,
    pub epsilon: Rational,
}

impl SimplicialNet {
    pub fn half(vertices: Vec<usize>) -> Self {
        SimplicialNet {
            vertices,
            epsilon: Rational::new(1.into(), 2.into()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfNetRun {
    pub net: SimplicialNet,
    pub iterations: usize,
    pub hull_size: usize,
}

/// Builds a half-net of a planar set by triangle improvement.
///
/// A triangle edge is good when the closed halfplane of its supporting line
/// toward the opposite vertex holds at least n/2 points. Starting from the
/// three smallest-index hull vertices, the unique bad edge's opposite
/// vertex is swapped for a hull vertex beyond that edge until every edge is
/// good. The count of hull vertices strictly beyond the bad edge must drop
/// every round, which bounds the rounds by the hull size; both facts are
/// enforced, not assumed.
pub fn find_half_net_2d(s: &PointSet) -> Result<HalfNetRun, StructureError> {
    let hull = convex_hull_2d(s)?;
    let h = hull.len();
    let n = s.len();
    let mut sorted_hull = hull.clone();
    sorted_hull.sort_unstable();
    let mut tri = [sorted_hull[0], sorted_hull[1], sorted_hull[2]];
    let mut prev_far: Option<usize> = None;
    let mut iterations = 0usize;

    loop {
        let mut bad = Vec::new();
        for j in 0..3 {
            let (u, v, w) = (tri[j], tri[(j + 1) % 3], tri[(j + 2) % 3]);
            let toward = sign_tuple(s, &[u, v, w]);
            if toward == 0 {
                return Err(GeomError::Degenerate(vec![u, v, w]).into());
            }
            let mut closed = 0usize;
            for x in 0..n {
                if x == u || x == v {
                    closed += 1; // boundary points belong to the closed halfplane
                    continue;
                }
                let sg = facet_side(s, &[u, v], x);
                if sg == 0 {
                    return Err(GeomError::Degenerate(vec![u, v, x]).into());
                }
                if sg == toward {
                    closed += 1;
                }
            }
            if 2 * closed < n {
                bad.push((u, v, toward));
            }
        }

        let Some(&(u, v, toward)) = bad.first() else {
            tri.sort_unstable();
            return Ok(HalfNetRun {
                net: SimplicialNet::half(tri.to_vec()),
                iterations,
                hull_size: h,
            });
        };
        if bad.len() > 1 {
            return Err(StructureError::IterationInvariant(format!(
                "triangle {tri:?} has {} bad edges",
                bad.len()
            )));
        }

        // Hull vertices strictly beyond the bad edge.
        let far: Vec<usize> = hull
            .iter()
            .copied()
            .filter(|&c| facet_side(s, &[u, v], c) == -toward)
            .collect();
        if far.is_empty() {
            return Err(StructureError::IterationInvariant(format!(
                "bad edge ({u},{v}) has no hull vertex beyond it"
            )));
        }
        if let Some(p) = prev_far {
            if far.len() >= p {
                return Err(StructureError::IterationInvariant(format!(
                    "candidates beyond the bad edge grew from {p} to {}",
                    far.len()
                )));
            }
        }
        prev_far = Some(far.len());

        // Deterministic pick: the angular extreme as seen from the edge
        // midpoint, lowest index on ties.
        let mid = Point::new(vec![
            (s.point(u).coord(0) + s.point(v).coord(0)) / Rational::from_integer(2.into()),
            (s.point(u).coord(1) + s.point(v).coord(1)) / Rational::from_integer(2.into()),
        ]);
        let mut best = far[0];
        for &c in &far[1..] {
            let o = orientation(&[&mid, s.point(best), s.point(c)], 2)?;
            if o == 1 || (o == 0 && c < best) {
                best = c;
            }
        }

        tri = [u, v, best];
        iterations += 1;
        if iterations > h {
            return Err(StructureError::IterationInvariant(format!(
                "no good triangle after {iterations} rounds on a hull of {h}"
            )));
        }
    }
}

/// Checks the ε-net property against every canonical closed halfspace:
/// each hyperplane spanned by d points of `S`, both orientations, boundary
/// included. Returns the first violating halfspace, if any.
pub fn verify_eps_net(
    s: &PointSet,
    net: &[usize],
    eps: &Rational,
) -> Result<Option<HalfspaceWitness>, GeomError> {
    let d = s.dim();
    let n = s.len();
    if n < d + 1 {
        return Err(GeomError::TooFewPoints { needed: d + 1, got: n });
    }
    let threshold = eps * Rational::from_integer((n as i64).into());
    let mut sides = vec![0i8; n];
    let mut combos = Combinations::new(n, d);
    while let Some(facet) = combos.advance() {
        let mut pos = 0usize;
        let mut neg = 0usize;
        for x in 0..n {
            if facet.contains(&x) {
                sides[x] = 0;
                continue;
            }
            let sg = facet_side(s, facet, x);
            if sg == 0 {
                let mut tuple = facet.to_vec();
                tuple.push(x);
                tuple.sort_unstable();
                return Err(GeomError::Degenerate(tuple));
            }
            sides[x] = sg;
            if sg == 1 {
                pos += 1;
            } else {
                neg += 1;
            }
        }
        for sign in [1i8, -1] {
            let strict = if sign == 1 { pos } else { neg };
            let closed = strict + d;
            if Rational::from_integer((closed as i64).into()) <= threshold {
                continue;
            }
            let hit = net.iter().any(|&t| sides[t] * sign >= 0);
            if !hit {
                return Ok(Some(HalfspaceWitness {
                    facet: facet.to_vec(),
                    sign,
                    count: closed,
                }));
            }
        }
    }
    Ok(None)
}
