//! Convex hulls (2-D cycle and onion layers) and hull-vertex detection in
//! any dimension.

use super::combin::Combinations;
use super::{facet_side, sign_tuple, GeomError, PointSet};
use std::collections::BTreeSet;

/// CCW cycle of hull vertex indices. The cycle starts at the smallest
/// participating index, so equal inputs give identical output.
pub fn convex_hull_2d(s: &PointSet) -> Result<Vec<usize>, GeomError> {
    require_dim2(s)?;
    if s.len() < 3 {
        return Err(GeomError::TooFewPoints {
            needed: 3,
            got: s.len(),
        });
    }
    let all: Vec<usize> = (0..s.len()).collect();
    hull_of(s, &all)
}

/// Monotone-chain hull over a subset of indices, returned as a CCW cycle.
/// Any collinear triple encountered is reported as degenerate.
pub(crate) fn hull_of(s: &PointSet, idxs: &[usize]) -> Result<Vec<usize>, GeomError> {
    let mut order = idxs.to_vec();
    order.sort_unstable_by(|&a, &b| {
        let pa = s.point(a);
        let pb = s.point(b);
        pa.coord(0)
            .cmp(pb.coord(0))
            .then_with(|| pa.coord(1).cmp(pb.coord(1)))
    });
    for w in order.windows(2) {
        if s.point(w[0]).coords() == s.point(w[1]).coords() {
            return Err(GeomError::Degenerate(vec![w[0], w[1]]));
        }
    }

    let chain = |seq: &mut dyn Iterator<Item = usize>| -> Result<Vec<usize>, GeomError> {
        let mut out: Vec<usize> = Vec::new();
        for i in seq {
            while out.len() >= 2 {
                let t = sign_tuple(s, &[out[out.len() - 2], out[out.len() - 1], i]);
                if t == 0 {
                    let mut tuple = vec![out[out.len() - 2], out[out.len() - 1], i];
                    tuple.sort_unstable();
                    return Err(GeomError::Degenerate(tuple));
                }
                if t == 1 {
                    break;
                }
                out.pop();
            }
            out.push(i);
        }
        Ok(out)
    };

    let lower = chain(&mut order.iter().copied())?;
    let upper = chain(&mut order.iter().rev().copied())?;
    let mut cycle = lower;
    cycle.pop();
    cycle.extend_from_slice(&upper[..upper.len() - 1]);

    // Canonical rotation: begin at the smallest index on the hull.
    let start = cycle
        .iter()
        .enumerate()
        .min_by_key(|(_, &v)| v)
        .map(|(i, _)| i)
        .unwrap();
    cycle.rotate_left(start);
    Ok(cycle)
}

/// Onion peeling: repeatedly remove the hull of what remains. Layers
/// partition the index set; a final remnant of fewer than three points
/// forms the innermost layer verbatim.
pub fn convex_layers_2d(s: &PointSet) -> Result<Vec<Vec<usize>>, GeomError> {
    require_dim2(s)?;
    let mut live: Vec<usize> = (0..s.len()).collect();
    let mut layers = Vec::new();
    while !live.is_empty() {
        if live.len() < 3 {
            layers.push(live.clone());
            break;
        }
        let hull = hull_of(s, &live)?;
        let on_hull: BTreeSet<usize> = hull.iter().copied().collect();
        live.retain(|i| !on_hull.contains(i));
        layers.push(hull);
    }
    Ok(layers)
}

/// Hull vertices in any dimension, via the facet witness: a point is
/// extreme iff it lies on a (d-1)-face whose supporting hyperplane has all
/// remaining points strictly on one side.
pub fn hull_vertices(s: &PointSet) -> Result<BTreeSet<usize>, GeomError> {
    let d = s.dim();
    let n = s.len();
    if n < d + 1 {
        return Err(GeomError::TooFewPoints { needed: d + 1, got: n });
    }
    let mut out = BTreeSet::new();
    let mut combos = Combinations::new(n, d);
    while let Some(facet) = combos.advance() {
        let mut pos = 0usize;
        let mut neg = 0usize;
        for x in 0..n {
            if facet.contains(&x) {
                continue;
            }
            match facet_side(s, facet, x) {
                1 => pos += 1,
                -1 => neg += 1,
                _ => {
                    let mut tuple = facet.to_vec();
                    tuple.push(x);
                    tuple.sort_unstable();
                    return Err(GeomError::Degenerate(tuple));
                }
            }
            if pos > 0 && neg > 0 {
                break;
            }
        }
        if pos == 0 || neg == 0 {
            out.extend(facet.iter().copied());
        }
    }
    Ok(out)
}

fn require_dim2(s: &PointSet) -> Result<(), GeomError> {
    if s.dim() != 2 {
        return Err(GeomError::DimensionMismatch {
            expected: 2,
            got: s.dim(),
        });
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
    fn hull_triangle() {
        let s = set2(&[[0, 0], [4, 1], [1, 4]]);
        assert_eq!(convex_hull_2d(&s).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn hull_square_with_interior() {
        let s = set2(&[[0, 0], [6, 0], [6, 6], [0, 6], [3, 2]]);
        let h = convex_hull_2d(&s).unwrap();
        assert_eq!(h, vec![0, 1, 2, 3]);
    }

    #[test]
    fn hull_is_ccw() {
        let s = set2(&[[0, 0], [6, 0], [6, 6], [0, 6], [3, 2]]);
        let h = convex_hull_2d(&s).unwrap();
        for i in 0..h.len() {
            let t = [
                h[i],
                h[(i + 1) % h.len()],
                h[(i + 2) % h.len()],
            ];
            assert_eq!(sign_tuple(&s, &t), 1);
        }
    }

    #[test]
    fn layers_nested_triangles() {
        let s = set2(&[[0, 0], [12, 0], [1, 12], [4, 3], [6, 4], [4, 5]]);
        let layers = convex_layers_2d(&s).unwrap();
        assert_eq!(layers.len(), 2);
        assert_eq!(layers[0].len(), 3);
        assert_eq!(layers[1].len(), 3);
    }

    #[test]
    fn layers_partition() {
        let s = set2(&[[0, 0], [9, 1], [3, 8], [4, 3], [11, 7], [5, 5], [2, 3]]);
        let layers = convex_layers_2d(&s).unwrap();
        let mut seen: Vec<usize> = layers.concat();
        seen.sort_unstable();
        assert_eq!(seen, (0..s.len()).collect::<Vec<_>>());
    }

    #[test]
    fn hull_vertices_matches_2d_hull() {
        let s = set2(&[[0, 0], [9, 1], [3, 8], [4, 3], [11, 7], [5, 5], [2, 3]]);
        let fancy = hull_vertices(&s).unwrap();
        let cycle: BTreeSet<usize> = convex_hull_2d(&s).unwrap().into_iter().collect();
        assert_eq!(fancy, cycle);
    }

    #[test]
    fn hull_vertices_simplex_and_centroid() {
        let s = PointSet::from_int_rows(
            3,
            &[
                vec![0, 0, 0],
                vec![4, 0, 0],
                vec![0, 4, 0],
                vec![0, 0, 4],
                vec![1, 1, 1],
            ],
        )
        .unwrap();
        let hv = hull_vertices(&s).unwrap();
        assert_eq!(hv, [0usize, 1, 2, 3].into_iter().collect());
    }

    #[test]
    fn degenerate_rejected() {
        let s = set2(&[[0, 0], [2, 2], [4, 4], [0, 5]]);
        assert!(matches!(
            convex_hull_2d(&s),
            Err(GeomError::Degenerate(_))
        ));
    }
}
