//! Centerpoint search over hyperplane-arrangement vertices, with an exact
//! open-halfspace verifier as the final authority.

use super::{HalfspaceWitness, StructureError};
use crate::geom::combin::Combinations;
use crate::geom::{det_big, facet_side, GeomError, Int, Point, PointSet, Rational};
use num::{Signed, Zero};

/// A candidate centerpoint together with the open-halfspace counts that
/// certify it: no listed count exceeds ceil(d*n/(d+1)).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Centerpoint {
    pub point: Point,
    pub certificate: Vec<HalfspaceCount>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfspaceCount {
    pub facet: Vec<usize>,
    pub sign: i8,
    /// Points strictly inside the open halfspace.
    pub count: usize,
    /// True for the parallel translate through the candidate itself.
    pub through_candidate: bool,
}

fn ceil_bound(n: usize, d: usize) -> usize {
    (d * n + d) / (d + 1)
}

/// Cofactors of the last row of the homogeneous matrix (facet rows plus a
/// query row): the hyperplane equation evaluated at hom row h is
/// sum_j cof[j] * h[j].
fn hyperplane_cofactors(s: &PointSet, facet: &[usize]) -> Vec<Int> {
    let d = s.dim();
    let mut cof = Vec::with_capacity(d + 1);
    for j in 0..=d {
        let minor: Vec<Vec<Int>> = facet
            .iter()
            .map(|&i| {
                let row = &s.point(i).hom.big;
                (0..=d).filter(|&c| c != j).map(|c| row[c].clone()).collect()
            })
            .collect();
        let refs: Vec<&Vec<Int>> = minor.iter().collect();
        let sign = if (d + j) % 2 == 0 { 1 } else { -1 };
        cof.push(det_big(&refs) * Int::from(sign));
    }
    cof
}

fn eval(cof: &[Int], hom: &[Int]) -> Int {
    cof.iter().zip(hom).map(|(c, h)| c * h).sum()
}

/// Checks that no open halfspace avoiding `c` holds more than
/// ceil(d*n/(d+1)) points: all halfspaces bounded by hyperplanes through d
/// points of `S` with `c` not strictly inside, plus the parallel translates
/// through `c` itself.
pub fn verify_centerpoint(
    s: &PointSet,
    c: &Point,
) -> Result<Option<HalfspaceWitness>, GeomError> {
    verify_with_certificate(s, c).map(|r| r.err())
}

fn verify_with_certificate(
    s: &PointSet,
    c: &Point,
) -> Result<Result<Vec<HalfspaceCount>, HalfspaceWitness>, GeomError> {
    let d = s.dim();
    let n = s.len();
    if c.dim() != d {
        return Err(GeomError::DimensionMismatch {
            expected: d,
            got: c.dim(),
        });
    }
    if n < d + 1 {
        return Err(GeomError::TooFewPoints { needed: d + 1, got: n });
    }
    let bound = ceil_bound(n, d);
    let mut cert = Vec::new();
    let mut combos = Combinations::new(n, d);
    while let Some(facet) = combos.advance() {
        let cof = hyperplane_cofactors(s, facet);
        let g_c = eval(&cof, &c.hom.big);
        let w_c = c.hom.big.last().unwrap();

        let mut pos = 0usize;
        let mut neg = 0usize;
        let mut shifted_pos = 0usize;
        let mut shifted_neg = 0usize;
        for x in 0..n {
            let hom_x = &s.point(x).hom.big;
            if !facet.contains(&x) {
                let sg = facet_side(s, facet, x);
                if sg == 0 {
                    let mut tuple = facet.to_vec();
                    tuple.push(x);
                    tuple.sort_unstable();
                    return Err(GeomError::Degenerate(tuple));
                }
                if sg == 1 {
                    pos += 1;
                } else {
                    neg += 1;
                }
            }
            // Side of the parallel hyperplane through c.
            let shifted = eval(&cof, hom_x) * w_c - &g_c * hom_x.last().unwrap();
            if shifted.is_positive() {
                shifted_pos += 1;
            } else if shifted.is_negative() {
                shifted_neg += 1;
            }
        }

        for sign in [1i8, -1] {
            let strict = if sign == 1 { pos } else { neg };
            let c_strictly_inside = match sign {
                1 => g_c.is_positive(),
                _ => g_c.is_negative(),
            };
            if !c_strictly_inside {
                if strict > bound {
                    return Ok(Err(HalfspaceWitness {
                        facet: facet.to_vec(),
                        sign,
                        count: strict,
                    }));
                }
                cert.push(HalfspaceCount {
                    facet: facet.to_vec(),
                    sign,
                    count: strict,
                    through_candidate: false,
                });
            }
            let shifted = if sign == 1 { shifted_pos } else { shifted_neg };
            if shifted > bound {
                return Ok(Err(HalfspaceWitness {
                    facet: facet.to_vec(),
                    sign,
                    count: shifted,
                }));
            }
            cert.push(HalfspaceCount {
                facet: facet.to_vec(),
                sign,
                count: shifted,
                through_candidate: true,
            });
        }
    }
    Ok(Ok(cert))
}

/// Searches arrangement vertices (intersections of d hyperplanes spanned by
/// d-subsets of `S`) for a point passing `verify_centerpoint`, in a fixed
/// enumeration order.
pub fn find_centerpoint(s: &PointSet) -> Result<Centerpoint, StructureError> {
    let d = s.dim();
    let n = s.len();
    if n < d + 1 {
        return Err(StructureError::Geom(GeomError::TooFewPoints {
            needed: d + 1,
            got: n,
        }));
    }
    let facets: Vec<Vec<usize>> = Combinations::new(n, d).collect();
    let cofs: Vec<Vec<Int>> = facets.iter().map(|f| hyperplane_cofactors(s, f)).collect();

    let mut candidates = 0usize;
    let mut picks = Combinations::new(cofs.len(), d);
    while let Some(chosen) = picks.advance() {
        let Some(point) = intersect(&cofs, chosen, d) else {
            continue;
        };
        candidates += 1;
        match verify_with_certificate(s, &point)? {
            Ok(certificate) => {
                return Ok(Centerpoint { point, certificate });
            }
            Err(_) => continue,
        }
    }
    Err(StructureError::SearchExhausted { candidates })
}

/// Solves the d x d rational system formed by the chosen hyperplanes;
/// `None` when they do not meet in a single point.
fn intersect(cofs: &[Vec<Int>], chosen: &[usize], d: usize) -> Option<Point> {
    let mut m: Vec<Vec<Rational>> = chosen
        .iter()
        .map(|&f| {
            let c = &cofs[f];
            let mut row: Vec<Rational> = c[..d]
                .iter()
                .map(|v| Rational::from_integer(v.clone()))
                .collect();
            row.push(Rational::from_integer(-c[d].clone()));
            row
        })
        .collect();

    for col in 0..d {
        let pivot = (col..d).find(|&r| !m[r][col].is_zero())?;
        m.swap(pivot, col);
        let pv = m[col][col].clone();
        for j in col..=d {
            m[col][j] = &m[col][j] / &pv;
        }
        for r in 0..d {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for j in col..=d {
                    let delta = &factor * &m[col][j];
                    m[r][j] = &m[r][j] - delta;
                }
            }
        }
    }
    Some(Point::new((0..d).map(|i| m[i][d].clone()).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set2(rows: &[[i64; 2]]) -> PointSet {
        PointSet::from_int_rows(2, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn triangle_centroid_passes() {
        let s = set2(&[[0, 0], [3, 0], [0, 3]]);
        let centroid = Point::new(vec![
            Rational::new(1.into(), 1.into()),
            Rational::new(1.into(), 1.into()),
        ]);
        assert_eq!(verify_centerpoint(&s, &centroid).unwrap(), None);
    }

    #[test]
    fn off_center_point_fails_on_bigger_sets() {
        // A point far outside leaves some open halfspace with all points.
        let s = set2(&[[0, 0], [7, 1], [5, 6], [1, 5], [3, 3], [2, 7], [8, 4]]);
        let outside = Point::from_ints(&[100, 100]);
        let w = verify_centerpoint(&s, &outside).unwrap();
        assert!(w.is_some());
    }

    #[test]
    fn finder_returns_verified_point() {
        let s = set2(&[[0, 0], [3, 0], [0, 3]]);
        let cp = find_centerpoint(&s).unwrap();
        assert_eq!(verify_centerpoint(&s, &cp.point).unwrap(), None);
        let bound = ceil_bound(3, 2);
        assert!(cp.certificate.iter().all(|h| h.count <= bound));
    }
}
