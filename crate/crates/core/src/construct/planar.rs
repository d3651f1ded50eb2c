//! Planar tight configurations: the basic three-ray family and the extended
//! A/B/C family that stays tight through the improved bound's range.

use std::str::FromStr;

use super::{
    data, gen_tight_simplicial, subchain_at, ChainLabel, ChainedConfig, ConstructError,
    ConstructionReport, PropertyCheck,
};
use crate::geom::{is_general_position, GeomError, Point, PointSet, Rational};

/// Three chains of n/3 points each, one per ray of a symmetric planar fan,
/// with prefix counts meeting the basic bound exactly for k up to n/3 - 1.
pub fn gen_tight_planar_basic(n: usize) -> Result<ChainedConfig, ConstructError> {
    if n == 0 || n % 3 != 0 {
        return Err(ConstructError::Divisibility { n, modulus: 3 });
    }
    gen_tight_simplicial(2, n / 3)
}

/// The order-3 integer map realizing the three-fold chain symmetry:
/// (x, y) -> (-y, x - y).
fn sym_image(p: &[Rational]) -> Vec<Rational> {
    vec![-&p[1], &p[0] - &p[1]]
}

/// Three chains of 4m points (m = n/12), each split into sub-chains
/// A (outer 2m), B (m), C (inner m). Tight for the improved bound out to
/// k = 5n/12 - 1; every defining property is re-verified exactly before the
/// configuration is returned.
///
/// Certified coordinates exist for n up to 72; larger sizes report
/// `ConstructionFailed`.
pub fn gen_tight_planar_extended(n: usize) -> Result<ChainedConfig, ConstructError> {
    if n == 0 || n % 12 != 0 {
        return Err(ConstructError::Divisibility { n, modulus: 12 });
    }
    let m = n / 12;
    let table = data::chain0_table(m).ok_or_else(|| {
        ConstructError::ConstructionFailed(format!(
            "no certified coordinate table for n = {n} (largest supported is 72)"
        ))
    })?;
    let chain0: Vec<Vec<Rational>> = table
        .iter()
        .map(|&(x, y)| {
            Ok(vec![
                Rational::from_str(x).map_err(|e| {
                    ConstructError::ConstructionFailed(format!("bad coordinate {x}: {e}"))
                })?,
                Rational::from_str(y).map_err(|e| {
                    ConstructError::ConstructionFailed(format!("bad coordinate {y}: {e}"))
                })?,
            ])
        })
        .collect::<Result<_, ConstructError>>()?;

    let mut points = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    let mut chain = chain0;
    for c in 0..3 {
        for (pos, coords) in chain.iter().enumerate() {
            points.push(Point::new(coords.clone()));
            labels.push(ChainLabel {
                chain: c,
                sub: Some(subchain_at(pos, m)),
                pos,
            });
        }
        chain = chain.iter().map(|p| sym_image(p)).collect();
    }
    let set = PointSet::new(2, points)?;
    let cfg = ChainedConfig::new(set, labels, 3, m)?;
    is_general_position(cfg.set())?;
    let report = verify_extended_properties(&cfg)?;
    if let Some(fail) = report.failures().first() {
        return Err(ConstructError::ConstructionFailed(format!(
            "property '{}' failed: {}",
            fail.name,
            fail.witness.as_deref().unwrap_or("no witness")
        )));
    }
    Ok(cfg)
}

/// Squared euclidean distance between two points of the set.
fn dist2(s: &PointSet, a: usize, b: usize) -> Rational {
    let dx = s.point(a).coord(0) - s.point(b).coord(0);
    let dy = s.point(a).coord(1) - s.point(b).coord(1);
    &dx * &dx + &dy * &dy
}

/// Exact check of the five defining properties of the extended planar
/// family. Per chain (with q = 3m points in A∪B and m in C):
///
/// 1. subchain convexity: consecutive A∪B triples turn clockwise,
///    consecutive C triples counterclockwise;
/// 2. gap structure: squared distances from the chain head strictly
///    increase along A∪B, and the chord step bridging A to B is strictly
///    the longest;
/// 3. spanning-line sidedness: every line through two A∪B points of a
///    chain, directed outward-to-inward, has the whole next chain
///    (counterclockwise) strictly to its right and both the chain's own C
///    and the whole remaining chain strictly to its left;
/// 4. inner-line separation: every line through two C points of a chain
///    puts that chain's A strictly on one side and its B strictly on the
///    other, with the other two C sub-chains strictly to its right;
/// 5. inner-triangle containment: the triangle of the three innermost B
///    points strictly contains every C point.
///
/// Each check reports pass/fail with the first offending tuple; a zero
/// orientation counts as a failure of the check that met it.
pub fn verify_extended_properties(
    cfg: &ChainedConfig,
) -> Result<ConstructionReport, ConstructError> {
    if cfg.set().dim() != 2 {
        return Err(ConstructError::Geom(GeomError::DimensionMismatch {
            expected: 2,
            got: cfg.set().dim(),
        }));
    }
    if cfg.chains() != 3 || !cfg.has_subchains() {
        return Err(ConstructError::LabelShape(
            "extended verification needs three chains with A/B/C tags".into(),
        ));
    }
    let s = cfg.set();
    let m = cfg.m();
    let q = 3 * m;
    let per = 4 * m;
    let orient = |a: usize, b: usize, c: usize| crate::geom::sign_tuple(s, &[a, b, c]);

    let mut checks = Vec::with_capacity(5);

    // (1) subchain convexity
    let mut fail = None;
    'conv: for c in 0..3 {
        for (lo, hi, want, tag) in [(0usize, q, -1i8, "A∪B"), (q, per, 1i8, "C")] {
            for p in lo..hi.saturating_sub(2) {
                let t = [cfg.at(c, p), cfg.at(c, p + 1), cfg.at(c, p + 2)];
                if orient(t[0], t[1], t[2]) != want {
                    fail = Some(format!(
                        "chain {c}, {tag} positions {p}..{}: orientation != {want}",
                        p + 2
                    ));
                    break 'conv;
                }
            }
        }
    }
    checks.push(match fail {
        None => PropertyCheck::passing("subchain convexity"),
        Some(w) => PropertyCheck::failing("subchain convexity", w),
    });

    // (2) gap structure
    let mut fail = None;
    'gap: for c in 0..3 {
        let head = cfg.at(c, 0);
        let d2: Vec<Rational> = (0..q).map(|p| dist2(s, head, cfg.at(c, p))).collect();
        for p in 0..q - 1 {
            if d2[p] >= d2[p + 1] {
                fail = Some(format!(
                    "chain {c}: head distance not increasing at positions {p},{}",
                    p + 1
                ));
                break 'gap;
            }
        }
        let steps: Vec<Rational> = (0..q - 1)
            .map(|p| dist2(s, cfg.at(c, p), cfg.at(c, p + 1)))
            .collect();
        let hole = 2 * m - 1;
        for (p, st) in steps.iter().enumerate() {
            if p != hole && st >= &steps[hole] {
                fail = Some(format!(
                    "chain {c}: chord step {p} is not shorter than the A→B step {hole}"
                ));
                break 'gap;
            }
        }
    }
    checks.push(match fail {
        None => PropertyCheck::passing("gap structure"),
        Some(w) => PropertyCheck::failing("gap structure", w),
    });

    // (3) spanning-line sidedness
    let mut fail = None;
    'span: for c in 0..3 {
        for p in 0..q {
            for t in p + 1..q {
                let (a, b) = (cfg.at(c, p), cfg.at(c, t));
                for u in 0..per {
                    if orient(a, b, cfg.at((c + 1) % 3, u)) != -1 {
                        fail = Some(format!(
                            "chain {c} pair ({p},{t}): next chain position {u} not to the right"
                        ));
                        break 'span;
                    }
                    if orient(a, b, cfg.at((c + 2) % 3, u)) != 1 {
                        fail = Some(format!(
                            "chain {c} pair ({p},{t}): far chain position {u} not to the left"
                        ));
                        break 'span;
                    }
                }
                for u in q..per {
                    if orient(a, b, cfg.at(c, u)) != 1 {
                        fail = Some(format!(
                            "chain {c} pair ({p},{t}): own C position {u} not to the left"
                        ));
                        break 'span;
                    }
                }
            }
        }
    }
    checks.push(match fail {
        None => PropertyCheck::passing("spanning-line sidedness"),
        Some(w) => PropertyCheck::failing("spanning-line sidedness", w),
    });

    // (4) inner-line separation
    let mut fail = None;
    'inner: for c in 0..3 {
        for p in q..per {
            for t in p + 1..per {
                let (a, b) = (cfg.at(c, p), cfg.at(c, t));
                let sa: Vec<i8> = (0..2 * m).map(|u| orient(a, b, cfg.at(c, u))).collect();
                let sb: Vec<i8> = (2 * m..q).map(|u| orient(a, b, cfg.at(c, u))).collect();
                let side_a = sa[0];
                let side_b = sb[0];
                if side_a == 0
                    || side_b == 0
                    || side_a == side_b
                    || sa.iter().any(|&v| v != side_a)
                    || sb.iter().any(|&v| v != side_b)
                {
                    fail = Some(format!(
                        "chain {c} C pair ({p},{t}) does not separate A from B"
                    ));
                    break 'inner;
                }
                for cc in 0..3 {
                    if cc == c {
                        continue;
                    }
                    for u in q..per {
                        if orient(a, b, cfg.at(cc, u)) != -1 {
                            fail = Some(format!(
                                "chain {c} C pair ({p},{t}): chain {cc} C position {u} not to the right"
                            ));
                            break 'inner;
                        }
                    }
                }
            }
        }
    }
    checks.push(match fail {
        None => PropertyCheck::passing("inner-line separation"),
        Some(w) => PropertyCheck::failing("inner-line separation", w),
    });

    // (5) inner-triangle containment
    let tri = [cfg.at(0, q - 1), cfg.at(1, q - 1), cfg.at(2, q - 1)];
    let base = orient(tri[0], tri[1], tri[2]);
    let mut fail = if base == 0 {
        Some("innermost B points are collinear".to_string())
    } else {
        None
    };
    if fail.is_none() {
        'cont: for c in 0..3 {
            for p in q..per {
                let x = cfg.at(c, p);
                for j in 0..3 {
                    if orient(tri[j], tri[(j + 1) % 3], x) != base {
                        fail = Some(format!(
                            "chain {c} C position {p} outside the inner B triangle"
                        ));
                        break 'cont;
                    }
                }
            }
        }
    }
    checks.push(match fail {
        None => PropertyCheck::passing("inner-triangle containment"),
        Some(w) => PropertyCheck::failing("inner-triangle containment", w),
    });

    Ok(ConstructionReport { checks })
}
