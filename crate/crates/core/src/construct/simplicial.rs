//! Ray configurations in arbitrary dimension: d+1 chains of m points, one
//! chain per ray of a fan spanning all of R^d, with prefix counts matching
//! the simplicial bound exactly below depth m.

use std::collections::BTreeSet;

use super::{ChainLabel, ChainedConfig, ConstructError, ConstructionReport, PropertyCheck};
use crate::geom::combin::Combinations;
use crate::geom::{is_general_position, GeomError, PointSet};

/// Base scale for the doubling search; margins grow with the scale while the
/// perturbations stay fixed, so verification eventually succeeds.
const BASE_SCALE: i64 = 64;
const MAX_SCALE: i64 = 1 << 24;

/// Cyclic integer matrix of order d+1 sending ray 0 (the first axis) to
/// ray 1, ..., and the last axis ray to the all-negative ray.
fn cycle_matrix(d: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; d]; d];
    for i in 0..d - 1 {
        a[i + 1][i] = 1;
    }
    for row in a.iter_mut() {
        row[d - 1] = -1;
    }
    a
}

fn apply(a: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(m, x)| m * x).sum())
        .collect()
}

fn build(d: usize, m: usize, scale: i64) -> Result<ChainedConfig, ConstructError> {
    let a = cycle_matrix(d);
    let mut chain: Vec<Vec<i64>> = (0..m)
        .map(|i| {
            let mut v = vec![0i64; d];
            v[0] = scale * (m as i64 - i as i64);
            // descending perturbation: consecutive chord steps strictly shrink
            let r = (m - 1 - i) as i64;
            for (j, slot) in v.iter_mut().enumerate().skip(1) {
                *slot += (j as i64 + 1) * r.pow(j as u32 + 1);
            }
            v
        })
        .collect();
    let mut rows = Vec::with_capacity((d + 1) * m);
    let mut labels = Vec::with_capacity((d + 1) * m);
    for c in 0..=d {
        for (pos, v) in chain.iter().enumerate() {
            rows.push(v.clone());
            labels.push(ChainLabel {
                chain: c,
                sub: None,
                pos,
            });
        }
        chain = chain.iter().map(|v| apply(&a, v)).collect();
    }
    let set = PointSet::from_int_rows(d, &rows)?;
    ChainedConfig::new(set, labels, d + 1, m)
}

/// d+1 chains of m points each (n = (d+1)m), in general position, with
/// every prefix count below depth m equal to (d+1)·C(k+d,d). The scale of
/// the underlying fan is doubled until the exact verifier accepts.
pub fn gen_tight_simplicial(d: usize, m: usize) -> Result<ChainedConfig, ConstructError> {
    if d < 2 {
        return Err(ConstructError::BadParameter(format!(
            "dimension must be at least 2, got {d}"
        )));
    }
    if m == 0 {
        return Err(ConstructError::BadParameter(
            "chains need at least one point".into(),
        ));
    }
    let mut scale = BASE_SCALE;
    loop {
        let cfg = build(d, m, scale)?;
        if is_general_position(cfg.set()).is_ok() && verify_ray_config(&cfg)?.all_pass() {
            return Ok(cfg);
        }
        scale *= 2;
        if scale > MAX_SCALE {
            return Err(ConstructError::ConstructionFailed(format!(
                "no valid scale up to 2^24 for d = {d}, m = {m}"
            )));
        }
    }
}

/// Exact checks of the two facts the tightness argument rests on, by
/// enumeration of all point d-subsets:
///
/// 1. shallow facets spread over chains: any orientation with fewer than m
///    points on its open side uses d distinct chains;
/// 2. depth additivity: for a facet on d distinct chains with positions
///    i_1..i_d, one side consists exactly of the shallower points of those
///    same chains, so its count is i_1 + ... + i_d.
///
/// Degenerate tuples abort with an error; mismatches are reported with the
/// offending facet.
pub fn verify_ray_config(cfg: &ChainedConfig) -> Result<ConstructionReport, ConstructError> {
    let s = cfg.set();
    let d = s.dim();
    if cfg.chains() != d + 1 {
        return Err(ConstructError::LabelShape(format!(
            "ray verification needs d+1 = {} chains, got {}",
            d + 1,
            cfg.chains()
        )));
    }
    let n = s.len();
    let m = cfg.chain_len();

    let mut spread_fail: Option<String> = None;
    let mut depth_fail: Option<String> = None;
    let mut combos = Combinations::new(n, d);
    let mut pos_side: Vec<usize> = Vec::with_capacity(n);
    let mut neg_side: Vec<usize> = Vec::with_capacity(n);
    while let Some(facet) = combos.advance() {
        pos_side.clear();
        neg_side.clear();
        for x in 0..n {
            if facet.contains(&x) {
                continue;
            }
            let mut tuple = facet.to_vec();
            tuple.push(x);
            match crate::geom::sign_tuple(s, &tuple) {
                1 => pos_side.push(x),
                -1 => neg_side.push(x),
                _ => {
                    let mut t = tuple;
                    t.sort_unstable();
                    return Err(ConstructError::Geom(GeomError::Degenerate(t)));
                }
            }
        }
        let chains: BTreeSet<usize> = facet.iter().map(|&i| cfg.label(i).chain).collect();
        let distinct = chains.len() == d;
        if spread_fail.is_none()
            && !distinct
            && (pos_side.len() < m || neg_side.len() < m)
        {
            let k = pos_side.len().min(neg_side.len());
            spread_fail = Some(format!(
                "facet {facet:?} has a side of {k} < {m} points but repeats a chain"
            ));
        }
        if depth_fail.is_none() && distinct {
            let mut predicted = BTreeSet::new();
            let mut depth_sum = 0usize;
            for &i in facet.iter() {
                let l = cfg.label(i);
                depth_sum += l.pos;
                for shallower in 0..l.pos {
                    predicted.insert(cfg.at(l.chain, shallower));
                }
            }
            let pos_set: BTreeSet<usize> = pos_side.iter().copied().collect();
            let neg_set: BTreeSet<usize> = neg_side.iter().copied().collect();
            let matched = (pos_set == predicted && pos_set.len() == depth_sum)
                || (neg_set == predicted && neg_set.len() == depth_sum);
            if !matched {
                depth_fail = Some(format!(
                    "facet {facet:?} on distinct chains: neither side is the {depth_sum} shallower chain points"
                ));
            }
        }
    }

    Ok(ConstructionReport {
        checks: vec![
            match spread_fail {
                None => PropertyCheck::passing("shallow facets spread over chains"),
                Some(w) => PropertyCheck::failing("shallow facets spread over chains", w),
            },
            match depth_fail {
                None => PropertyCheck::passing("depth additivity"),
                Some(w) => PropertyCheck::failing("depth additivity", w),
            },
        ],
    })
}
