//! Randomized search for simplicial half-nets built from hull vertices:
//! seeded random instances, exhaustive candidate enumeration, and trial
//! reports that preserve any set where no net was found.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geom::combin::Combinations;
use crate::geom::{
    facet_side, hull_vertices, orientation, sign_tuple, GeomError, Point, PointSet, Rational,
};
use crate::structure::{verify_eps_net, SimplicialNet};

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum ConjectureError {
    #[error("invalid parameter: {0}")]
    BadParameter(String),
    #[error("resample budget exhausted after {attempts} tries for point {index} (n={n}, d={d}, seed={seed})")]
    ResampleBudget {
        n: usize,
        d: usize,
        seed: u64,
        index: usize,
        attempts: usize,
    },
    #[error(transparent)]
    Geom(#[from] GeomError),
}

/// Tries per point before giving up on a pathological parameter choice.
const RESAMPLE_BUDGET: usize = 1000;

/// n integer points uniform in [-coord_bound, coord_bound]^d from a seeded
/// generator. Any candidate point that duplicates an earlier one or
/// completes a flat (d+1)-tuple is resampled, so the result is always in
/// general position, and identical arguments reproduce identical sets.
pub fn random_point_set(
    n: usize,
    d: usize,
    seed: u64,
    coord_bound: i64,
) -> Result<PointSet, ConjectureError> {
    if d == 0 {
        return Err(ConjectureError::BadParameter("dimension must be positive".into()));
    }
    if n < d + 1 {
        return Err(ConjectureError::BadParameter(format!(
            "need at least d+1 = {} points, got {n}",
            d + 1
        )));
    }
    if coord_bound < n as i64 {
        return Err(ConjectureError::BadParameter(format!(
            "coordinate bound {coord_bound} below n = {n} makes degeneracy too likely"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut accepted: Vec<Point> = Vec::with_capacity(n);
    let mut raw: Vec<Vec<i64>> = Vec::with_capacity(n);
    for index in 0..n {
        let mut ok = false;
        for _ in 0..RESAMPLE_BUDGET {
            let coords: Vec<i64> = (0..d)
                .map(|_| rng.gen_range(-coord_bound..=coord_bound))
                .collect();
            if raw.contains(&coords) {
                continue;
            }
            let candidate = Point::from_ints(&coords);
            if completes_flat_tuple(&accepted, &candidate, d) {
                continue;
            }
            raw.push(coords);
            accepted.push(candidate);
            ok = true;
            break;
        }
        if !ok {
            return Err(ConjectureError::ResampleBudget {
                n,
                d,
                seed,
                index,
                attempts: RESAMPLE_BUDGET,
            });
        }
    }
    Ok(PointSet::new(d, accepted)?)
}

/// True when some d accepted points plus the candidate lie on a common
/// hyperplane. Every (d+1)-tuple has a last-accepted member, so checking
/// each candidate against earlier points only is exhaustive.
fn completes_flat_tuple(accepted: &[Point], candidate: &Point, d: usize) -> bool {
    if accepted.len() < d {
        return false;
    }
    let mut combos = Combinations::new(accepted.len(), d);
    while let Some(subset) = combos.advance() {
        let mut refs: Vec<&Point> = subset.iter().map(|&i| &accepted[i]).collect();
        refs.push(candidate);
        if matches!(orientation(&refs, d), Ok(0)) {
            return true;
        }
    }
    false
}

/// What an exhaustive half-net search saw: the candidate pool, how much of
/// it was scanned, and the first net found, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub net: Option<SimplicialNet>,
    /// Hull vertex indices, ascending.
    pub hull: Vec<usize>,
    pub subsets_examined: u64,
    /// Closed halfspaces holding more than half the points.
    pub heavy_halfspaces: u64,
    /// Deterministic cost tally: sidedness evaluations plus candidate
    /// orientation and mask tests. A stand-in for elapsed time that stays
    /// identical across runs.
    pub work_units: u64,
}

/// Exhaustively scans (d+1)-subsets of hull vertices in index order for a
/// half-net: a nondegenerate simplex meeting every closed halfspace that
/// holds more than n/2 points. Returns none only after all subsets failed.
pub fn search_half_net(s: &PointSet) -> Result<SearchOutcome, GeomError> {
    let d = s.dim();
    let n = s.len();
    let hull_set: BTreeSet<usize> = hull_vertices(s)?;
    let hv: Vec<usize> = hull_set.into_iter().collect();
    let h = hv.len();
    let blocks = (h + 63) / 64;
    let mut work: u64 = 0;

    // For every heavy closed halfspace, the hull vertices it admits
    // (boundary counts as admitted).
    let mut masks: BTreeSet<Vec<u64>> = BTreeSet::new();
    let mut heavy: u64 = 0;
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
            work += 1;
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
            // closed count: the d spanning points sit on the boundary
            if 2 * (strict + d) <= n {
                continue;
            }
            heavy += 1;
            let mut mask = vec![0u64; blocks];
            for (slot, &v) in hv.iter().enumerate() {
                if sides[v] * sign >= 0 {
                    mask[slot / 64] |= 1u64 << (slot % 64);
                }
            }
            masks.insert(mask);
        }
    }
    let masks: Vec<Vec<u64>> = masks.into_iter().collect();

    let half = Rational::new(1.into(), 2.into());
    let mut subsets: u64 = 0;
    let mut cand = Combinations::new(h, d + 1);
    let mut tuple = vec![0usize; d + 1];
    let mut cmask = vec![0u64; blocks];
    while let Some(slots) = cand.advance() {
        subsets += 1;
        for (i, &t) in slots.iter().enumerate() {
            tuple[i] = hv[t];
        }
        work += 1;
        if sign_tuple(s, &tuple) == 0 {
            continue; // flat simplex, not a candidate
        }
        cmask.iter_mut().for_each(|b| *b = 0);
        for &t in slots.iter() {
            cmask[t / 64] |= 1u64 << (t % 64);
        }
        let mut covered = true;
        for mask in &masks {
            work += 1;
            if !cmask.iter().zip(mask).any(|(a, b)| a & b != 0) {
                covered = false;
                break;
            }
        }
        if !covered {
            continue;
        }
        // the mask test mirrors the verifier exactly; keep the verifier as
        // the final word anyway
        if verify_eps_net(s, &tuple, &half)?.is_none() {
            return Ok(SearchOutcome {
                net: Some(SimplicialNet::half(tuple)),
                hull: hv,
                subsets_examined: subsets,
                heavy_halfspaces: heavy,
                work_units: work,
            });
        }
    }
    Ok(SearchOutcome {
        net: None,
        hull: hv,
        subsets_examined: subsets,
        heavy_halfspaces: heavy,
        work_units: work,
    })
}

/// One seeded instance and what the search did with it. `counterexample`
/// holds the full point set whenever no net was found, so a surprising run
/// can be replayed and inspected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialRecord {
    pub seed: u64,
    pub n: usize,
    pub d: usize,
    pub hull_count: usize,
    pub found: Option<SimplicialNet>,
    /// Result of an independent re-verification of `found`.
    pub verified: bool,
    pub subsets_examined: u64,
    pub work_units: u64,
    pub counterexample: Option<PointSet>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExploreReport {
    pub trials: usize,
    pub found_count: usize,
    pub records: Vec<TrialRecord>,
}

/// Runs `trials` independent searches on seeded random sets (seeds
/// seed0, seed0+1, ...). Deterministic: equal arguments give equal reports.
pub fn explore(
    trials: usize,
    n: usize,
    d: usize,
    seed0: u64,
) -> Result<ExploreReport, ConjectureError> {
    if trials == 0 {
        return Err(ConjectureError::BadParameter("need at least one trial".into()));
    }
    let coord_bound = 1000i64.max((n as i64) * (n as i64));
    let half = Rational::new(1.into(), 2.into());
    let mut records = Vec::with_capacity(trials);
    let mut found_count = 0usize;
    for t in 0..trials {
        let seed = seed0.wrapping_add(t as u64);
        let s = random_point_set(n, d, seed, coord_bound)?;
        let outcome = search_half_net(&s)?;
        let verified = match &outcome.net {
            Some(net) => verify_eps_net(&s, &net.vertices, &half)?.is_none(),
            None => false,
        };
        if outcome.net.is_some() {
            found_count += 1;
        }
        records.push(TrialRecord {
            seed,
            n,
            d,
            hull_count: outcome.hull.len(),
            counterexample: outcome.net.is_none().then(|| s.clone()),
            found: outcome.net,
            verified,
            subsets_examined: outcome.subsets_examined,
            work_units: outcome.work_units,
        });
    }
    Ok(ExploreReport {
        trials,
        found_count,
        records,
    })
}
