//! k-facet counting: exhaustive enumeration over d-subsets, (≤k)-facet set
//! extraction, and adjacency partitions against a marked simplex.

mod crossing;
mod sweep;

pub use crossing::{convex_quadrilaterals, crossing_identity, CrossingIdentity};
pub use sweep::sweep_count_2d;

use crate::geom::combin::Combinations;
use crate::geom::{facet_side, sign_tuple, GeomError, PointSet};
use std::collections::BTreeSet;

/// Canonical identity of an oriented facet: the defining indices in
/// ascending order plus the orientation sign relative to that order.
/// Keys compare across ground sets, which is what the containment and
/// disjointness statements about (≤k)-facet families need.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FacetKey {
    pub indices: Vec<usize>,
    pub sign: i8,
}

/// An oriented facet together with its k-value (points strictly on the
/// positive side).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedFacet {
    pub key: FacetKey,
    pub k: usize,
}

/// Histogram e_0..e_{n-d} of oriented k-facets plus its prefix sums.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetVector {
    e: Vec<u64>,
    cum: Vec<u64>,
}

impl FacetVector {
    pub fn from_histogram(e: Vec<u64>) -> Self {
        let mut cum = Vec::with_capacity(e.len());
        let mut acc = 0u64;
        for &v in &e {
            acc += v;
            cum.push(acc);
        }
        FacetVector { e, cum }
    }

    /// e_k; zero beyond the defined range.
    pub fn e(&self, k: usize) -> u64 {
        self.e.get(k).copied().unwrap_or(0)
    }

    /// E_k = e_0 + ... + e_k; the grand total beyond the range.
    pub fn leq(&self, k: usize) -> u64 {
        if self.cum.is_empty() {
            0
        } else {
            self.cum[k.min(self.cum.len() - 1)]
        }
    }

    pub fn histogram(&self) -> &[u64] {
        &self.e
    }

    /// Largest defined k (= n - d).
    pub fn max_k(&self) -> usize {
        self.e.len().saturating_sub(1)
    }

    pub fn total(&self) -> u64 {
        self.cum.last().copied().unwrap_or(0)
    }

    /// e_k = e_{n-d-k} for all k.
    pub fn is_symmetric(&self) -> bool {
        let m = self.e.len();
        (0..m).all(|k| self.e[k] == self.e[m - 1 - k])
    }
}

/// Counts every oriented facet of `S` by brute force over all C(n,d)
/// subsets, both orientations.
pub fn count_facets(s: &PointSet) -> Result<FacetVector, GeomError> {
    let d = s.dim();
    let n = s.len();
    if n < d + 1 {
        return Err(GeomError::TooFewPoints { needed: d + 1, got: n });
    }
    let mut e = vec![0u64; n - d + 1];
    let mut combos = Combinations::new(n, d);
    while let Some(facet) = combos.advance() {
        let (pos, neg) = split_counts(s, facet)?;
        e[pos] += 1;
        e[neg] += 1;
    }
    Ok(FacetVector::from_histogram(e))
}

/// Strict positive/negative side counts of a facet in its stored (+1)
/// orientation, with a degeneracy error on any zero sign.
pub(crate) fn split_counts(s: &PointSet, facet: &[usize]) -> Result<(usize, usize), GeomError> {
    let mut pos = 0;
    let mut neg = 0;
    for x in 0..s.len() {
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
    }
    Ok((pos, neg))
}

/// All oriented facets with k-value at most `k`, sorted by canonical key.
pub fn leq_k_facets(s: &PointSet, k: usize) -> Result<Vec<OrientedFacet>, GeomError> {
    let d = s.dim();
    let n = s.len();
    if n < d + 1 {
        return Err(GeomError::TooFewPoints { needed: d + 1, got: n });
    }
    let mut out = Vec::new();
    let mut combos = Combinations::new(n, d);
    while let Some(facet) = combos.advance() {
        let (pos, neg) = split_counts(s, facet)?;
        for (sign, kv) in [(1i8, pos), (-1i8, neg)] {
            if kv <= k {
                out.push(OrientedFacet {
                    key: FacetKey {
                        indices: facet.to_vec(),
                        sign,
                    },
                    k: kv,
                });
            }
        }
    }
    out.sort_by(|a, b| a.key.cmp(&b.key));
    Ok(out)
}

/// The (≤k)-facets having at least one defining vertex in `T`.
pub fn adjacent_leq_k(
    s: &PointSet,
    t: &BTreeSet<usize>,
    k: usize,
) -> Result<Vec<OrientedFacet>, GeomError> {
    Ok(leq_k_facets(s, k)?
        .into_iter()
        .filter(|f| f.key.indices.iter().any(|i| t.contains(i)))
        .collect())
}

/// Partition of the (≤k)-facets by how many of their vertices belong to a
/// marked (d+1)-vertex simplex: counts[j] holds the number adjacent to
/// exactly j vertices, j = 0..=d.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjacencyProfile {
    pub counts: Vec<u64>,
}

impl AdjacencyProfile {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

pub fn adjacency_profile(
    s: &PointSet,
    t: &[usize],
    k: usize,
) -> Result<AdjacencyProfile, GeomError> {
    let d = s.dim();
    if t.len() != d + 1 {
        return Err(GeomError::TupleSize {
            expected: d + 1,
            got: t.len(),
        });
    }
    if sign_tuple(s, t) == 0 {
        let mut tuple = t.to_vec();
        tuple.sort_unstable();
        return Err(GeomError::Degenerate(tuple));
    }
    let marked: BTreeSet<usize> = t.iter().copied().collect();
    let mut counts = vec![0u64; d + 1];
    for f in leq_k_facets(s, k)? {
        let j = f.key.indices.iter().filter(|i| marked.contains(i)).count();
        counts[j] += 1;
    }
    Ok(AdjacencyProfile { counts })
}

/// Canonical key set of a facet list.
pub fn key_set(facets: &[OrientedFacet]) -> BTreeSet<FacetKey> {
    facets.iter().map(|f| f.key.clone()).collect()
}
