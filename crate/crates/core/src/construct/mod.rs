//! Generators for point sets whose facet counts meet the lower bounds with
//! equality, plus exact verifiers for the structural properties those
//! configurations are built around.
//!
//! Two families are produced:
//!
//! * ray configurations ([`gen_tight_simplicial`], and its planar special
//!   case [`gen_tight_planar_basic`]): `d+1` chains of `m` points each, one
//!   chain per ray of a simplex fan, perturbed into general position;
//! * the extended planar family ([`gen_tight_planar_extended`]): three
//!   chains of `4m` points split into sub-chains A (2m), B (m), C (m),
//!   tight out to `k = 5n/12 - 1`.

mod data;
mod planar;
mod simplicial;

pub use planar::{gen_tight_planar_basic, gen_tight_planar_extended, verify_extended_properties};
pub use simplicial::{gen_tight_simplicial, verify_ray_config};

use crate::geom::{GeomError, PointSet};

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("n = {n} must be a positive multiple of {modulus}")]
    Divisibility { n: usize, modulus: usize },
    #[error("invalid parameter: {0}")]
    BadParameter(String),
    #[error("labels do not fit the expected chain shape: {0}")]
    LabelShape(String),
    #[error("construction failed: {0}")]
    ConstructionFailed(String),
    #[error(transparent)]
    Geom(#[from] GeomError),
}

/// Sub-chain tag for the extended planar family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Subchain {
    A,
    B,
    C,
}

/// Chain membership of one point: chain id, optional sub-chain tag, and the
/// position along the chain (0 = outermost, next to the hull).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChainLabel {
    pub chain: usize,
    pub sub: Option<Subchain>,
    pub pos: usize,
}

/// A labeled point set: every point belongs to exactly one chain at exactly
/// one position. `m` is the construction's size parameter: the chain length
/// for ray configurations, and `n/12` for the extended planar family (whose
/// chains have `4m` points each).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainedConfig {
    set: PointSet,
    labels: Vec<ChainLabel>,
    chains: usize,
    m: usize,
    /// index[chain][pos] -> point index
    index: Vec<Vec<usize>>,
}

impl ChainedConfig {
    /// Validates that the labels partition the set into `chains` chains of
    /// equal length, with positions 0..len-1 each used once, and that
    /// sub-chain tags (all present or all absent) follow the A/B/C layout
    /// (A = first 2m positions, B = next m, C = last m).
    pub fn new(
        set: PointSet,
        labels: Vec<ChainLabel>,
        chains: usize,
        m: usize,
    ) -> Result<Self, ConstructError> {
        let n = set.len();
        if labels.len() != n {
            return Err(ConstructError::LabelShape(format!(
                "{} labels for {} points",
                labels.len(),
                n
            )));
        }
        if chains == 0 || m == 0 || n % chains != 0 {
            return Err(ConstructError::LabelShape(format!(
                "{n} points cannot split into {chains} equal chains (m = {m})"
            )));
        }
        let per = n / chains;
        let tagged = labels.iter().filter(|l| l.sub.is_some()).count();
        if tagged != 0 && tagged != n {
            return Err(ConstructError::LabelShape(
                "sub-chain tags must be all present or all absent".into(),
            ));
        }
        if tagged == n && per != 4 * m {
            return Err(ConstructError::LabelShape(format!(
                "sub-chained config needs chains of 4m = {} points, got {per}",
                4 * m
            )));
        }
        if tagged == 0 && per != m {
            return Err(ConstructError::LabelShape(format!(
                "chain length {per} does not match m = {m}"
            )));
        }
        let mut index = vec![vec![usize::MAX; per]; chains];
        for (i, l) in labels.iter().enumerate() {
            if l.chain >= chains || l.pos >= per {
                return Err(ConstructError::LabelShape(format!(
                    "label (chain {}, pos {}) out of range",
                    l.chain, l.pos
                )));
            }
            if index[l.chain][l.pos] != usize::MAX {
                return Err(ConstructError::LabelShape(format!(
                    "duplicate label (chain {}, pos {})",
                    l.chain, l.pos
                )));
            }
            if tagged == n {
                let expect = subchain_at(l.pos, m);
                if l.sub != Some(expect) {
                    return Err(ConstructError::LabelShape(format!(
                        "position {} in a 4m chain must be tagged {:?}",
                        l.pos, expect
                    )));
                }
            }
            index[l.chain][l.pos] = i;
        }
        Ok(ChainedConfig {
            set,
            labels,
            chains,
            m,
            index,
        })
    }

    pub fn set(&self) -> &PointSet {
        &self.set
    }

    pub fn labels(&self) -> &[ChainLabel] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> ChainLabel {
        self.labels[i]
    }

    pub fn chains(&self) -> usize {
        self.chains
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn chain_len(&self) -> usize {
        self.set.len() / self.chains
    }

    pub fn has_subchains(&self) -> bool {
        self.labels.first().is_some_and(|l| l.sub.is_some())
    }

    /// Point index of the given chain position.
    pub fn at(&self, chain: usize, pos: usize) -> usize {
        self.index[chain][pos]
    }
}

/// Sub-chain implied by a position in a 4m chain.
pub fn subchain_at(pos: usize, m: usize) -> Subchain {
    if pos < 2 * m {
        Subchain::A
    } else if pos < 3 * m {
        Subchain::B
    } else {
        Subchain::C
    }
}

/// Outcome of one defining-property check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyCheck {
    pub name: &'static str,
    pub pass: bool,
    /// First offending tuple, when the check fails.
    pub witness: Option<String>,
}

impl PropertyCheck {
    fn passing(name: &'static str) -> Self {
        PropertyCheck {
            name,
            pass: true,
            witness: None,
        }
    }

    fn failing(name: &'static str, witness: String) -> Self {
        PropertyCheck {
            name,
            pass: false,
            witness: Some(witness),
        }
    }
}

/// Results of verifying a construction's defining properties.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionReport {
    pub checks: Vec<PropertyCheck>,
}

impl ConstructionReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&PropertyCheck> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    pub fn check(&self, name: &str) -> Option<&PropertyCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}
