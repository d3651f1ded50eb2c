//! On-disk point-set format.
//!
//! A point file is a JSON document with exact rational coordinates rendered
//! as strings ("7", "-3/5"); floats are rejected by construction. Chain
//! labels are optional and ride alongside the coordinates, so a generated
//! configuration round-trips with its structure intact.

use std::str::FromStr;

use kfacets::construct::{ChainLabel, ChainedConfig, Subchain};
use kfacets::{Point, PointSet, Rational};
use serde::{Deserialize, Serialize};

#[derive(thiserror::Error, Debug)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("dim must be positive")]
    ZeroDim,
    #[error("point {index} has {got} coordinates, expected {want}")]
    Arity { index: usize, got: usize, want: usize },
    #[error("point {index}: {text:?} is not an exact rational")]
    Coordinate { index: usize, text: String },
    #[error("labels: {0}")]
    Labels(String),
    #[error(transparent)]
    Geom(#[from] kfacets::GeomError),
}

/// Chain membership of one point, as stored on disk. `sub` is "A", "B" or
/// "C" when present.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelRecord {
    pub chain: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sub: Option<String>,
    pub pos: usize,
}

/// The document root: dimension, one coordinate row per point, and
/// optional per-point chain labels (same order as `points`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointFile {
    pub dim: usize,
    pub points: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<LabelRecord>>,
}

impl PointFile {
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn render(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("point file serializes");
        out.push('\n');
        out
    }

    pub fn from_set(s: &PointSet) -> Self {
        PointFile {
            dim: s.dim(),
            points: s
                .points()
                .iter()
                .map(|p| p.coords().iter().map(Rational::to_string).collect())
                .collect(),
            labels: None,
        }
    }

    pub fn from_config(cfg: &ChainedConfig) -> Self {
        let mut file = Self::from_set(cfg.set());
        file.labels = Some(
            cfg.labels()
                .iter()
                .map(|l| LabelRecord {
                    chain: l.chain,
                    sub: l.sub.map(|s| sub_name(s).to_owned()),
                    pos: l.pos,
                })
                .collect(),
        );
        file
    }

    pub fn to_set(&self) -> Result<PointSet, FormatError> {
        if self.dim == 0 {
            return Err(FormatError::ZeroDim);
        }
        let mut pts = Vec::with_capacity(self.points.len());
        for (index, row) in self.points.iter().enumerate() {
            if row.len() != self.dim {
                return Err(FormatError::Arity {
                    index,
                    got: row.len(),
                    want: self.dim,
                });
            }
            let mut coords = Vec::with_capacity(self.dim);
            for text in row {
                let r = Rational::from_str(text).map_err(|_| FormatError::Coordinate {
                    index,
                    text: text.clone(),
                })?;
                coords.push(r);
            }
            pts.push(Point::new(coords));
        }
        Ok(PointSet::new(self.dim, pts)?)
    }

    /// Rebuilds the labeled configuration. The chain count and size
    /// parameter are inferred from the records; all shape invariants are
    /// re-validated, so a hand-edited file cannot smuggle in a bad layout.
    pub fn to_config(&self) -> Result<ChainedConfig, FormatError> {
        let set = self.to_set()?;
        let recs = self
            .labels
            .as_ref()
            .ok_or_else(|| FormatError::Labels("file carries no chain labels".into()))?;
        if recs.len() != set.len() {
            return Err(FormatError::Labels(format!(
                "{} label records for {} points",
                recs.len(),
                set.len()
            )));
        }
        let mut labels = Vec::with_capacity(recs.len());
        for rec in recs {
            let sub = match rec.sub.as_deref() {
                None => None,
                Some("A") => Some(Subchain::A),
                Some("B") => Some(Subchain::B),
                Some("C") => Some(Subchain::C),
                Some(other) => {
                    return Err(FormatError::Labels(format!(
                        "unknown sub-chain tag {other:?}"
                    )))
                }
            };
            labels.push(ChainLabel {
                chain: rec.chain,
                sub,
                pos: rec.pos,
            });
        }
        let chains = labels.iter().map(|l| l.chain + 1).max().unwrap_or(0);
        if chains == 0 || set.len() % chains != 0 {
            return Err(FormatError::Labels(format!(
                "{} points do not split into {} chains",
                set.len(),
                chains
            )));
        }
        let per = set.len() / chains;
        let tagged = labels.iter().any(|l| l.sub.is_some());
        let m = if tagged { per / 4 } else { per };
        ChainedConfig::new(set, labels, chains, m).map_err(|e| FormatError::Labels(e.to_string()))
    }
}

fn sub_name(s: Subchain) -> &'static str {
    match s {
        Subchain::A => "A",
        Subchain::B => "B",
        Subchain::C => "C",
    }
}
