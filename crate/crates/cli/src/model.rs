//! JSON model files.
//!
//! ```json
//! {
//!   "kind": "pm",
//!   "frame": ["A", "B"],
//!   "masses": [
//!     {"event": ["A"], "mass": 0.1},
//!     {"event": ["B", "A"], "mass": 0.9}
//!   ]
//! }
//! ```
//!
//! Events are label arrays. For `pm` the order is significant; for `bpa`
//! it is not; for `probability` every event names exactly one outcome.

use std::path::Path;

use rps_core::{
    BasicProbabilityAssignment, ElementSet, Frame, PermutationEvent, PermutationMassFunction,
    ProbabilityDistribution,
};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelKind {
    Pm,
    Bpa,
    Probability,
}

impl std::fmt::Display for ModelKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ModelKind::Pm => "pm",
            ModelKind::Bpa => "bpa",
            ModelKind::Probability => "probability",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MassEntry {
    pub event: Vec<String>,
    pub mass: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub kind: ModelKind,
    pub frame: Vec<String>,
    pub masses: Vec<MassEntry>,
}

fn invalid(e: rps_core::Error) -> CliError {
    CliError::Validation(e.to_string())
}

impl ModelFile {
    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| match e {
            CliError::Parse(msg) => CliError::Parse(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }

    fn expect_kind(&self, kind: ModelKind) -> Result<(), CliError> {
        if self.kind != kind {
            return Err(CliError::Parse(format!(
                "model kind is {}, this command needs {}",
                self.kind, kind
            )));
        }
        Ok(())
    }

    fn frame(&self) -> Result<Frame, CliError> {
        Frame::new(self.frame.iter().cloned()).map_err(invalid)
    }

    /// Masses, rescaled to sum to 1 when `renormalize` is set.
    fn masses(&self, renormalize: bool) -> Vec<f64> {
        let raw: Vec<f64> = self.masses.iter().map(|m| m.mass).collect();
        let total: f64 = raw.iter().sum();
        if renormalize && total > 0.0 && total.is_finite() {
            raw.iter().map(|m| m / total).collect()
        } else {
            raw
        }
    }

    pub fn to_pm(&self, renormalize: bool) -> Result<PermutationMassFunction, CliError> {
        self.expect_kind(ModelKind::Pm)?;
        let frame = self.frame()?;
        let pairs = self
            .masses
            .iter()
            .zip(self.masses(renormalize))
            .map(|(entry, mass)| Ok((PermutationEvent::from_labels(&frame, &entry.event)?, mass)))
            .collect::<Result<Vec<_>, rps_core::Error>>()
            .map_err(invalid)?;
        PermutationMassFunction::from_assignments(&frame, pairs).map_err(invalid)
    }

    pub fn to_bpa(&self, renormalize: bool) -> Result<BasicProbabilityAssignment, CliError> {
        self.expect_kind(ModelKind::Bpa)?;
        let frame = self.frame()?;
        let pairs = self
            .masses
            .iter()
            .zip(self.masses(renormalize))
            .map(|(entry, mass)| Ok((ElementSet::from_labels(&frame, &entry.event)?, mass)))
            .collect::<Result<Vec<_>, rps_core::Error>>()
            .map_err(invalid)?;
        BasicProbabilityAssignment::from_assignments(&frame, pairs).map_err(invalid)
    }

    /// Outcomes not listed get probability 0.
    pub fn to_probability(&self, renormalize: bool) -> Result<ProbabilityDistribution, CliError> {
        self.expect_kind(ModelKind::Probability)?;
        let frame = self.frame()?;
        let mut probs = vec![0.0; frame.len()];
        let mut seen = vec![false; frame.len()];
        for (entry, p) in self.masses.iter().zip(self.masses(renormalize)) {
            let [label] = entry.event.as_slice() else {
                return Err(CliError::Validation(format!(
                    "probability entries name exactly one outcome, got {:?}",
                    entry.event
                )));
            };
            let i = frame
                .index_of(label)
                .ok_or_else(|| CliError::Validation(format!("unknown outcome {label:?}")))?;
            if std::mem::replace(&mut seen[i], true) {
                return Err(CliError::Validation(format!("duplicate outcome {label:?}")));
            }
            probs[i] = p;
        }
        ProbabilityDistribution::new(frame, probs).map_err(invalid)
    }

    pub fn from_pm(pm: &PermutationMassFunction) -> Self {
        let frame = pm.frame();
        let labels = |seq: &[usize]| seq.iter().map(|&i| frame.labels()[i].clone()).collect();
        Self {
            kind: ModelKind::Pm,
            frame: frame.labels().to_vec(),
            masses: pm
                .iter()
                .map(|(e, mass)| MassEntry {
                    event: labels(e.sequence()),
                    mass,
                })
                .collect(),
        }
    }

    pub fn from_bpa(m: &BasicProbabilityAssignment) -> Self {
        let frame = m.frame();
        Self {
            kind: ModelKind::Bpa,
            frame: frame.labels().to_vec(),
            masses: m
                .focal_elements()
                .into_iter()
                .map(|(set, mass)| MassEntry {
                    event: set
                        .elements()
                        .iter()
                        .map(|&i| frame.labels()[i].clone())
                        .collect(),
                    mass,
                })
                .collect(),
        }
    }

    pub fn from_probability(p: &ProbabilityDistribution) -> Self {
        Self {
            kind: ModelKind::Probability,
            frame: p.outcomes().labels().to_vec(),
            masses: p
                .outcomes()
                .labels()
                .iter()
                .zip(p.probs())
                .map(|(label, &mass)| MassEntry {
                    event: vec![label.clone()],
                    mass,
                })
                .collect(),
        }
    }
}
