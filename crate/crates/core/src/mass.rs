//! Belief containers: permutation mass functions over a PES, plus the
//! probability distributions and basic probability assignments used by the
//! baseline negations.

use std::collections::BTreeMap;

use crate::pes::{EventSpaceIndex, Frame, PermutationEvent};
use crate::{Error, Result};

/// Allowed deviation of a total mass from 1.
pub const SUM_TOLERANCE: f64 = 1e-9;

fn check_mass(what: &dyn Fn() -> String, mass: f64) -> Result<()> {
    if !mass.is_finite() || !(0.0..=1.0).contains(&mass) {
        return Err(Error::Validation(format!(
            "mass {mass} of {} is outside [0, 1]",
            what()
        )));
    }
    Ok(())
}

fn check_total(total: f64) -> Result<()> {
    if (total - 1.0).abs() > SUM_TOLERANCE {
        return Err(Error::Validation(format!(
            "masses sum to {total}, expected 1 (tolerance {SUM_TOLERANCE:e})"
        )));
    }
    Ok(())
}

/// A permutation mass function: a sparse map from nonempty permutation
/// events to masses summing to 1. Only strictly positive masses are stored,
/// and the empty event never is.
#[derive(Debug, Clone, PartialEq)]
pub struct PermutationMassFunction {
    frame: Frame,
    masses: BTreeMap<PermutationEvent, f64>,
}

impl PermutationMassFunction {
    /// Validates `(event, mass)` pairs into a PM. Zero masses are dropped.
    pub fn from_assignments<I>(frame: &Frame, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (PermutationEvent, f64)>,
    {
        let mut masses = BTreeMap::new();
        let mut total = 0.0;
        let mut seen = std::collections::HashSet::new();
        for (event, mass) in pairs {
            if !frame.contains_event(&event) {
                return Err(Error::Validation(format!(
                    "event {event} is not over a frame of {} elements",
                    frame.len()
                )));
            }
            if !seen.insert(event.clone()) {
                return Err(Error::Validation(format!(
                    "duplicate event {}",
                    frame.display_event(&event)
                )));
            }
            check_mass(&|| frame.display_event(&event), mass)?;
            if event.is_empty() && mass != 0.0 {
                return Err(Error::Validation(format!(
                    "the empty event must carry zero mass, got {mass}"
                )));
            }
            total += mass;
            if mass > 0.0 {
                masses.insert(event, mass);
            }
        }
        check_total(total)?;
        Ok(Self {
            frame: frame.clone(),
            masses,
        })
    }

    /// Builds a PM from a dense vector laid out as [`as_dense_vector`](Self::as_dense_vector).
    pub fn from_dense(index: &EventSpaceIndex, values: &[f64]) -> Result<Self> {
        let events = index.nonempty_events();
        if values.len() != events.len() {
            return Err(Error::Validation(format!(
                "dense vector has {} coordinates, expected {}",
                values.len(),
                events.len()
            )));
        }
        Self::from_assignments(
            index.frame(),
            events.iter().cloned().zip(values.iter().copied()),
        )
    }

    /// The PM assigning `1/(Δ−1)` to every nonempty event.
    pub fn uniform(index: &EventSpaceIndex) -> Result<Self> {
        let events = index.nonempty_events();
        let mass = 1.0 / events.len() as f64;
        Self::from_assignments(index.frame(), events.iter().map(|e| (e.clone(), mass)))
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    /// Stored mass of `event`, 0 when the event is not focal.
    pub fn mass_of(&self, event: &PermutationEvent) -> Result<f64> {
        if !self.frame.contains_event(event) {
            return Err(Error::Domain(format!(
                "event {event} is not over a frame of {} elements",
                self.frame.len()
            )));
        }
        Ok(self.masses.get(event).copied().unwrap_or(0.0))
    }

    /// Focal elements (strictly positive mass) in canonical order.
    pub fn focal_elements(&self) -> Vec<(PermutationEvent, f64)> {
        self.masses.iter().map(|(e, &m)| (e.clone(), m)).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PermutationEvent, f64)> + '_ {
        self.masses.iter().map(|(e, &m)| (e, m))
    }

    pub fn focal_count(&self) -> usize {
        self.masses.len()
    }

    /// Masses of the Δ−1 nonempty events in canonical order; the empty event is skipped.
    pub fn as_dense_vector(&self, index: &EventSpaceIndex) -> Result<Vec<f64>> {
        self.check_frame(index.frame())?;
        let mut dense = vec![0.0; index.delta() - 1];
        for (event, &mass) in &self.masses {
            let ordinal = index.ordinal_of(event).ok_or_else(|| {
                Error::FrameMismatch(format!("event {event} missing from the event space index"))
            })?;
            dense[ordinal - 1] = mass;
        }
        Ok(dense)
    }

    pub(crate) fn check_frame(&self, frame: &Frame) -> Result<()> {
        if &self.frame != frame {
            return Err(Error::FrameMismatch(format!(
                "mass function over {:?} used with frame {:?}",
                self.frame.labels(),
                frame.labels()
            )));
        }
        Ok(())
    }
}

/// A discrete probability distribution over the elements of a frame.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityDistribution {
    outcomes: Frame,
    probs: Vec<f64>,
}

impl ProbabilityDistribution {
    pub fn new(outcomes: Frame, probs: Vec<f64>) -> Result<Self> {
        if probs.len() != outcomes.len() {
            return Err(Error::Validation(format!(
                "{} probabilities given for {} outcomes",
                probs.len(),
                outcomes.len()
            )));
        }
        for (label, &p) in outcomes.labels().iter().zip(&probs) {
            check_mass(&|| format!("outcome {label:?}"), p)?;
        }
        check_total(probs.iter().sum())?;
        Ok(Self { outcomes, probs })
    }

    pub fn outcomes(&self) -> &Frame {
        &self.outcomes
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }
}

/// An unordered set of frame elements, stored as sorted indices.
///
/// Ordered by size and then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ElementSet(Vec<usize>);

impl ElementSet {
    pub fn new(frame: &Frame, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        if elements.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Domain("element repeated in subset".into()));
        }
        if let Some(&bad) = elements.iter().find(|&&e| e >= frame.len()) {
            return Err(Error::Domain(format!(
                "element index {bad} out of range for frame of {} elements",
                frame.len()
            )));
        }
        Ok(Self(elements))
    }

    pub fn from_labels<S: AsRef<str>>(frame: &Frame, labels: &[S]) -> Result<Self> {
        let elements = labels
            .iter()
            .map(|l| {
                frame
                    .index_of(l.as_ref())
                    .ok_or_else(|| Error::Domain(format!("unknown frame element {:?}", l.as_ref())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(frame, elements)
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A basic probability assignment over unordered subsets of a frame.
#[derive(Debug, Clone, PartialEq)]
pub struct BasicProbabilityAssignment {
    frame: Frame,
    masses: BTreeMap<ElementSet, f64>,
}

impl BasicProbabilityAssignment {
    pub fn from_assignments<I>(frame: &Frame, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ElementSet, f64)>,
    {
        let mut masses = BTreeMap::new();
        let mut total = 0.0;
        let mut seen = std::collections::HashSet::new();
        for (set, mass) in pairs {
            let describe = || {
                let labels: Vec<&str> = set
                    .0
                    .iter()
                    .map(|&i| frame.label(i).unwrap_or("?"))
                    .collect();
                format!("{{{}}}", labels.join(","))
            };
            if set.0.iter().any(|&e| e >= frame.len()) {
                return Err(Error::Validation(format!(
                    "subset {} is not over the frame",
                    describe()
                )));
            }
            if !seen.insert(set.clone()) {
                return Err(Error::Validation(format!(
                    "duplicate subset {}",
                    describe()
                )));
            }
            check_mass(&describe, mass)?;
            if set.is_empty() && mass != 0.0 {
                return Err(Error::Validation(format!(
                    "the empty set must carry zero mass, got {mass}"
                )));
            }
            total += mass;
            if mass > 0.0 {
                masses.insert(set, mass);
            }
        }
        check_total(total)?;
        Ok(Self {
            frame: frame.clone(),
            masses,
        })
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn mass_of(&self, set: &ElementSet) -> f64 {
        self.masses.get(set).copied().unwrap_or(0.0)
    }

    pub fn focal_elements(&self) -> Vec<(ElementSet, f64)> {
        self.masses.iter().map(|(s, &m)| (s.clone(), m)).collect()
    }
}
