//! Negation operators.
//!
//! The PM negation maps every nonempty event `A` of the PES to
//! `(1 − PM(A)) / (Δ − 2)`, focal or not. Each event gives away its mass in
//! equal shares to the Δ−2 other nonempty events, so the negated mass of `A`
//! is the total mass of the other events divided by Δ−2.
//!
//! Repeated negation is an affine recurrence whose deviation from the
//! uniform PM shrinks by the factor `−1/(Δ−2)` each step, which gives the
//! closed form used by [`closed_form_iterate`].
//!
//! Yager's negation of a probability distribution and Yin's negation of a
//! BPA are provided as baselines.

use crate::mass::{BasicProbabilityAssignment, PermutationMassFunction, ProbabilityDistribution};
use crate::pes::{pes_cardinality, EventSpaceIndex, Frame};
use crate::{Error, Result};

/// Δ of a frame and the negation normalizer Δ−2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NegationParameters {
    delta: u64,
    normalizer: u64,
}

impl NegationParameters {
    pub fn new(delta: u64) -> Result<Self> {
        if delta < 4 {
            return Err(Error::Domain(
                "negation undefined on singleton frame (Δ − 2 must be at least 2)".into(),
            ));
        }
        Ok(Self {
            delta,
            normalizer: delta - 2,
        })
    }

    pub fn for_frame(frame: &Frame) -> Result<Self> {
        Self::new(pes_cardinality(frame.len() as u64)?)
    }

    pub fn delta(&self) -> u64 {
        self.delta
    }

    pub fn normalizer(&self) -> u64 {
        self.normalizer
    }

    /// `1/(Δ−1)`, the mass every nonempty event carries at the fixed point.
    pub fn fixed_point(&self) -> f64 {
        1.0 / (self.delta - 1) as f64
    }
}

fn parameters(index: &EventSpaceIndex, pm: &PermutationMassFunction) -> Result<NegationParameters> {
    pm.check_frame(index.frame())?;
    NegationParameters::new(index.delta() as u64)
}

/// Negates `pm`; the result is dense over all Δ−1 nonempty events.
pub fn negate_pm(
    index: &EventSpaceIndex,
    pm: &PermutationMassFunction,
) -> Result<PermutationMassFunction> {
    let params = parameters(index, pm)?;
    let normalizer = params.normalizer() as f64;
    let negated: Vec<f64> = pm
        .as_dense_vector(index)?
        .into_iter()
        .map(|m| (1.0 - m) / normalizer)
        .collect();
    PermutationMassFunction::from_dense(index, &negated)
}

/// `[PM_0, PM_1, …, PM_k]` where each element negates the previous one.
pub fn iterate_negation(
    index: &EventSpaceIndex,
    pm0: &PermutationMassFunction,
    k: usize,
) -> Result<Vec<PermutationMassFunction>> {
    parameters(index, pm0)?;
    let mut series = Vec::with_capacity(k + 1);
    series.push(pm0.clone());
    for _ in 0..k {
        let next = negate_pm(index, series.last().expect("series starts non-empty"))?;
        series.push(next);
    }
    Ok(series)
}

/// `PM_i` computed directly as `(PM_0(A) − c)·(−1/(Δ−2))^i + c` with `c = 1/(Δ−1)`.
pub fn closed_form_iterate(
    index: &EventSpaceIndex,
    pm0: &PermutationMassFunction,
    i: usize,
) -> Result<PermutationMassFunction> {
    let params = parameters(index, pm0)?;
    if i == 0 {
        return Ok(pm0.clone());
    }
    let c = params.fixed_point();
    // Exponents past i32::MAX underflow to zero either way.
    let factor = (-1.0 / params.normalizer() as f64).powi(i32::try_from(i).unwrap_or(i32::MAX));
    let values: Vec<f64> = pm0
        .as_dense_vector(index)?
        .into_iter()
        .map(|m| (m - c) * factor + c)
        .collect();
    PermutationMassFunction::from_dense(index, &values)
}

/// Limit of iterated negation, `1/(Δ−1)`.
pub fn fixed_point_mass(frame: &Frame) -> Result<f64> {
    Ok(NegationParameters::for_frame(frame)?.fixed_point())
}

/// Yager's negation: `p̄_i = (1 − p_i)/(n − 1)`.
pub fn yager_negate(p: &ProbabilityDistribution) -> Result<ProbabilityDistribution> {
    let n = p.probs().len();
    if n < 2 {
        return Err(Error::Domain(
            "Yager negation needs at least two outcomes (n − 1 = 0)".into(),
        ));
    }
    let norm = (n - 1) as f64;
    let probs = p.probs().iter().map(|&q| (1.0 - q) / norm).collect();
    ProbabilityDistribution::new(p.outcomes().clone(), probs)
}

/// Yin's negation over the focal elements only: `m̄(A) = (1 − m(A))/(n − 1)`
/// with `n` the number of focal elements. Non-focal subsets stay at zero.
pub fn yin_negate(m: &BasicProbabilityAssignment) -> Result<BasicProbabilityAssignment> {
    let focal = m.focal_elements();
    if focal.len() < 2 {
        return Err(Error::Domain(format!(
            "Yin negation needs at least two focal elements, got {}",
            focal.len()
        )));
    }
    let norm = (focal.len() - 1) as f64;
    BasicProbabilityAssignment::from_assignments(
        m.frame(),
        focal
            .into_iter()
            .map(|(set, mass)| (set, (1.0 - mass) / norm)),
    )
}
