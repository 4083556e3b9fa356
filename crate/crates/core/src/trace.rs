//! Iterated-negation experiments: the PM series with its entropy and
//! consecutive-distance series, and convergence toward the uniform PM.

use crate::mass::PermutationMassFunction;
use crate::measures::{rd_matrix, rps_entropy, RdMatrix};
use crate::negation::{iterate_negation, NegationParameters};
use crate::pes::EventSpaceIndex;
use crate::{Error, Result};

pub const DEFAULT_ITERATIONS: usize = 9;

/// Sup-norm distance to the fixed point below which a PM counts as converged.
pub const DEFAULT_CONVERGENCE_EPS: f64 = 1e-4;

#[derive(Debug, Clone)]
pub struct NegationTrace {
    pub pms: Vec<PermutationMassFunction>,
    /// `H_RPS(PM_i)` in bits, one per PM.
    pub entropies: Vec<f64>,
    /// `d(PM_i, PM_{i+1})`, one fewer than `pms`.
    pub step_distances: Vec<f64>,
    pub converged_at: Option<usize>,
    /// `1/(Δ−1)`.
    pub fixed_point: f64,
    pub delta: usize,
}

impl NegationTrace {
    pub fn iterations(&self) -> usize {
        self.pms.len() - 1
    }

    /// Largest `|PM_i(A) − 1/(Δ−1)|` over all nonempty events.
    pub fn deviation(&self, i: usize) -> f64 {
        let pm = &self.pms[i];
        let stored = pm
            .iter()
            .map(|(_, m)| (m - self.fixed_point).abs())
            .fold(0.0, f64::max);
        if pm.focal_count() < self.delta - 1 {
            stored.max(self.fixed_point)
        } else {
            stored
        }
    }

    /// `d_i / d_{i+1}` wherever both distances are positive.
    pub fn distance_ratios(&self) -> Vec<Option<f64>> {
        self.step_distances
            .windows(2)
            .map(|w| (w[0] > 0.0 && w[1] > 0.0).then(|| w[0] / w[1]))
            .collect()
    }
}

/// Runs `k` negations from `pm0`, measuring every step.
pub fn build_trace(
    index: &EventSpaceIndex,
    pm0: &PermutationMassFunction,
    k: usize,
    eps: f64,
) -> Result<NegationTrace> {
    if k == 0 {
        return Err(Error::Domain("a trace needs at least one negation".into()));
    }
    let params = NegationParameters::new(index.delta() as u64)?;
    let pms = iterate_negation(index, pm0, k)?;
    let rd: RdMatrix = rd_matrix(index)?;
    let entropies = pms.iter().map(rps_entropy).collect::<Result<Vec<_>>>()?;
    let step_distances = pms
        .windows(2)
        .map(|w| rd.distance(&w[0], &w[1]))
        .collect::<Result<Vec<_>>>()?;

    let mut trace = NegationTrace {
        pms,
        entropies,
        step_distances,
        converged_at: None,
        fixed_point: params.fixed_point(),
        delta: index.delta(),
    };
    trace.converged_at = detect_convergence(&trace, eps);
    Ok(trace)
}

/// `d_0 / (Δ−2)^i` for `i = 0..k`.
pub fn theoretical_distance_series(d0: f64, delta: u64, k: usize) -> Result<Vec<f64>> {
    let params = NegationParameters::new(delta)?;
    if d0.is_nan() || d0 < 0.0 {
        return Err(Error::Domain(format!(
            "initial distance must be non-negative, got {d0}"
        )));
    }
    let ratio = params.normalizer() as f64;
    let mut series = Vec::with_capacity(k);
    let mut d = d0;
    for _ in 0..k {
        series.push(d);
        d /= ratio;
    }
    Ok(series)
}

/// First iteration whose sup-norm distance to the fixed point is below `eps`.
pub fn detect_convergence(trace: &NegationTrace, eps: f64) -> Option<usize> {
    (0..trace.pms.len()).find(|&i| trace.deviation(i) < eps)
}
