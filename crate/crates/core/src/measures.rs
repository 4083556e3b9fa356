//! RPS entropy and RPS distance.
//!
//! The distance is the quadratic form `d = √(½ vᵀ RD v)` where `v` is the
//! difference of two dense PM vectors and `RD(r, s)` is the Jaccard index of
//! the events' element sets times their ordered degree. The empty event is
//! left out of `v` and `RD`; its coordinate of `v` is always zero.

use crate::mass::PermutationMassFunction;
use crate::negation::NegationParameters;
use crate::pes::{f_of, jaccard, perm_count, EventSpaceIndex, Frame, PermutationEvent};
use crate::{Error, Result};

/// Radicands down to `-RADICAND_TOLERANCE` are clamped to zero.
pub const RADICAND_TOLERANCE: f64 = 1e-12;

/// Largest RD matrix dimension [`rd_matrix`] will materialize (Δ(6) − 1 = 1956).
pub const DEFAULT_MAX_RD_DIMENSION: usize = 4096;

/// `exp(−Σ_{θ ∈ A∩B} |rank_A(θ) − rank_B(θ)| / |A ∪ B|)`.
///
/// Disjoint events have an empty sum and so an ordered degree of 1.
pub fn ordered_degree(a: &PermutationEvent, b: &PermutationEvent) -> Result<f64> {
    if a.is_empty() && b.is_empty() {
        return Err(Error::Domain(
            "ordered degree undefined for two empty events".into(),
        ));
    }
    let mut shared = 0usize;
    let mut displacement = 0usize;
    for (pos_a, &e) in a.sequence().iter().enumerate() {
        if let Some(pos_b) = b.sequence().iter().position(|&x| x == e) {
            shared += 1;
            displacement += pos_a.abs_diff(pos_b);
        }
    }
    let union = a.len() + b.len() - shared;
    Ok((-(displacement as f64) / union as f64).exp())
}

/// RD kernel entry: Jaccard index times ordered degree.
pub fn similarity(a: &PermutationEvent, b: &PermutationEvent) -> Result<f64> {
    Ok(jaccard(a, b)? * ordered_degree(a, b)?)
}

/// Materialized `(Δ−1)×(Δ−1)` similarity kernel over the nonempty events.
#[derive(Debug, Clone)]
pub struct RdMatrix {
    index: EventSpaceIndex,
    dim: usize,
    entries: Vec<f64>,
}

impl RdMatrix {
    pub fn index(&self) -> &EventSpaceIndex {
        &self.index
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry for nonempty-event positions `r` and `s` (ordinals `r + 1`, `s + 1`).
    pub fn get(&self, r: usize, s: usize) -> f64 {
        self.entries[r * self.dim + s]
    }

    pub fn row(&self, r: usize) -> &[f64] {
        &self.entries[r * self.dim..(r + 1) * self.dim]
    }

    /// RPS distance evaluated against this matrix.
    pub fn distance(
        &self,
        pm1: &PermutationMassFunction,
        pm2: &PermutationMassFunction,
    ) -> Result<f64> {
        let v = difference(&self.index, pm1, pm2)?;
        let quad: f64 = v
            .iter()
            .enumerate()
            .filter(|(_, &vr)| vr != 0.0)
            .map(|(r, &vr)| {
                vr * self
                    .row(r)
                    .iter()
                    .zip(&v)
                    .map(|(k, vs)| k * vs)
                    .sum::<f64>()
            })
            .sum();
        finish_distance(quad)
    }
}

/// Builds the RD matrix under [`DEFAULT_MAX_RD_DIMENSION`].
pub fn rd_matrix(index: &EventSpaceIndex) -> Result<RdMatrix> {
    rd_matrix_with_cap(index, DEFAULT_MAX_RD_DIMENSION)
}

pub fn rd_matrix_with_cap(index: &EventSpaceIndex, max_dim: usize) -> Result<RdMatrix> {
    let events = index.nonempty_events();
    let dim = events.len();
    if dim > max_dim {
        return Err(Error::CapExceeded {
            frame_size: index.frame().len(),
            cap: max_frame_size_for_dimension(max_dim),
            delta: Some(index.delta() as u64),
        });
    }
    let mut entries = vec![0.0; dim * dim];
    for r in 0..dim {
        entries[r * dim + r] = similarity(&events[r], &events[r])?;
        for s in (r + 1)..dim {
            let k = similarity(&events[r], &events[s])?;
            entries[r * dim + s] = k;
            entries[s * dim + r] = k;
        }
    }
    Ok(RdMatrix {
        index: index.clone(),
        dim,
        entries,
    })
}

fn max_frame_size_for_dimension(max_dim: usize) -> usize {
    (1..)
        .take_while(|&n| f_of(n).is_ok_and(|d| (d - 1) as usize <= max_dim))
        .last()
        .unwrap_or(0) as usize
}

fn difference(
    index: &EventSpaceIndex,
    pm1: &PermutationMassFunction,
    pm2: &PermutationMassFunction,
) -> Result<Vec<f64>> {
    let a = pm1.as_dense_vector(index)?;
    let b = pm2.as_dense_vector(index)?;
    Ok(a.iter().zip(&b).map(|(x, y)| x - y).collect())
}

fn finish_distance(quad: f64) -> Result<f64> {
    let radicand = 0.5 * quad;
    if radicand < -RADICAND_TOLERANCE {
        return Err(Error::Numerical(format!(
            "negative radicand {radicand:e} in RPS distance"
        )));
    }
    Ok(radicand.max(0.0).sqrt())
}

/// RPS distance without materializing RD; kernel entries are computed on the fly.
pub fn rps_distance(
    index: &EventSpaceIndex,
    pm1: &PermutationMassFunction,
    pm2: &PermutationMassFunction,
) -> Result<f64> {
    let v = difference(index, pm1, pm2)?;
    let events = index.nonempty_events();
    let support: Vec<usize> = (0..v.len()).filter(|&r| v[r] != 0.0).collect();
    let mut quad = 0.0;
    for &r in &support {
        let mut row = 0.0;
        for &s in &support {
            row += similarity(&events[r], &events[s])? * v[s];
        }
        quad += v[r] * row;
    }
    finish_distance(quad)
}

/// `H = −Σ_A PM(A) log₂(PM(A) / (F(|A|) − 1))` over the focal elements, in bits.
pub fn rps_entropy(pm: &PermutationMassFunction) -> Result<f64> {
    let mut h = 0.0;
    for (event, mass) in pm.iter() {
        let weight = (f_of(event.len() as u64)? - 1) as f64;
        h -= mass * (mass / weight).log2();
    }
    Ok(h)
}

/// Entropy of the uniform PM over the frame, the limit of the entropy of iterated negation.
pub fn uniform_entropy(frame: &Frame) -> Result<f64> {
    let params = NegationParameters::for_frame(frame)?;
    let n = frame.len() as u64;
    let nonempty = (params.delta() - 1) as f64;
    let mut h = 0.0;
    for r in 1..=n {
        let count = perm_count(n, r)? as f64;
        let weight = (f_of(r)? - 1) as f64;
        h += count / nonempty * (nonempty * weight).log2();
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pes::enumerate_pes;

    fn frame(n: usize) -> Frame {
        Frame::new((1..=n).map(|i| format!("g{i}"))).unwrap()
    }

    fn ev(f: &Frame, labels: &[&str]) -> PermutationEvent {
        PermutationEvent::from_labels(f, labels).unwrap()
    }

    // Direct reading of the ordered-degree formula through explicit rank lookups.
    fn od_oracle(a: &PermutationEvent, b: &PermutationEvent) -> f64 {
        let mut union: Vec<usize> = a.sequence().to_vec();
        union.extend(b.sequence().iter().filter(|e| !a.contains(**e)));
        let sum: f64 = a
            .sequence()
            .iter()
            .filter(|e| b.contains(**e))
            .map(|&e| {
                (crate::pes::rank_in_event(a, e).unwrap() as f64
                    - crate::pes::rank_in_event(b, e).unwrap() as f64)
                    .abs()
            })
            .sum();
        (-sum / union.len() as f64).exp()
    }

    #[test]
    fn ordered_degree_examples() {
        let f = frame(3);
        let a1 = ev(&f, &["g2", "g3", "g1"]);
        let a2 = ev(&f, &["g1", "g2"]);
        let od = ordered_degree(&a1, &a2).unwrap();
        assert!((od - (-1.0f64).exp()).abs() < 1e-15);
        assert!((od - od_oracle(&a1, &a2)).abs() < 1e-15);
        assert_eq!(ordered_degree(&a1, &a1).unwrap(), 1.0);
        assert_eq!(
            ordered_degree(&ev(&f, &["g1"]), &ev(&f, &["g2", "g3"])).unwrap(),
            1.0
        );
        assert_eq!(
            similarity(&ev(&f, &["g1"]), &ev(&f, &["g2", "g3"])).unwrap(),
            0.0
        );
        assert!(ordered_degree(&PermutationEvent::empty(), &PermutationEvent::empty()).is_err());
    }

    #[test]
    fn ordered_degree_agrees_with_oracle_everywhere() {
        let idx = enumerate_pes(&frame(3)).unwrap();
        for a in idx.nonempty_events() {
            for b in idx.nonempty_events() {
                let od = ordered_degree(a, b).unwrap();
                assert!((od - od_oracle(a, b)).abs() < 1e-15);
                assert_eq!(od, ordered_degree(b, a).unwrap());
                assert!(od > 0.0 && od <= 1.0);
            }
        }
    }

    #[test]
    fn rd_matrix_two_elements() {
        let f = frame(2);
        let idx = enumerate_pes(&f).unwrap();
        let rd = rd_matrix(&idx).unwrap();
        assert_eq!(rd.dim(), 4);
        // positions: (g1)=0, (g2)=1, (g1,g2)=2, (g2,g1)=3
        assert!((rd.get(0, 3) - 0.5 * (-0.5f64).exp()).abs() < 1e-15);
        assert!((rd.get(0, 3) - 0.303265).abs() < 1e-6);
        assert!((rd.get(2, 3) - (-1.0f64).exp()).abs() < 1e-15);
        assert_eq!(rd.get(0, 1), 0.0);
        for r in 0..4 {
            assert_eq!(rd.get(r, r), 1.0);
            for s in 0..4 {
                assert_eq!(rd.get(r, s), rd.get(s, r));
            }
        }
    }

    #[test]
    fn rd_matrix_cap() {
        let idx = enumerate_pes(&frame(3)).unwrap();
        let err = rd_matrix_with_cap(&idx, 4).unwrap_err();
        assert!(matches!(
            err,
            Error::CapExceeded {
                frame_size: 3,
                cap: 2,
                delta: Some(16)
            }
        ));
    }

    #[test]
    fn distance_basics() {
        let f = frame(2);
        let idx = enumerate_pes(&f).unwrap();
        let rd = rd_matrix(&idx).unwrap();
        let a =
            PermutationMassFunction::from_assignments(&f, vec![(ev(&f, &["g1"]), 1.0)]).unwrap();
        let b =
            PermutationMassFunction::from_assignments(&f, vec![(ev(&f, &["g2"]), 1.0)]).unwrap();
        assert_eq!(rps_distance(&idx, &a, &a).unwrap(), 0.0);
        // disjoint singletons: v = (1, -1, 0, 0), vᵀRDv = 2
        assert!((rps_distance(&idx, &a, &b).unwrap() - 1.0).abs() < 1e-15);
        assert!((rd.distance(&a, &b).unwrap() - 1.0).abs() < 1e-15);

        let other = enumerate_pes(&Frame::new(["x", "y"]).unwrap()).unwrap();
        assert!(matches!(
            rps_distance(&other, &a, &b),
            Err(Error::FrameMismatch(_))
        ));
        let rd_other = rd_matrix(&other).unwrap();
        assert!(matches!(
            rd_other.distance(&a, &b),
            Err(Error::FrameMismatch(_))
        ));
    }

    #[test]
    fn radicand_handling() {
        assert_eq!(finish_distance(-1e-13).unwrap(), 0.0);
        assert!(matches!(finish_distance(-1e-9), Err(Error::Numerical(_))));
        assert_eq!(finish_distance(8.0).unwrap(), 2.0);
    }

    #[test]
    fn entropy_values() {
        let f = frame(2);
        let idx = enumerate_pes(&f).unwrap();
        let pm0 = PermutationMassFunction::from_assignments(
            &f,
            vec![
                (ev(&f, &["g1"]), 0.1),
                (ev(&f, &["g2"]), 0.7),
                (ev(&f, &["g1", "g2"]), 0.2),
            ],
        )
        .unwrap();
        let h0 = rps_entropy(&pm0).unwrap();
        let by_hand = -(0.1f64 * 0.1f64.log2() + 0.7 * 0.7f64.log2() + 0.2 * (0.2f64 / 4.0).log2());
        assert!((h0 - by_hand).abs() < 1e-15);
        assert!((h0 - 1.5567).abs() < 1e-3);

        let u = PermutationMassFunction::uniform(&idx).unwrap();
        assert!((rps_entropy(&u).unwrap() - 3.0).abs() < 1e-12);

        let point =
            PermutationMassFunction::from_assignments(&f, vec![(ev(&f, &["g2"]), 1.0)]).unwrap();
        assert_eq!(rps_entropy(&point).unwrap(), 0.0);
    }

    #[test]
    fn uniform_entropy_matches_direct_evaluation() {
        assert!((uniform_entropy(&frame(2)).unwrap() - 3.0).abs() < 1e-12);
        for n in 2..=4 {
            let f = frame(n);
            let idx = enumerate_pes(&f).unwrap();
            let direct = rps_entropy(&PermutationMassFunction::uniform(&idx).unwrap()).unwrap();
            assert!((uniform_entropy(&f).unwrap() - direct).abs() < 1e-12);
        }
        assert!(uniform_entropy(&frame(1)).is_err());
    }

    #[test]
    fn entropy_ignores_order_within_events() {
        let f = frame(3);
        let a = PermutationMassFunction::from_assignments(
            &f,
            vec![
                (ev(&f, &["g1", "g2", "g3"]), 0.6),
                (ev(&f, &["g3", "g1"]), 0.4),
            ],
        )
        .unwrap();
        let b = PermutationMassFunction::from_assignments(
            &f,
            vec![
                (ev(&f, &["g3", "g2", "g1"]), 0.6),
                (ev(&f, &["g1", "g3"]), 0.4),
            ],
        )
        .unwrap();
        assert_eq!(rps_entropy(&a).unwrap(), rps_entropy(&b).unwrap());
    }
}
