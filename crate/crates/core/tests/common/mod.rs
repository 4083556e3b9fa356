#![allow(dead_code)]

use rand::Rng;
use rps_core::{EventSpaceIndex, Frame, PermutationEvent, PermutationMassFunction};

pub fn frame(n: usize) -> Frame {
    Frame::new((1..=n).map(|i| format!("g{i}"))).unwrap()
}

pub fn ev(frame: &Frame, labels: &[&str]) -> PermutationEvent {
    PermutationEvent::from_labels(frame, labels).unwrap()
}

/// The PM_0 of the nine-step experiment: A:0.1, B:0.7, (A,B):0.2.
pub fn two_element_pm0(frame: &Frame) -> PermutationMassFunction {
    let l = frame.labels();
    let (a, b) = (l[0].as_str(), l[1].as_str());
    PermutationMassFunction::from_assignments(
        frame,
        vec![
            (ev(frame, &[a]), 0.1),
            (ev(frame, &[b]), 0.7),
            (ev(frame, &[a, b]), 0.2),
        ],
    )
    .unwrap()
}

/// Random PM: each nonempty event is focal with probability 1/2, with uniform weights.
pub fn random_pm<R: Rng>(rng: &mut R, index: &EventSpaceIndex) -> PermutationMassFunction {
    let dim = index.delta() - 1;
    loop {
        let weights: Vec<f64> = (0..dim)
            .map(|_| {
                if rng.gen_bool(0.5) {
                    rng.gen::<f64>()
                } else {
                    0.0
                }
            })
            .collect();
        let total: f64 = weights.iter().sum();
        if total < 1e-3 {
            continue;
        }
        let dense: Vec<f64> = weights.iter().map(|w| w / total).collect();
        return PermutationMassFunction::from_dense(index, &dense).unwrap();
    }
}

/// Set-based ordered-degree kernel, written straight from the definition:
/// Jaccard(A, B) · exp(−Σ_{θ∈A∩B} |rank_A(θ) − rank_B(θ)| / |A∪B|).
pub fn kernel_oracle(a: &[usize], b: &[usize]) -> f64 {
    use std::collections::BTreeSet;
    let sa: BTreeSet<usize> = a.iter().copied().collect();
    let sb: BTreeSet<usize> = b.iter().copied().collect();
    let inter: Vec<usize> = sa.intersection(&sb).copied().collect();
    let union = sa.union(&sb).count() as f64;
    let rank = |seq: &[usize], x: usize| (seq.iter().position(|&y| y == x).unwrap() + 1) as f64;
    let disagreement: f64 = inter.iter().map(|&x| (rank(a, x) - rank(b, x)).abs()).sum();
    inter.len() as f64 / union * (-disagreement / union).exp()
}

/// Brute-force double sum over every pair of nonempty events.
pub fn distance_oracle(
    index: &EventSpaceIndex,
    pm1: &PermutationMassFunction,
    pm2: &PermutationMassFunction,
) -> f64 {
    let events = index.nonempty_events();
    let mut acc = 0.0;
    for r in events {
        let dr = pm1.mass_of(r).unwrap() - pm2.mass_of(r).unwrap();
        for s in events {
            let ds = pm1.mass_of(s).unwrap() - pm2.mass_of(s).unwrap();
            acc += dr * ds * kernel_oracle(r.sequence(), s.sequence());
        }
    }
    (0.5 * acc).max(0.0).sqrt()
}

/// Counts all repetition-free sequences of length 0..=n over n symbols by
/// filtering every n-ary tuple.
pub fn brute_force_pes_size(n: usize) -> u64 {
    let mut count = 0u64;
    for r in 0..=n {
        let total = n.pow(r as u32);
        for code in 0..total {
            let mut seen = 0u32;
            let mut c = code;
            let mut ok = true;
            for _ in 0..r {
                let d = c % n;
                c /= n;
                if seen & (1 << d) != 0 {
                    ok = false;
                    break;
                }
                seen |= 1 << d;
            }
            if ok {
                count += 1;
            }
        }
    }
    count
}

pub fn sup_norm(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}
