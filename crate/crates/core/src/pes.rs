//! Frames, permutation events and the permutation event space (PES).
//!
//! The PES of a frame with `n` elements holds every ordered arrangement of
//! every subset of the frame, including the empty event. Its size is
//! `Δ = Σ_{r=0..n} P(n, r)`.
//!
//! Events are totally ordered by cardinality first and then lexicographically
//! by their index sequence; this canonical order fixes the layout of every
//! dense vector and matrix in the crate.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::{Error, Result};

/// Largest frame [`enumerate_pes`] will expand (Δ(7) = 13700).
pub const DEFAULT_MAX_FRAME_SIZE: usize = 7;

/// Ordered roster of distinct element labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Frame {
    labels: Arc<[String]>,
}

impl Frame {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::Validation(
                "frame must contain at least one element".into(),
            ));
        }
        for (i, label) in labels.iter().enumerate() {
            if labels[..i].contains(label) {
                return Err(Error::Validation(format!(
                    "duplicate frame element {label:?}"
                )));
            }
        }
        Ok(Self {
            labels: labels.into(),
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> Option<&str> {
        self.labels.get(index).map(String::as_str)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Whether every index of `event` refers to an element of this frame.
    pub fn contains_event(&self, event: &PermutationEvent) -> bool {
        event.0.iter().all(|&i| i < self.len())
    }

    /// Renders an event with this frame's labels, e.g. `(g2,g1)`.
    pub fn display_event(&self, event: &PermutationEvent) -> String {
        let parts: Vec<&str> = event
            .0
            .iter()
            .map(|&i| self.label(i).unwrap_or("?"))
            .collect();
        format!("({})", parts.join(","))
    }
}

/// An ordered sequence of distinct frame element indices.
///
/// `(g1, g2)` and `(g2, g1)` are different events.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PermutationEvent(Vec<usize>);

impl PermutationEvent {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn new(frame: &Frame, sequence: Vec<usize>) -> Result<Self> {
        for (pos, &idx) in sequence.iter().enumerate() {
            if idx >= frame.len() {
                return Err(Error::Domain(format!(
                    "element index {idx} out of range for frame of {} elements",
                    frame.len()
                )));
            }
            if sequence[..pos].contains(&idx) {
                return Err(Error::Domain(format!(
                    "element {:?} repeated in permutation event",
                    frame.labels[idx]
                )));
            }
        }
        Ok(Self(sequence))
    }

    pub fn from_labels<S: AsRef<str>>(frame: &Frame, labels: &[S]) -> Result<Self> {
        let seq = labels
            .iter()
            .map(|l| {
                let l = l.as_ref();
                frame
                    .index_of(l)
                    .ok_or_else(|| Error::Domain(format!("unknown frame element {l:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(frame, seq)
    }

    pub fn sequence(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, element: usize) -> bool {
        self.0.contains(&element)
    }

    /// 1-based position of `element`, if present.
    pub fn rank_of(&self, element: usize) -> Option<usize> {
        self.0.iter().position(|&e| e == element).map(|p| p + 1)
    }
}

impl Ord for PermutationEvent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for PermutationEvent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PermutationEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// `P(n, r) = n! / (n - r)!`, exact.
pub fn perm_count(n: u64, r: u64) -> Result<u64> {
    if r > n {
        return Err(Error::Domain(format!(
            "P(n, r) requires r <= n, got n={n}, r={r}"
        )));
    }
    ((n - r + 1)..=n).try_fold(1u64, |acc, k| {
        acc.checked_mul(k)
            .ok_or_else(|| Error::Overflow(format!("P({n}, {r})")))
    })
}

/// `F(i) = Σ_{k=0..i} P(i, k)`, the number of permutation events over `i` elements.
pub fn f_of(i: u64) -> Result<u64> {
    (0..=i).try_fold(0u64, |acc, k| {
        acc.checked_add(perm_count(i, k)?)
            .ok_or_else(|| Error::Overflow(format!("F({i})")))
    })
}

/// `Δ`, the cardinality of the PES of an `n`-element frame (empty event included).
pub fn pes_cardinality(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::Domain("a frame needs at least one element".into()));
    }
    f_of(n)
}

/// 1-based position of `element` within `event`.
pub fn rank_in_event(event: &PermutationEvent, element: usize) -> Result<usize> {
    event
        .rank_of(element)
        .ok_or_else(|| Error::Domain(format!("element {element} does not occur in event {event}")))
}

/// Jaccard index of the underlying element sets; order is ignored.
pub fn jaccard(a: &PermutationEvent, b: &PermutationEvent) -> Result<f64> {
    if a.is_empty() && b.is_empty() {
        return Err(Error::Domain(
            "Jaccard index undefined for two empty events".into(),
        ));
    }
    let shared = a.0.iter().filter(|&&e| b.contains(e)).count();
    let union = a.len() + b.len() - shared;
    Ok(shared as f64 / union as f64)
}

/// Canonical bijection between the PES of a frame and `0..Δ`.
///
/// Ordinal 0 is always the empty event.
#[derive(Debug, Clone)]
pub struct EventSpaceIndex {
    frame: Frame,
    events: Vec<PermutationEvent>,
    ordinals: HashMap<PermutationEvent, usize>,
}

impl EventSpaceIndex {
    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    /// Δ, counting the empty event.
    pub fn delta(&self) -> usize {
        self.events.len()
    }

    /// All events in canonical order, starting with the empty event.
    pub fn events(&self) -> &[PermutationEvent] {
        &self.events
    }

    /// The Δ−1 nonempty events; position `k` holds ordinal `k + 1`.
    pub fn nonempty_events(&self) -> &[PermutationEvent] {
        &self.events[1..]
    }

    pub fn event_of(&self, ordinal: usize) -> Option<&PermutationEvent> {
        self.events.get(ordinal)
    }

    pub fn ordinal_of(&self, event: &PermutationEvent) -> Option<usize> {
        self.ordinals.get(event).copied()
    }
}

/// Enumerates the PES of `frame` under [`DEFAULT_MAX_FRAME_SIZE`].
pub fn enumerate_pes(frame: &Frame) -> Result<EventSpaceIndex> {
    enumerate_pes_with_cap(frame, DEFAULT_MAX_FRAME_SIZE)
}

pub fn enumerate_pes_with_cap(frame: &Frame, max_frame_size: usize) -> Result<EventSpaceIndex> {
    let n = frame.len();
    if n > max_frame_size {
        return Err(Error::CapExceeded {
            frame_size: n,
            cap: max_frame_size,
            delta: pes_cardinality(n as u64).ok(),
        });
    }
    let delta = pes_cardinality(n as u64)?;
    let capacity =
        usize::try_from(delta).map_err(|_| Error::Overflow(format!("Δ({n}) as a memory size")))?;

    let mut events = Vec::with_capacity(capacity);
    let mut current = Vec::with_capacity(n);
    let mut used = vec![false; n];
    for r in 0..=n {
        arrangements(r, &mut used, &mut current, &mut events);
    }
    debug_assert_eq!(events.len(), capacity);

    let ordinals = events
        .iter()
        .enumerate()
        .map(|(k, e)| (e.clone(), k))
        .collect();
    Ok(EventSpaceIndex {
        frame: frame.clone(),
        events,
        ordinals,
    })
}

// Pushes every arrangement of length `r` extending `current`, in lexicographic order.
fn arrangements(
    r: usize,
    used: &mut [bool],
    current: &mut Vec<usize>,
    out: &mut Vec<PermutationEvent>,
) {
    if current.len() == r {
        out.push(PermutationEvent(current.clone()));
        return;
    }
    for e in 0..used.len() {
        if used[e] {
            continue;
        }
        used[e] = true;
        current.push(e);
        arrangements(r, used, current, out);
        current.pop();
        used[e] = false;
    }
}
