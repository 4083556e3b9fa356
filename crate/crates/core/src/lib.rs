//! Random permutation sets (RPS).
//!
//! Builds permutation event spaces over a frame of labels, represents
//! permutation mass functions (PMs) over them, and provides the PM negation
//! operator together with the RPS entropy and RPS distance used to study
//! iterated negation.
//!
//! ```
//! use rps_core::{enumerate_pes, negate_pm, Frame, PermutationEvent, PermutationMassFunction};
//!
//! let frame = Frame::new(["g1", "g2"]).unwrap();
//! let index = enumerate_pes(&frame).unwrap();
//! let ev = |labels: &[&str]| PermutationEvent::from_labels(&frame, labels).unwrap();
//! let pm = PermutationMassFunction::from_assignments(
//!     &frame,
//!     vec![(ev(&["g1"]), 0.1), (ev(&["g2"]), 0.7), (ev(&["g1", "g2"]), 0.2)],
//! )
//! .unwrap();
//! let negated = negate_pm(&index, &pm).unwrap();
//! assert!((negated.mass_of(&ev(&["g2", "g1"])).unwrap() - 1.0 / 3.0).abs() < 1e-15);
//! ```

mod error;
pub mod mass;
pub mod measures;
pub mod negation;
pub mod pes;
pub mod trace;

pub use error::{Error, Result};
pub use mass::{
    BasicProbabilityAssignment, ElementSet, PermutationMassFunction, ProbabilityDistribution,
    SUM_TOLERANCE,
};
pub use measures::{
    ordered_degree, rd_matrix, rd_matrix_with_cap, rps_distance, rps_entropy, similarity,
    uniform_entropy, RdMatrix,
};
pub use negation::{
    closed_form_iterate, fixed_point_mass, iterate_negation, negate_pm, yager_negate, yin_negate,
    NegationParameters,
};
pub use pes::{
    enumerate_pes, enumerate_pes_with_cap, f_of, jaccard, perm_count, pes_cardinality,
    rank_in_event, EventSpaceIndex, Frame, PermutationEvent, DEFAULT_MAX_FRAME_SIZE,
};
pub use trace::{
    build_trace, detect_convergence, theoretical_distance_series, NegationTrace,
    DEFAULT_CONVERGENCE_EPS, DEFAULT_ITERATIONS,
};
