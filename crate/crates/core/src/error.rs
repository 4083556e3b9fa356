use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An exact integer count does not fit in 64 bits.
    #[error("integer overflow computing {0}")]
    Overflow(String),

    /// Enumerating the event space would exceed the configured cap.
    #[error(
        "event space too large: frame of {frame_size} elements gives {} events, cap is {cap} elements",
        delta.map_or_else(|| "more than u64::MAX".to_string(), |d| d.to_string())
    )]
    CapExceeded {
        frame_size: usize,
        cap: usize,
        delta: Option<u64>,
    },

    /// A mass function, distribution or BPA violates its invariants.
    #[error("validation error: {0}")]
    Validation(String),

    #[error("frame mismatch: {0}")]
    FrameMismatch(String),

    /// Floating point result outside the tolerated range.
    #[error("numerical error: {0}")]
    Numerical(String),
}
