use thiserror::Error;

use crate::circuit::ParseError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("basis index {index} out of range for {n} qubit(s)")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("qubit {qubit} out of range for {n} qubit(s)")]
    QubitOutOfRange { qubit: usize, n: usize },

    #[error("qubit {qubit} listed more than once")]
    DuplicateQubit { qubit: usize },

    #[error("qubit counts differ: {left} vs {right}")]
    QubitCountMismatch { left: usize, right: usize },

    #[error("gate acts on {expected} qubit(s), got {got} target(s)")]
    ArityMismatch { expected: usize, got: usize },

    #[error("amplitude vector has length {got}, expected {expected}")]
    BadAmplitudeCount { expected: usize, got: usize },

    #[error("state norm is {norm}, not 1")]
    NotNormalized { norm: f64 },

    #[error("matrix for '{label}' is not unitary")]
    NotUnitary { label: String },

    #[error("matrix is not a valid density matrix: {reason}")]
    InvalidDensity { reason: &'static str },

    #[error("distribution is not a valid probability distribution: {reason}")]
    InvalidDistribution { reason: &'static str },

    #[error("partition must be a nonempty proper subset of the qubits")]
    InvalidPartition,

    #[error("{n} qubits exceeds the supported maximum of {max} for {what}")]
    TooManyQubits { n: usize, max: usize, what: &'static str },

    #[error("projection probability {probability:.3e} is below 1e-12; branch is impossible")]
    ImpossibleBranch { probability: f64 },

    #[error("{what} must lie in [{lo}, {hi}], got {value}")]
    OutOfRange {
        what: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("{0}")]
    Invalid(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}
