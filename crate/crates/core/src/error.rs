use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors surfaced by state, gate, and reduction constructors.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix of dimension {dim} is not unitary: residual {residual:.3e} exceeds {tol:.1e}")]
    NotUnitary { dim: usize, residual: f64, tol: f64 },

    #[error("state vector is not normalized: |sum |a|^2 - 1| = {defect:.3e}")]
    NotNormalized { defect: f64 },

    #[error("non-finite value at flat index {index}")]
    NonFinite { index: usize },

    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("qubit count {n} outside supported range {min}..={max}")]
    QubitCountOutOfRange { n: usize, min: usize, max: usize },

    #[error("amplitude list length {len} does not equal 2^{n_qubits}")]
    BadAmplitudeCount { len: usize, n_qubits: usize },

    #[error("qubit {qubit} invalid for a {n_qubits}-qubit circuit")]
    InvalidQubit { qubit: usize, n_qubits: usize },

    #[error("qubit {qubit} referenced twice by one gate")]
    DuplicateQubit { qubit: usize },

    #[error("overlap |<tau|U|gamma>| = 0: rotation axis undefined")]
    DegenerateOverlap,

    #[error("overlap |<tau|U|gamma>| = 1: orthonormal complement undefined")]
    SaturatedOverlap,

    #[error("cannot fix a global phase against an all-zero matrix")]
    ZeroMatrix,

    #[error("axis ({nx}, {ny}) is not a unit vector")]
    NonUnitAxis { nx: f64, ny: f64 },

    #[error("theta = {theta} outside required range (0, pi/2]")]
    ThetaOutOfRange { theta: f64 },

    #[error("bitstring {s:?} must be 1..=12 characters, each 0 or 1")]
    InvalidBitstring { s: String },

    #[error("the general variant requires an explicit unitary")]
    MissingUnitary,

    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),

    #[error("malformed unitary JSON: {0}")]
    MalformedJson(String),
}
