//! Dense state-vector simulation and closed-form analysis of Grover search
//! built from an X-rotation / controlled-Y gate set.
//!
//! The crate has two halves that check each other. [`grover`] evolves the full
//! register through the iteration `Q = −P_γ U† P_τ U` (or its uncorrected
//! sibling with `U` in place of `U†`) and reads success probabilities straight
//! off the amplitudes. [`analytic`] reduces the same iteration to a 2×2 SU(2)
//! rotation on the plane spanned by the prepared and marked directions and
//! evaluates the closed form `P_s = sin²[(2s+1)θ]`, `sin θ = |⟨τ|U|γ⟩|`. For
//! every unitary `U` the two routes agree to tight tolerance, and the crate's
//! test suite leans on exactly that agreement.
//!
//! Conventions: qubit 0 is the most significant bit of a basis index, states
//! are normalized within 1e−12, matrices unitary within 1e−10, registers
//! capped at [`MAX_QUBITS`] qubits.
//!
//! ```
//! use grover_core::analytic::{predict, w_theta};
//! use grover_core::grover::{run, GroverSpec};
//! use grover_core::StateVector;
//!
//! // Search |11⟩ from |00⟩ with the corrected two-qubit sequence.
//! let spec = GroverSpec::corrected(
//!     2,
//!     StateVector::from_bitstring("00")?,
//!     StateVector::from_bitstring("11")?,
//!     4,
//! )?;
//! let traces = run(&spec)?;
//! assert!((traces[1].success_probability - 1.0).abs() < 1e-12);
//!
//! // The simulation tracks sin²[(2s+1)θ] at every iteration.
//! let curve = predict(w_theta(2)?, 4);
//! for t in &traces {
//!     assert!((t.success_probability - curve.probability(t.s)).abs() < 1e-10);
//! }
//! # Ok::<(), grover_core::Error>(())
//! ```

pub mod analytic;
pub mod error;
pub mod gates;
pub mod grover;
pub mod io;
pub mod linalg;

pub use error::{Error, Result};
pub use linalg::{
    BasisIndex, DenseUnitary, StateVector, MAX_QUBITS, NORMALIZATION_TOL, UNITARITY_TOL,
};
pub use num_complex::Complex64;
