//! Closed-form analysis of the search iteration.
//!
//! For any unitary `U`, prepared state `γ`, and marked state `τ`, the plane
//! spanned by `γ` and `U†|τ⟩` is invariant under `Q = −P_γ U† P_τ U`. On the
//! orthonormal frame `{|0_L⟩ = γ′, |1_L⟩ = U†τ}` the iteration acts as the
//! SU(2) rotation
//!
//! ```text
//! Q′ = [[cos 2θ, −(û*)·sin 2θ],
//!       [ û·sin 2θ,   cos 2θ]]   =   e^{−i·2θ·n̂·σ},
//! ```
//!
//! where `u = ⟨τ|U|γ⟩`, `û = u/|u|`, `sin θ = |u|`, and the axis
//! `n̂ = (−Im û, Re û)` lies in the XY plane. Each iteration advances the
//! pseudo-spin by `4θ` and the initial state sits at `2θ`, giving the success
//! probability `P_s = sin²[(2s+1)θ]` after `s` iterations.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{DenseUnitary, StateVector, MAX_QUBITS};

/// A unit vector in the XY plane of the pseudo-spin Bloch sphere.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RotationAxis {
    nx: f64,
    ny: f64,
}

impl RotationAxis {
    /// Requires `nx² + ny² = 1` within 1e−12.
    pub fn new(nx: f64, ny: f64) -> Result<Self> {
        if !nx.is_finite() || !ny.is_finite() || (nx * nx + ny * ny - 1.0).abs() > 1e-12 {
            return Err(Error::NonUnitAxis { nx, ny });
        }
        Ok(Self { nx, ny })
    }

    /// Axis determined by a unit phase: `(−Im û, Re û)`.
    pub fn from_unit_phase(unit: Complex64) -> Self {
        debug_assert!((unit.norm() - 1.0).abs() < 1e-9);
        // `+ 0.0` folds a negative zero into plain zero.
        Self {
            nx: -unit.im + 0.0,
            ny: unit.re + 0.0,
        }
    }

    pub fn nx(self) -> f64 {
        self.nx
    }

    pub fn ny(self) -> f64 {
        self.ny
    }
}

/// The reduction of one iteration to its invariant plane.
#[derive(Clone, Debug)]
pub struct PseudoSpinReduction {
    /// `⟨τ|U|γ⟩`.
    pub u_tau_gamma: Complex64,
    /// `arcsin |⟨τ|U|γ⟩|`, in `[0, π/2]`.
    pub theta: f64,
    /// Rotation axis, fixed by the phase of `u_tau_gamma` alone.
    pub axis: RotationAxis,
    /// The 2×2 rotation acting on `{γ′, U†τ}`.
    pub q_prime: DenseUnitary,
}

/// The closed-form success curve `p(s) = sin²[(2s+1)θ]`.
#[derive(Clone, Debug)]
pub struct PredictionCurve {
    pub theta: f64,
    pub points: Vec<(usize, f64)>,
}

impl PredictionCurve {
    pub fn probability(&self, s: usize) -> f64 {
        self.points[s].1
    }
}

/// `⟨τ|U|γ⟩`.
pub fn matrix_element(
    u: &DenseUnitary,
    tau: &StateVector,
    gamma: &StateVector,
) -> Result<Complex64> {
    tau.inner_product(&u.apply(gamma)?)
}

/// Performs the pseudo-spin reduction.
///
/// Fails with [`Error::DegenerateOverlap`] when `⟨τ|U|γ⟩ = 0` (no rotation
/// axis) and [`Error::SaturatedOverlap`] when `|⟨τ|U|γ⟩| = 1` (no orthonormal
/// complement, `γ′` undefined).
pub fn reduce(
    u: &DenseUnitary,
    gamma: &StateVector,
    tau: &StateVector,
) -> Result<PseudoSpinReduction> {
    let u_tau_gamma = matrix_element(u, tau, gamma)?;
    let magnitude = u_tau_gamma.norm();
    if magnitude == 0.0 {
        return Err(Error::DegenerateOverlap);
    }
    if magnitude >= 1.0 {
        return Err(Error::SaturatedOverlap);
    }
    let unit = u_tau_gamma / magnitude;
    let theta = magnitude.asin();
    let axis = RotationAxis::from_unit_phase(unit);
    let (sin2, cos2) = (2.0 * theta).sin_cos();
    let q_prime = DenseUnitary::new(
        2,
        vec![
            Complex64::new(cos2, 0.0),
            -unit.conj() * sin2,
            unit * sin2,
            Complex64::new(cos2, 0.0),
        ],
    )?;
    Ok(PseudoSpinReduction {
        u_tau_gamma,
        theta,
        axis,
        q_prime,
    })
}

/// The orthonormalized initial state
/// `γ′ = (γ − U_τγ·U†τ) / √(1 − |U_τγ|²)`, normalized and orthogonal to `U†τ`.
pub fn gamma_prime(
    u: &DenseUnitary,
    gamma: &StateVector,
    tau: &StateVector,
) -> Result<StateVector> {
    let u_tau_gamma = matrix_element(u, tau, gamma)?;
    let cos_sq = 1.0 - u_tau_gamma.norm_sqr();
    if cos_sq <= 0.0 {
        return Err(Error::SaturatedOverlap);
    }
    let scale = cos_sq.sqrt();
    let u_dag_tau = u.adjoint().apply(tau)?;
    let amps = gamma
        .amps()
        .iter()
        .zip(u_dag_tau.amps())
        .map(|(g, t)| (g - u_tau_gamma * t) / scale)
        .collect();
    StateVector::new(gamma.n_qubits(), amps)
}

/// The SU(2) rotation `cos(angle/2)·I − i·sin(angle/2)·(nx·σx + ny·σy)` about
/// an XY-plane axis.
pub fn su2_rotation(axis: &RotationAxis, angle: f64) -> DenseUnitary {
    assert!(angle.is_finite(), "rotation angle must be finite");
    let (sin, cos) = (angle / 2.0).sin_cos();
    let phase = Complex64::new(axis.ny(), axis.nx());
    // −i·sin·(nx·σx + ny·σy): off-diagonals −sin·(ny + i·nx) and sin·(ny − i·nx).
    DenseUnitary::new(
        2,
        vec![
            Complex64::new(cos, 0.0),
            -sin * phase,
            sin * phase.conj(),
            Complex64::new(cos, 0.0),
        ],
    )
    .expect("SU(2) rotation is unitary")
}

/// Tabulates `sin²[(2s+1)θ]` for `s = 0..=s_max`; valid for `θ ∈ [0, π/2]`.
pub fn predict(theta: f64, s_max: usize) -> PredictionCurve {
    assert!(theta.is_finite(), "theta must be finite");
    let points = (0..=s_max)
        .map(|s| {
            let p = ((2 * s + 1) as f64 * theta).sin().powi(2);
            (s, p)
        })
        .collect();
    PredictionCurve { theta, points }
}

/// The overlap angle of `W_n` between any two basis states:
/// `θ = arcsin(1/√N)` with `N = 2^n`.
pub fn w_theta(n: usize) -> Result<f64> {
    if n == 0 || n > MAX_QUBITS {
        return Err(Error::QubitCountOutOfRange {
            n,
            min: 1,
            max: MAX_QUBITS,
        });
    }
    Ok(((1u64 << n) as f64).sqrt().recip().asin())
}
