//! Builds and runs the search iteration in its corrected and original forms.
//!
//! One iteration is `Q = −P_γ · U† · P_τ · U`: apply `U`, flip the sign of the
//! marked state `τ`, undo `U`, then reflect about the prepared state `γ`. The
//! original sequence this crate exists to dissect assembles the diffusion as
//! `W P W` instead of `W P W†`, i.e. it uses `U` where `U†` belongs; both are
//! available side by side as [`Variant`]s. Success after `s` iterations is
//! read out as `p_s = |⟨τ|U·Q^s|γ⟩|²`, matching a circuit that finishes with a
//! trailing `U` layer.

use crate::error::{Error, Result};
use crate::gates::{reflection_about_state, w_layer};
use crate::linalg::{DenseUnitary, StateVector};

/// Which iteration to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// `Q = −P_γ U† P_τ U`, the exact search.
    Corrected,
    /// `Q = −P_γ U P_τ U`, the uncorrected sequence (diffusion `W P W`).
    FengOriginal,
    /// Same form as `Corrected` with a caller-supplied `U`.
    GeneralU,
}

/// A fully validated problem instance.
#[derive(Clone, Debug)]
pub struct GroverSpec {
    n_qubits: usize,
    gamma: StateVector,
    tau: StateVector,
    variant: Variant,
    u: Option<DenseUnitary>,
    max_iterations: usize,
    emit_states: bool,
}

impl GroverSpec {
    /// Checks dimensions and variant requirements. `u = None` means
    /// `w_layer(n_qubits)`; [`Variant::GeneralU`] requires an explicit `u`.
    pub fn new(
        n_qubits: usize,
        gamma: StateVector,
        tau: StateVector,
        variant: Variant,
        u: Option<DenseUnitary>,
        max_iterations: usize,
    ) -> Result<Self> {
        let dim = 1usize << n_qubits;
        if gamma.dim() != dim {
            return Err(Error::DimensionMismatch {
                left: gamma.dim(),
                right: dim,
            });
        }
        if tau.dim() != dim {
            return Err(Error::DimensionMismatch {
                left: tau.dim(),
                right: dim,
            });
        }
        match &u {
            Some(u) if u.dim() != dim => {
                return Err(Error::DimensionMismatch {
                    left: u.dim(),
                    right: dim,
                });
            }
            None if variant == Variant::GeneralU => return Err(Error::MissingUnitary),
            _ => {}
        }
        if u.is_none() {
            // Fails fast on unsupported qubit counts.
            w_layer(n_qubits)?;
        }
        Ok(Self {
            n_qubits,
            gamma,
            tau,
            variant,
            u,
            max_iterations,
            emit_states: false,
        })
    }

    pub fn corrected(
        n_qubits: usize,
        gamma: StateVector,
        tau: StateVector,
        max_iterations: usize,
    ) -> Result<Self> {
        Self::new(
            n_qubits,
            gamma,
            tau,
            Variant::Corrected,
            None,
            max_iterations,
        )
    }

    pub fn feng_original(
        n_qubits: usize,
        gamma: StateVector,
        tau: StateVector,
        max_iterations: usize,
    ) -> Result<Self> {
        Self::new(
            n_qubits,
            gamma,
            tau,
            Variant::FengOriginal,
            None,
            max_iterations,
        )
    }

    pub fn general(
        u: DenseUnitary,
        gamma: StateVector,
        tau: StateVector,
        max_iterations: usize,
    ) -> Result<Self> {
        Self::new(
            gamma.n_qubits(),
            gamma,
            tau,
            Variant::GeneralU,
            Some(u),
            max_iterations,
        )
    }

    /// Also keep the full state vector in every [`StepTrace`].
    pub fn with_full_states(mut self, emit: bool) -> Self {
        self.emit_states = emit;
        self
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn gamma(&self) -> &StateVector {
        &self.gamma
    }

    pub fn tau(&self) -> &StateVector {
        &self.tau
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn max_iterations(&self) -> usize {
        self.max_iterations
    }

    /// The basis-change unitary actually used: the explicit one, or `W_n`.
    pub fn effective_u(&self) -> Result<DenseUnitary> {
        match &self.u {
            Some(u) => Ok(u.clone()),
            None => w_layer(self.n_qubits),
        }
    }
}

/// Iteration budget covering one full period of the probability curve,
/// `2·⌈π/(4θ)⌉`.
pub fn default_iteration_budget(theta: f64) -> usize {
    assert!(theta > 0.0 && theta.is_finite(), "theta must be positive");
    2 * (std::f64::consts::FRAC_PI_4 / theta).ceil() as usize
}

/// One row of a run: iteration count, success probability, and the magnitude
/// of the marked-state amplitude whose square it is.
#[derive(Clone, Debug)]
pub struct StepTrace {
    pub s: usize,
    pub success_probability: f64,
    pub marked_amplitude_magnitude: f64,
    pub full_state: Option<StateVector>,
}

/// Assembles the iteration matrix for the spec's variant.
pub fn build_step(spec: &GroverSpec) -> Result<DenseUnitary> {
    let u = spec.effective_u()?;
    let p_gamma = reflection_about_state(spec.gamma());
    let p_tau = reflection_about_state(spec.tau());
    let undo = match spec.variant() {
        Variant::Corrected | Variant::GeneralU => u.adjoint(),
        Variant::FengOriginal => u.clone(),
    };
    let step = p_gamma.multiply(&undo)?.multiply(&p_tau)?.multiply(&u)?;
    let negated: Vec<_> = step.entries().iter().map(|z| -z).collect();
    DenseUnitary::new(step.dim(), negated)
}

/// Evolves `ψ_s = Q^s|γ⟩` for `s = 0..=max_iterations`, reading out
/// `p_s = |⟨τ|U|ψ_s⟩|²` at every step.
pub fn run(spec: &GroverSpec) -> Result<Vec<StepTrace>> {
    let u = spec.effective_u()?;
    let step = build_step(spec)?;
    let mut psi = spec.gamma().clone();
    let mut traces = Vec::with_capacity(spec.max_iterations() + 1);
    for s in 0..=spec.max_iterations() {
        let readout = u.apply(&psi)?;
        let amplitude = spec.tau().inner_product(&readout)?;
        let magnitude = amplitude.norm();
        traces.push(StepTrace {
            s,
            success_probability: magnitude * magnitude,
            marked_amplitude_magnitude: magnitude,
            full_state: spec.emit_states.then(|| psi.clone()),
        });
        if s < spec.max_iterations() {
            psi = step.apply(&psi)?;
        }
    }
    Ok(traces)
}

/// The iteration count ending the first rise of `sin²[(2s+1)θ]`: the integer
/// minimizing `|(2s+1)θ − π/2|`, ties broken toward smaller `s`.
pub fn optimal_iterations(theta: f64) -> Result<usize> {
    if !(theta > 0.0 && theta <= std::f64::consts::FRAC_PI_2) || !theta.is_finite() {
        return Err(Error::ThetaOutOfRange { theta });
    }
    let target = std::f64::consts::FRAC_PI_2;
    let real = (target / theta - 1.0) / 2.0;
    let lower = real.floor().max(0.0) as usize;
    let upper = lower + 1;
    let distance = |s: usize| ((2 * s + 1) as f64 * theta - target).abs();
    if distance(upper) < distance(lower) {
        Ok(upper)
    } else {
        Ok(lower)
    }
}

/// Convenience: the success probabilities of a run, in iteration order.
pub fn probabilities(traces: &[StepTrace]) -> Vec<f64> {
    traces.iter().map(|t| t.success_probability).collect()
}
