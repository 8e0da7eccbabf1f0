//! The trapped-ion gate set and a symbolic-circuit compiler.
//!
//! Two primitives generate everything here: the X rotation
//!
//! ```text
//! U(θ) = R_x(2θ) = [[cos θ, −i sin θ],
//!                   [−i sin θ, cos θ]]
//! ```
//!
//! and the controlled-Y entangler `M` (Y applied to the target when the
//! control is 1). From these come the layer `W_n = R_x(−π/2)^{⊗n}` that
//! replaces the Hadamard wall, and the sign flips `P_m^(n)` used as oracle
//! and diffusion reflections. `m` is zero-based over basis labels, so
//! `m = 0` flips `|0…0⟩`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{BasisIndex, DenseUnitary, StateVector, MAX_QUBITS, UNITARITY_TOL};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn check_qubit_count(n: usize) -> Result<()> {
    if n == 0 || n > MAX_QUBITS {
        return Err(Error::QubitCountOutOfRange {
            n,
            min: 1,
            max: MAX_QUBITS,
        });
    }
    Ok(())
}

/// The X rotation `U(θ) = R_x(2θ)`.
///
/// `U(−π/4)` is the `R_x(−π/2)` factor of `W_n`; `U(π/4)` is its adjoint.
pub fn u_gate(theta: f64) -> DenseUnitary {
    assert!(theta.is_finite(), "rotation angle must be finite");
    let (s, cos) = (theta.sin(), theta.cos());
    DenseUnitary::new(2, vec![c(cos, 0.0), c(0.0, -s), c(0.0, -s), c(cos, 0.0)])
        .expect("X rotation is unitary")
}

/// The two-qubit controlled-Y matrix, written out exactly:
///
/// ```text
/// [[1, 0, 0,  0],
///  [0, 1, 0,  0],
///  [0, 0, 0, −i],
///  [0, 0, i,  0]]
/// ```
///
/// Control is qubit 0 (most significant bit), target qubit 1, so
/// `M|10⟩ = i|11⟩` and `M|11⟩ = −i|10⟩`.
pub fn m_gate() -> DenseUnitary {
    let o = c(0.0, 0.0);
    let l = c(1.0, 0.0);
    let i = c(0.0, 1.0);
    #[rustfmt::skip]
    let entries = vec![
        l, o, o, o,
        o, l, o, o,
        o, o, o, -i,
        o, o, i, o,
    ];
    DenseUnitary::new(4, entries).expect("controlled-Y is unitary")
}

/// Controlled-Y with an arbitrary control set: Y hits `target` on exactly the
/// basis states whose control bits are all 1.
pub fn multi_controlled_y(n: usize, controls: &[usize], target: usize) -> Result<DenseUnitary> {
    check_qubit_count(n)?;
    let mut seen = vec![false; n];
    for &q in controls.iter().chain(std::iter::once(&target)) {
        if q >= n {
            return Err(Error::InvalidQubit {
                qubit: q,
                n_qubits: n,
            });
        }
        if seen[q] {
            return Err(Error::DuplicateQubit { qubit: q });
        }
        seen[q] = true;
    }
    let dim = 1 << n;
    let target_mask = 1usize << (n - 1 - target);
    let control_mask: usize = controls.iter().map(|&q| 1usize << (n - 1 - q)).sum();
    let mut entries = vec![c(0.0, 0.0); dim * dim];
    for col in 0..dim {
        if col & control_mask == control_mask {
            // Y: |0⟩ → i|1⟩, |1⟩ → −i|0⟩ on the target bit.
            let row = col ^ target_mask;
            entries[row * dim + col] = if col & target_mask == 0 {
                c(0.0, 1.0)
            } else {
                c(0.0, -1.0)
            };
        } else {
            entries[col * dim + col] = c(1.0, 0.0);
        }
    }
    DenseUnitary::new(dim, entries)
}

/// `W_n = R_x(−π/2)^{⊗n}`, the layer standing in for the Hadamard wall.
pub fn w_layer(n: usize) -> Result<DenseUnitary> {
    check_qubit_count(n)?;
    Ok(tensor_power(&u_gate(-std::f64::consts::FRAC_PI_4), n))
}

/// `W_n† = R_x(π/2)^{⊗n}`, built from the opposite rotation so that it equals
/// `w_layer(n).adjoint()` entry for entry.
pub fn w_layer_adjoint(n: usize) -> Result<DenseUnitary> {
    check_qubit_count(n)?;
    Ok(tensor_power(&u_gate(std::f64::consts::FRAC_PI_4), n))
}

fn tensor_power(gate: &DenseUnitary, n: usize) -> DenseUnitary {
    let mut out = gate.clone();
    for _ in 1..n {
        out = out.tensor(gate);
    }
    out
}

/// `P_m^(n)`: diagonal of ones with a single −1 at basis label `m`.
pub fn phase_flip_basis(n: usize, m: BasisIndex) -> Result<DenseUnitary> {
    check_qubit_count(n)?;
    let dim = 1 << n;
    if m.0 >= dim {
        return Err(Error::IndexOutOfRange { index: m.0, dim });
    }
    let mut entries = vec![c(0.0, 0.0); dim * dim];
    for k in 0..dim {
        entries[k * dim + k] = if k == m.0 { c(-1.0, 0.0) } else { c(1.0, 0.0) };
    }
    Ok(DenseUnitary::new_unchecked(dim, entries))
}

/// The reflection `I − 2|γ⟩⟨γ|` about an arbitrary normalized state.
///
/// For a basis state this coincides exactly with [`phase_flip_basis`];
/// normalization of `gamma` is guaranteed by [`StateVector`] itself.
pub fn reflection_about_state(gamma: &StateVector) -> DenseUnitary {
    let dim = gamma.dim();
    let mut entries = vec![c(0.0, 0.0); dim * dim];
    for r in 0..dim {
        for col in 0..dim {
            let mut v = -2.0 * gamma.amps()[r] * gamma.amps()[col].conj();
            if r == col {
                v += 1.0;
            }
            entries[r * dim + col] = v;
        }
    }
    DenseUnitary::new_unchecked(dim, entries)
}

/// One symbolic gate placed on named qubits.
#[derive(Clone, Debug)]
pub enum GateOp {
    XRotation { theta: f64, target: usize },
    ControlledY { control: usize, target: usize },
    MultiControlledY { controls: Vec<usize>, target: usize },
    PhaseFlipBasis { m: BasisIndex },
    PhaseFlipState { gamma: StateVector },
    Custom { u: DenseUnitary, qubits: Vec<usize> },
}

/// An ordered gate list; `ops[0]` is applied to the state first.
#[derive(Clone, Debug)]
pub struct Circuit {
    n_qubits: usize,
    ops: Vec<GateOp>,
}

impl Circuit {
    pub fn new(n_qubits: usize) -> Result<Self> {
        check_qubit_count(n_qubits)?;
        Ok(Self {
            n_qubits,
            ops: Vec::new(),
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn ops(&self) -> &[GateOp] {
        &self.ops
    }

    /// Appends a gate after validating its qubit references.
    pub fn push(&mut self, op: GateOp) -> Result<&mut Self> {
        self.validate(&op)?;
        self.ops.push(op);
        Ok(self)
    }

    fn validate(&self, op: &GateOp) -> Result<()> {
        let n = self.n_qubits;
        let check_distinct = |qubits: &[usize]| -> Result<()> {
            let mut seen = vec![false; n];
            for &q in qubits {
                if q >= n {
                    return Err(Error::InvalidQubit {
                        qubit: q,
                        n_qubits: n,
                    });
                }
                if seen[q] {
                    return Err(Error::DuplicateQubit { qubit: q });
                }
                seen[q] = true;
            }
            Ok(())
        };
        match op {
            GateOp::XRotation { theta, target } => {
                assert!(theta.is_finite(), "rotation angle must be finite");
                check_distinct(&[*target])
            }
            GateOp::ControlledY { control, target } => check_distinct(&[*control, *target]),
            GateOp::MultiControlledY { controls, target } => {
                let mut qs = controls.clone();
                qs.push(*target);
                check_distinct(&qs)
            }
            GateOp::PhaseFlipBasis { m } => {
                let dim = 1 << n;
                if m.0 >= dim {
                    return Err(Error::IndexOutOfRange { index: m.0, dim });
                }
                Ok(())
            }
            GateOp::PhaseFlipState { gamma } => {
                if gamma.n_qubits() != n {
                    return Err(Error::DimensionMismatch {
                        left: gamma.dim(),
                        right: 1 << n,
                    });
                }
                Ok(())
            }
            GateOp::Custom { u, qubits } => {
                check_distinct(qubits)?;
                if qubits.is_empty() || u.dim() != 1 << qubits.len() {
                    return Err(Error::DimensionMismatch {
                        left: u.dim(),
                        right: 1 << qubits.len(),
                    });
                }
                Ok(())
            }
        }
    }

    /// Multiplies the embedded gate matrices into one register-sized unitary,
    /// rightmost factor = first gate applied, and re-checks unitarity of the
    /// result.
    pub fn compile(&self) -> Result<DenseUnitary> {
        let dim = 1 << self.n_qubits;
        let mut total = DenseUnitary::identity(dim);
        for op in &self.ops {
            total = self.embed(op)?.multiply(&total)?;
        }
        let residual = total.unitarity_residual();
        if residual > UNITARITY_TOL {
            return Err(Error::NotUnitary {
                dim,
                residual,
                tol: UNITARITY_TOL,
            });
        }
        Ok(total)
    }

    fn embed(&self, op: &GateOp) -> Result<DenseUnitary> {
        let n = self.n_qubits;
        match op {
            GateOp::XRotation { theta, target } => {
                Ok(embed_on_qubits(n, &u_gate(*theta), &[*target]))
            }
            GateOp::ControlledY { control, target } => multi_controlled_y(n, &[*control], *target),
            GateOp::MultiControlledY { controls, target } => {
                multi_controlled_y(n, controls, *target)
            }
            GateOp::PhaseFlipBasis { m } => phase_flip_basis(n, *m),
            GateOp::PhaseFlipState { gamma } => Ok(reflection_about_state(gamma)),
            GateOp::Custom { u, qubits } => Ok(embed_on_qubits(n, u, qubits)),
        }
    }
}

/// Extends a gate on the listed qubits (`qubits[0]` = most significant bit of
/// the gate's own index space) to the full register by identity action on the
/// remaining qubits.
pub fn embed_on_qubits(n_qubits: usize, gate: &DenseUnitary, qubits: &[usize]) -> DenseUnitary {
    let dim = 1usize << n_qubits;
    let k = qubits.len();
    let sub_dim = 1usize << k;
    debug_assert_eq!(gate.dim(), sub_dim);
    let masks: Vec<usize> = qubits
        .iter()
        .map(|&q| 1usize << (n_qubits - 1 - q))
        .collect();
    let gather = |full: usize| -> usize {
        masks
            .iter()
            .fold(0usize, |acc, &m| (acc << 1) | usize::from(full & m != 0))
    };
    let mut entries = vec![c(0.0, 0.0); dim * dim];
    for col in 0..dim {
        let sub_col = gather(col);
        for sub_row in 0..sub_dim {
            let mut row = col;
            for (bit, &mask) in masks.iter().enumerate() {
                if sub_row >> (k - 1 - bit) & 1 == 1 {
                    row |= mask;
                } else {
                    row &= !mask;
                }
            }
            entries[row * dim + col] = gate.entry(sub_row, sub_col);
        }
    }
    DenseUnitary::new_unchecked(dim, entries)
}
