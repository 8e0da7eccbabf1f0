//! Dense complex vector/matrix kernel.
//!
//! Conventions used throughout the crate:
//!
//! * A basis index is the register bitstring read as a binary number with
//!   qubit 0 as the most significant bit, so `|01⟩` on two qubits is index 1.
//! * [`DenseUnitary::tensor`] places its left operand on the lower-numbered
//!   qubits, which makes `W_n` read naturally as an n-fold tensor power.
//! * Registers are capped at [`MAX_QUBITS`] qubits; everything is stored as a
//!   dense row-major matrix or a full amplitude vector.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so instances may be shared freely across threads.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};

/// States must satisfy `|Σ|a_k|² − 1| ≤ NORMALIZATION_TOL`.
pub const NORMALIZATION_TOL: f64 = 1e-12;
/// Matrices must satisfy `max |(U·U† − I)_jk| ≤ UNITARITY_TOL` where checked.
pub const UNITARITY_TOL: f64 = 1e-10;
/// Largest supported register (dense 4096×4096 matrices).
pub const MAX_QUBITS: usize = 12;

/// A computational-basis label, `0 ≤ value < 2^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct BasisIndex(pub usize);

impl BasisIndex {
    /// Parses a bitstring such as `"011"` into `(n_qubits, index)`.
    ///
    /// The leftmost character is qubit 0, the most significant bit.
    pub fn from_bitstring(bits: &str) -> Result<(usize, BasisIndex)> {
        if bits.is_empty()
            || bits.len() > MAX_QUBITS
            || !bits.bytes().all(|b| b == b'0' || b == b'1')
        {
            return Err(Error::InvalidBitstring {
                s: bits.to_string(),
            });
        }
        let value = usize::from_str_radix(bits, 2).expect("validated bitstring");
        Ok((bits.len(), BasisIndex(value)))
    }

    /// Renders the index as a bitstring of width `n_qubits`.
    pub fn to_bitstring(self, n_qubits: usize) -> String {
        (0..n_qubits)
            .map(|q| {
                if self.0 >> (n_qubits - 1 - q) & 1 == 1 {
                    '1'
                } else {
                    '0'
                }
            })
            .collect()
    }
}

fn ensure_finite(entries: &[Complex64]) -> Result<()> {
    for (index, z) in entries.iter().enumerate() {
        if !z.re.is_finite() || !z.im.is_finite() {
            return Err(Error::NonFinite { index });
        }
    }
    Ok(())
}

/// A normalized register of `2^n` complex amplitudes.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    n_qubits: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// Wraps raw amplitudes, rejecting wrong lengths, non-finite values, and
    /// norm defects beyond [`NORMALIZATION_TOL`].
    pub fn new(n_qubits: usize, amps: Vec<Complex64>) -> Result<Self> {
        if n_qubits > MAX_QUBITS {
            return Err(Error::QubitCountOutOfRange {
                n: n_qubits,
                min: 0,
                max: MAX_QUBITS,
            });
        }
        if amps.len() != 1 << n_qubits {
            return Err(Error::BadAmplitudeCount {
                len: amps.len(),
                n_qubits,
            });
        }
        ensure_finite(&amps)?;
        let defect = (amps.iter().map(|a| a.norm_sqr()).sum::<f64>() - 1.0).abs();
        if defect > NORMALIZATION_TOL {
            return Err(Error::NotNormalized { defect });
        }
        Ok(Self { n_qubits, amps })
    }

    /// The computational-basis state `|m⟩`.
    pub fn basis(n_qubits: usize, m: BasisIndex) -> Result<Self> {
        if n_qubits > MAX_QUBITS {
            return Err(Error::QubitCountOutOfRange {
                n: n_qubits,
                min: 0,
                max: MAX_QUBITS,
            });
        }
        let dim = 1 << n_qubits;
        if m.0 >= dim {
            return Err(Error::IndexOutOfRange { index: m.0, dim });
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); dim];
        amps[m.0] = Complex64::new(1.0, 0.0);
        Ok(Self { n_qubits, amps })
    }

    /// Basis state named by a bitstring, e.g. `"111"` for `|111⟩`.
    pub fn from_bitstring(bits: &str) -> Result<Self> {
        let (n, m) = BasisIndex::from_bitstring(bits)?;
        Self::basis(n, m)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amps(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amp(&self, m: BasisIndex) -> Complex64 {
        self.amps[m.0]
    }

    /// Probability of measuring basis state `m`.
    pub fn probability(&self, m: BasisIndex) -> f64 {
        self.amps[m.0].norm_sqr()
    }

    /// `⟨self|other⟩ = Σ conj(self_k)·other_k`.
    pub fn inner_product(&self, other: &StateVector) -> Result<Complex64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }
}

/// A square complex matrix kept unitary within [`UNITARITY_TOL`].
///
/// The invariant is enforced where raw entries enter the system (gate
/// constructors, the JSON loader, compiled circuits). Products, adjoints, and
/// tensor products of unitaries stay unitary and are not re-checked.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseUnitary {
    dim: usize,
    entries: Vec<Complex64>, // row-major
}

impl DenseUnitary {
    /// Wraps row-major entries, rejecting non-finite values and unitarity
    /// residuals beyond [`UNITARITY_TOL`].
    pub fn new(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        if dim == 0 || entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                left: entries.len(),
                right: dim * dim,
            });
        }
        ensure_finite(&entries)?;
        let candidate = Self { dim, entries };
        let residual = candidate.unitarity_residual();
        if residual > UNITARITY_TOL {
            return Err(Error::NotUnitary {
                dim,
                residual,
                tol: UNITARITY_TOL,
            });
        }
        Ok(candidate)
    }

    pub(crate) fn new_unchecked(dim: usize, entries: Vec<Complex64>) -> Self {
        debug_assert_eq!(entries.len(), dim * dim);
        Self { dim, entries }
    }

    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![Complex64::new(0.0, 0.0); dim * dim];
        for k in 0..dim {
            entries[k * dim + k] = Complex64::new(1.0, 0.0);
        }
        Self { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    /// `max_jk |(U·U† − I)_jk|`.
    pub fn unitarity_residual(&self) -> f64 {
        let d = self.dim;
        let mut worst = 0.0f64;
        for r in 0..d {
            for c in 0..d {
                // (U U†)_rc = Σ_k U_rk conj(U_ck)
                let mut acc = Complex64::new(0.0, 0.0);
                for k in 0..d {
                    acc += self.entries[r * d + k] * self.entries[c * d + k].conj();
                }
                if r == c {
                    acc -= 1.0;
                }
                worst = worst.max(acc.norm());
            }
        }
        worst
    }

    /// Matrix-vector product `U·v`. Unitarity keeps the output normalized.
    pub fn apply(&self, v: &StateVector) -> Result<StateVector> {
        if self.dim != v.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: v.dim(),
            });
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.dim];
        for (r, slot) in out.iter_mut().enumerate() {
            let row = &self.entries[r * self.dim..(r + 1) * self.dim];
            *slot = row.iter().zip(v.amps()).map(|(u, a)| u * a).sum();
        }
        StateVector::new(v.n_qubits(), out)
    }

    /// Matrix product `self · rhs` (so `rhs` acts first on a ket).
    pub fn multiply(&self, rhs: &DenseUnitary) -> Result<DenseUnitary> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: rhs.dim,
            });
        }
        let d = self.dim;
        let mut entries = vec![Complex64::new(0.0, 0.0); d * d];
        for r in 0..d {
            for k in 0..d {
                let a = self.entries[r * d + k];
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for c in 0..d {
                    entries[r * d + c] += a * rhs.entries[k * d + c];
                }
            }
        }
        Ok(Self { dim: d, entries })
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> DenseUnitary {
        let d = self.dim;
        let mut entries = vec![Complex64::new(0.0, 0.0); d * d];
        for r in 0..d {
            for c in 0..d {
                entries[c * d + r] = self.entries[r * d + c].conj();
            }
        }
        Self { dim: d, entries }
    }

    /// Kronecker product; `self` lands on the lower-numbered qubits.
    pub fn tensor(&self, rhs: &DenseUnitary) -> DenseUnitary {
        let (da, db) = (self.dim, rhs.dim);
        let d = da * db;
        let mut entries = vec![Complex64::new(0.0, 0.0); d * d];
        for ar in 0..da {
            for ac in 0..da {
                let a = self.entries[ar * da + ac];
                for br in 0..db {
                    for bc in 0..db {
                        entries[(ar * db + br) * d + (ac * db + bc)] =
                            a * rhs.entries[br * db + bc];
                    }
                }
            }
        }
        Self { dim: d, entries }
    }

    /// True iff `self = e^{iφ}·other` entrywise within `tol`, with the phase
    /// fixed against the largest-magnitude entry of `other` so it is never
    /// read off a near-zero value.
    pub fn equal_up_to_global_phase(&self, other: &DenseUnitary, tol: f64) -> Result<bool> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let (k, pivot) = other
            .entries
            .iter()
            .enumerate()
            .max_by(|(_, a), (_, b)| a.norm_sqr().total_cmp(&b.norm_sqr()))
            .expect("non-empty matrix");
        if pivot.norm_sqr() == 0.0 {
            return Err(Error::ZeroMatrix);
        }
        let ratio = self.entries[k] / pivot;
        if ratio.norm_sqr() == 0.0 {
            // No phase can lift a zero onto the largest entry of `other`.
            return Ok(false);
        }
        let phase = ratio / ratio.norm();
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .all(|(a, b)| (a - phase * b).norm() <= tol))
    }

    /// Haar-distributed random unitary: QR of a complex Ginibre matrix by
    /// modified Gram-Schmidt with a positive-real R diagonal.
    pub fn random_haar<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> DenseUnitary {
        assert!(dim > 0, "dimension must be positive");
        let mut cols: Vec<Vec<Complex64>> = (0..dim)
            .map(|_| {
                (0..dim)
                    .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
                    .collect()
            })
            .collect();
        for j in 0..dim {
            for i in 0..j {
                let (done, rest) = cols.split_at_mut(j);
                let q = &done[i];
                let v = &mut rest[0];
                let proj: Complex64 = q.iter().zip(v.iter()).map(|(qi, vj)| qi.conj() * vj).sum();
                for (vk, qk) in v.iter_mut().zip(q) {
                    *vk -= proj * qk;
                }
            }
            let norm = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            for z in &mut cols[j] {
                *z /= norm;
            }
        }
        let mut entries = vec![Complex64::new(0.0, 0.0); dim * dim];
        for (j, col) in cols.iter().enumerate() {
            for (i, z) in col.iter().enumerate() {
                entries[i * dim + j] = *z;
            }
        }
        Self::new(dim, entries).expect("Gram-Schmidt output is unitary")
    }
}
