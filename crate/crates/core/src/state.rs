// Copyright 2026 discord-dynamics Contributors
// SPDX-License-Identifier: Apache-2.0

//! Density matrices of one and two qubits and the local amplitude-damping
//! channel generated by the reservoir factor `χ`.
//!
//! Basis order is fixed: `{|1⟩, |0⟩}` for one qubit and
//! `{|11⟩, |10⟩, |01⟩, |00⟩}` for two, with qubit A the leading factor.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{jacobi_eigh, kron, Matrix, Matrix2, Matrix4, ONE, ZERO};

pub const HERMITIAN_TOLERANCE: f64 = 1e-12;
pub const TRACE_TOLERANCE: f64 = 1e-12;
/// Eigenvalues below `-POSITIVITY_TOLERANCE` are rejected; smaller negatives are clipped.
pub const POSITIVITY_TOLERANCE: f64 = 1e-10;

/// Index of the excited state `|1⟩` in the single-qubit basis.
pub const EXCITED: usize = 0;
/// Index of the ground state `|0⟩` in the single-qubit basis.
pub const GROUND: usize = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Subsystem {
    A,
    B,
}

impl Subsystem {
    pub fn other(self) -> Self {
        match self {
            Subsystem::A => Subsystem::B,
            Subsystem::B => Subsystem::A,
        }
    }
}

/// Hermitian, unit-trace, positive semidefinite `N × N` matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DensityMatrix<const N: usize> {
    matrix: Matrix<N>,
}

pub type QubitState = DensityMatrix<2>;
pub type TwoQubitState = DensityMatrix<4>;

impl<const N: usize> DensityMatrix<N> {
    /// Validates `matrix`. Eigenvalues in `[-1e-10, 0)` are clipped to zero
    /// and the result renormalized.
    pub fn new(matrix: Matrix<N>) -> Result<Self> {
        let deviation = matrix.hermitian_deviation();
        if !(deviation <= HERMITIAN_TOLERANCE) {
            return Err(Error::NotHermitian(deviation));
        }
        let trace = matrix.trace();
        if !((trace.re - 1.0).abs() <= TRACE_TOLERANCE && trace.im.abs() <= TRACE_TOLERANCE) {
            return Err(Error::TraceNotUnit(trace.re));
        }
        let (values, vectors) = jacobi_eigh(&matrix);
        let smallest = values[0];
        if smallest < -POSITIVITY_TOLERANCE {
            return Err(Error::NotPositive(smallest));
        }
        if smallest < 0.0 {
            let clipped = values.map(|v| v.max(0.0));
            let total: f64 = clipped.iter().sum();
            let rebuilt = Matrix::from_real_diagonal(clipped.map(|v| v / total)).conjugate_by(&vectors);
            return Ok(Self { matrix: rebuilt });
        }
        Ok(Self { matrix })
    }

    /// Skips validation. Callers guarantee the invariants by construction.
    pub(crate) fn from_trusted(matrix: Matrix<N>) -> Self {
        Self { matrix }
    }

    /// `|ψ⟩⟨ψ|` for the normalized version of `amplitudes`.
    pub fn pure(amplitudes: [Complex64; N]) -> Result<Self> {
        let norm = amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(Error::InvalidState("state vector has zero or non-finite norm".into()));
        }
        let unit = amplitudes.map(|a| a / norm);
        Ok(Self { matrix: Matrix::projector(&unit) })
    }

    pub fn maximally_mixed() -> Self {
        Self { matrix: Matrix::from_real_diagonal([1.0 / N as f64; N]) }
    }

    /// Diagonal state with the given populations (normalized).
    pub fn diagonal(populations: [f64; N]) -> Result<Self> {
        let total: f64 = populations.iter().sum();
        if populations.iter().any(|&p| !(p >= 0.0)) || !(total > 0.0) {
            return Err(Error::InvalidState("populations must be nonnegative with positive sum".into()));
        }
        Ok(Self { matrix: Matrix::from_real_diagonal(populations.map(|p| p / total)) })
    }

    pub fn matrix(&self) -> &Matrix<N> {
        &self.matrix
    }

    pub fn element(&self, row: usize, col: usize) -> Complex64 {
        self.matrix[(row, col)]
    }

    /// Ascending eigenvalues.
    pub fn eigenvalues(&self) -> [f64; N] {
        jacobi_eigh(&self.matrix).0
    }

    /// `U ρ U†` for a unitary `U`.
    pub fn transform(&self, unitary: &Matrix<N>) -> Result<Self> {
        Self::new(self.matrix.conjugate_by(unitary))
    }
}

/// Operator-sum form of single-qubit amplitude damping.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KrausPair {
    pub k0: Matrix2,
    pub k1: Matrix2,
}

impl KrausPair {
    pub fn apply(&self, rho: &QubitState) -> QubitState {
        let m = rho.matrix;
        DensityMatrix::from_trusted(m.conjugate_by(&self.k0) + m.conjugate_by(&self.k1))
    }

    /// Largest entry of `k0†k0 + k1†k1 − I`.
    pub fn completeness_defect(&self) -> f64 {
        let sum = self.k0.adjoint() * self.k0 + self.k1.adjoint() * self.k1;
        sum.max_abs_diff(&Matrix2::identity())
    }

    fn operators(&self) -> [Matrix2; 2] {
        [self.k0, self.k1]
    }
}

fn check_chi(chi: f64) -> Result<()> {
    if !(chi.abs() <= 1.0) {
        return Err(Error::ChiOutOfRange(chi));
    }
    Ok(())
}

/// `k0 = diag(χ, 1)`, `k1 = √(1−χ²) |0⟩⟨1|`. The sign of `χ` is kept.
pub fn amplitude_damping_kraus(chi: f64) -> Result<KrausPair> {
    check_chi(chi)?;
    let mut k0 = Matrix2::zeros();
    k0[(EXCITED, EXCITED)] = Complex64::new(chi, 0.0);
    k0[(GROUND, GROUND)] = ONE;
    let mut k1 = Matrix2::zeros();
    k1[(GROUND, EXCITED)] = Complex64::new((1.0 - chi * chi).sqrt(), 0.0);
    Ok(KrausPair { k0, k1 })
}

/// Reduced single-qubit dynamics: populations of `|1⟩` scale with `χ²`,
/// coherences with `χ`.
pub fn single_qubit_evolve(rho0: &QubitState, chi: f64) -> Result<QubitState> {
    check_chi(chi)?;
    let rho = &rho0.matrix;
    let excited = rho[(EXCITED, EXCITED)].re * chi * chi;
    let mut out = Matrix2::zeros();
    out[(EXCITED, EXCITED)] = Complex64::new(excited, 0.0);
    out[(EXCITED, GROUND)] = rho[(EXCITED, GROUND)] * chi;
    out[(GROUND, EXCITED)] = rho[(GROUND, EXCITED)] * chi;
    out[(GROUND, GROUND)] = Complex64::new(1.0 - excited, 0.0);
    Ok(DensityMatrix::from_trusted(out))
}

/// Independent local damping of both qubits,
/// `ρ(t) = Σ_{ij} (K_i ⊗ K_j) ρ₀ (K_i ⊗ K_j)†`.
pub fn two_qubit_evolve(rho0: &TwoQubitState, chi_a: f64, chi_b: f64) -> Result<TwoQubitState> {
    let kraus_a = amplitude_damping_kraus(chi_a)?;
    let kraus_b = amplitude_damping_kraus(chi_b)?;
    let mut out = Matrix4::zeros();
    for ka in kraus_a.operators() {
        for kb in kraus_b.operators() {
            out = out + rho0.matrix.conjugate_by(&kron(&ka, &kb));
        }
    }
    DensityMatrix::new(out)
}

pub fn tensor(rho_a: &QubitState, rho_b: &QubitState) -> TwoQubitState {
    DensityMatrix::from_trusted(kron(&rho_a.matrix, &rho_b.matrix))
}

/// Reduced state of the `keep` qubit.
pub fn partial_trace(rho: &TwoQubitState, keep: Subsystem) -> QubitState {
    let m = &rho.matrix;
    let reduced = Matrix2::from_fn(|i, j| match keep {
        Subsystem::A => m[(2 * i, 2 * j)] + m[(2 * i + 1, 2 * j + 1)],
        Subsystem::B => m[(i, j)] + m[(2 + i, 2 + j)],
    });
    DensityMatrix::from_trusted(reduced)
}

/// Computational basis state `|a b⟩` with `a, b ∈ {0, 1}` the occupation numbers.
pub fn basis_state(a: u8, b: u8) -> TwoQubitState {
    let index = |bit: u8| if bit == 1 { EXCITED } else { GROUND };
    let mut v = [ZERO; 4];
    v[2 * index(a) + index(b)] = ONE;
    DensityMatrix::from_trusted(Matrix::projector(&v))
}
