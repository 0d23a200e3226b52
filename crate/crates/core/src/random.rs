// Copyright 2026 discord-dynamics Contributors
// SPDX-License-Identifier: Apache-2.0

//! Random states and unitaries for property checks.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::linalg::{Matrix, Matrix2};
use crate::state::DensityMatrix;

fn gaussian_complex<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Hilbert–Schmidt distributed mixed state, `G G† / Tr(G G†)` for Ginibre `G`.
pub fn mixed_state<const N: usize>(rng: &mut impl Rng) -> DensityMatrix<N> {
    let g = Matrix::<N>::from_fn(|_, _| gaussian_complex(rng));
    let gg = g * g.adjoint();
    let trace = gg.trace().re;
    DensityMatrix::from_trusted(gg.scale(1.0 / trace))
}

/// Haar-random pure state.
pub fn pure_state<const N: usize>(rng: &mut impl Rng) -> DensityMatrix<N> {
    let v: [Complex64; N] = std::array::from_fn(|_| gaussian_complex(rng));
    DensityMatrix::pure(v).expect("gaussian vector has nonzero norm")
}

/// Haar-random single-qubit unitary.
pub fn unitary2(rng: &mut impl Rng) -> Matrix2 {
    let mut a = gaussian_complex(rng);
    let mut b = gaussian_complex(rng);
    let norm = (a.norm_sqr() + b.norm_sqr()).sqrt();
    a /= norm;
    b /= norm;
    let phase = Complex64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU));
    Matrix([[a, -b.conj() * phase], [b, a.conj() * phase]])
}

/// Random state diagonal in the two-qubit computational basis.
pub fn computational_diagonal_state(rng: &mut impl Rng) -> DensityMatrix<4> {
    let populations: [f64; 4] = std::array::from_fn(|_| rng.random::<f64>());
    DensityMatrix::diagonal(populations).expect("uniform draws are nonnegative")
}
