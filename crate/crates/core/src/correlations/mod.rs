// Copyright 2026 discord-dynamics Contributors
// SPDX-License-Identifier: Apache-2.0

//! Entropic correlation measures of two-qubit states and Wootters concurrence.
//!
//! All entropies are in bits. The classical correlation maximizes over the
//! rank-1 projective measurements
//! `{cosθ|1⟩ + e^{iφ} sinθ|0⟩, e^{−iφ} sinθ|1⟩ − cosθ|0⟩}` on one qubit. The
//! maximization seeds a Nelder–Mead search from the best points of a coarse
//! `(θ, φ)` grid, because the objective can have several local optima.

pub mod simplex;

use std::f64::consts::{FRAC_PI_2, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{eigvalsh_2x2, jacobi_eigh, Matrix, Matrix2, Matrix4, ZERO};
use crate::state::{partial_trace, QubitState, Subsystem, TwoQubitState};

use self::simplex::{minimize, SimplexOptions};

/// Outcomes rarer than this do not contribute to the conditional entropy.
pub const OUTCOME_PROBABILITY_FLOOR: f64 = 1e-14;
/// Discord in `[-DISCORD_CLIP, 0)` is reported as 0.
pub const DISCORD_CLIP: f64 = 1e-9;

pub const SEED_GRID: usize = 64;
pub const SEED_COUNT: usize = 3;
pub const SIMPLEX_SPREAD_TOLERANCE: f64 = 1e-10;
const SIMPLEX_MAX_ITERATIONS: usize = 2000;

/// Projective measurement on one qubit parameterized by `θ ∈ [0, π/2]` and
/// `φ ∈ [0, 2π)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeasurementBasis {
    theta: f64,
    phi: f64,
}

impl MeasurementBasis {
    /// Accepts any real angles and maps them onto the canonical ranges
    /// without changing the pair of projectors.
    pub fn new(theta: f64, phi: f64) -> Self {
        let mut theta = theta.rem_euclid(std::f64::consts::PI);
        let mut phi = phi;
        if theta > FRAC_PI_2 {
            // cos(π−θ) = −cosθ: same projectors once φ absorbs the sign.
            theta = std::f64::consts::PI - theta;
            phi += std::f64::consts::PI;
        }
        let mut phi = phi.rem_euclid(TAU);
        if phi >= TAU {
            phi = 0.0;
        }
        Self { theta, phi }
    }

    pub fn computational() -> Self {
        Self { theta: 0.0, phi: 0.0 }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// The two measurement vectors in the `{|1⟩, |0⟩}` basis.
    pub fn vectors(&self) -> [[Complex64; 2]; 2] {
        let (s, c) = self.theta.sin_cos();
        let phase = Complex64::from_polar(1.0, self.phi);
        [[Complex64::new(c, 0.0), phase * s], [phase.conj() * s, Complex64::new(-c, 0.0)]]
    }

    pub fn projectors(&self) -> [Matrix2; 2] {
        self.vectors().map(|v| Matrix::projector(&v))
    }
}

/// Correlation measures of the two-qubit state at one instant.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CorrelationRecord {
    pub t: f64,
    pub concurrence: f64,
    pub mutual_info: f64,
    pub classical_corr: f64,
    pub discord: f64,
    pub argmax_basis: MeasurementBasis,
}

impl CorrelationRecord {
    pub fn evaluate(t: f64, rho: &TwoQubitState, measured: Subsystem) -> Self {
        let mutual_info = mutual_information(rho);
        let (classical_corr, argmax_basis) = classical_correlation(rho, measured);
        Self {
            t,
            concurrence: concurrence(rho),
            mutual_info,
            classical_corr,
            discord: discord_from_parts(mutual_info, classical_corr),
            argmax_basis,
        }
    }
}

/// `−Σ λ log₂ λ`; nonpositive entries contribute nothing.
fn entropy_bits(values: &[f64]) -> f64 {
    values.iter().filter(|&&v| v > 0.0).map(|&v| -v * v.log2()).sum()
}

pub fn von_neumann_entropy<const N: usize>(rho: &crate::state::DensityMatrix<N>) -> f64 {
    entropy_bits(&rho.eigenvalues())
}

fn qubit_entropy(m: &Matrix2) -> f64 {
    entropy_bits(&eigvalsh_2x2(m))
}

/// `S(ρ_A) + S(ρ_B) − S(ρ_AB)`.
pub fn mutual_information(rho: &TwoQubitState) -> f64 {
    let a = von_neumann_entropy(&partial_trace(rho, Subsystem::A));
    let b = von_neumann_entropy(&partial_trace(rho, Subsystem::B));
    a + b - von_neumann_entropy(rho)
}

/// Entropy of the unmeasured qubit averaged over the outcomes of `basis`
/// applied to the `measured` qubit.
pub fn conditional_entropy(rho: &TwoQubitState, basis: MeasurementBasis, measured: Subsystem) -> f64 {
    ConditionalObjective::new(rho, measured).evaluate(&basis.vectors()[0])
}

/// Precomputed pieces of `S_{Π}(X|Y)` so that the inner loop of the
/// optimizer only forms one 2×2 matrix per evaluation.
struct ConditionalObjective {
    /// `blocks[y][y']` is the operator on the unmeasured qubit X multiplying
    /// `conj(u_y) u_{y'}`.
    blocks: [[Matrix2; 2]; 2],
    /// Reduced state of X; the two outcome operators sum to it.
    reduced: Matrix2,
}

impl ConditionalObjective {
    fn new(rho: &TwoQubitState, measured: Subsystem) -> Self {
        let m = rho.matrix();
        let blocks = std::array::from_fn(|y| {
            std::array::from_fn(|y2| {
                Matrix2::from_fn(|x, x2| match measured {
                    Subsystem::B => m[(2 * x + y, 2 * x2 + y2)],
                    Subsystem::A => m[(2 * y + x, 2 * y2 + x2)],
                })
            })
        });
        let reduced = *partial_trace(rho, measured.other()).matrix();
        Self { blocks, reduced }
    }

    fn evaluate(&self, u: &[Complex64; 2]) -> f64 {
        // Only the upper triangle of the Hermitian outcome operators is formed.
        let w00 = u[0].norm_sqr();
        let w11 = u[1].norm_sqr();
        let w01 = u[0].conj() * u[1];
        let b = &self.blocks;
        let entry = |i: usize, j: usize| {
            b[0][0][(i, j)] * w00 + b[1][1][(i, j)] * w11 + b[0][1][(i, j)] * w01 + b[1][0][(i, j)] * w01.conj()
        };
        let (a0, d0, c0) = (entry(0, 0).re, entry(1, 1).re, entry(0, 1));
        let r = &self.reduced;
        let (a1, d1, c1) = (r[(0, 0)].re - a0, r[(1, 1)].re - d0, r[(0, 1)] - c0);
        outcome_entropy(a0, d0, c0.norm_sqr()) + outcome_entropy(a1, d1, c1.norm_sqr())
    }

    fn at(&self, theta: f64, phi: f64) -> f64 {
        let (s, c) = theta.sin_cos();
        self.evaluate(&[Complex64::new(c, 0.0), Complex64::from_polar(s, phi)])
    }
}

/// `p · S(σ/p)` in bits for the unnormalized Hermitian `σ = [[a, c], [c*, d]]`.
fn outcome_entropy(a: f64, d: f64, c_sq: f64) -> f64 {
    let p = a + d;
    if p < OUTCOME_PROBABILITY_FLOOR {
        return 0.0;
    }
    let half_gap = 0.5 * (a - d);
    let radius = (half_gap * half_gap + c_sq).sqrt();
    let term = |lambda: f64| if lambda > 0.0 { -lambda * (lambda / p).log2() } else { 0.0 };
    term(0.5 * p + radius) + term(0.5 * p - radius)
}

/// Objective on the uniform grid `θ_i = i·(π/2)/(n−1)`, `φ_j = 2πj/n`, as
/// `(value, θ, φ)` triples.
fn grid_values(objective: &ConditionalObjective, grid_n: usize) -> Vec<(f64, f64, f64)> {
    let theta_step = FRAC_PI_2 / (grid_n - 1) as f64;
    let phi_step = TAU / grid_n as f64;
    let phases: Vec<(f64, Complex64)> = (0..grid_n)
        .map(|j| {
            let phi = j as f64 * phi_step;
            (phi, Complex64::from_polar(1.0, phi))
        })
        .collect();
    let mut out = Vec::with_capacity(grid_n * grid_n);
    for i in 0..grid_n {
        let theta = i as f64 * theta_step;
        let (s, c) = theta.sin_cos();
        for &(phi, phase) in &phases {
            out.push((objective.evaluate(&[Complex64::new(c, 0.0), phase * s]), theta, phi));
        }
    }
    out
}

/// `max_Π [S(ρ_X) − S_Π(X|Y)]` with `Y` the measured qubit, and the maximizing basis.
pub fn classical_correlation(rho: &TwoQubitState, measured: Subsystem) -> (f64, MeasurementBasis) {
    let objective = ConditionalObjective::new(rho, measured);
    let unmeasured_entropy = qubit_entropy(&objective.reduced);

    let mut seeds = grid_values(&objective, SEED_GRID);
    seeds.sort_by(|a, b| a.0.total_cmp(&b.0));

    let options = SimplexOptions {
        initial_step: [FRAC_PI_2 / (SEED_GRID - 1) as f64, TAU / SEED_GRID as f64],
        spread_tolerance: SIMPLEX_SPREAD_TOLERANCE,
        max_iterations: SIMPLEX_MAX_ITERATIONS,
    };
    let (mut best_value, mut best_theta, mut best_phi) = seeds[0];
    for &(_, theta, phi) in seeds.iter().take(SEED_COUNT) {
        let result = minimize(|x| objective.at(x[0], x[1]), [theta, phi], &options);
        if result.value < best_value {
            best_value = result.value;
            best_theta = result.x[0];
            best_phi = result.x[1];
        }
    }
    let classical = (unmeasured_entropy - best_value).max(0.0);
    (classical, MeasurementBasis::new(best_theta, best_phi))
}

/// Grid-search lower bound on [`classical_correlation`] over `grid_n × grid_n`
/// angles (θ including both ends of `[0, π/2]`, φ uniform on `[0, 2π)`).
pub fn brute_force_classical_correlation(rho: &TwoQubitState, grid_n: usize, measured: Subsystem) -> Result<f64> {
    if grid_n < 8 {
        return Err(Error::InvalidConfig(format!("grid must have at least 8 points per axis, got {grid_n}")));
    }
    let objective = ConditionalObjective::new(rho, measured);
    let best = grid_values(&objective, grid_n).into_iter().map(|v| v.0).fold(f64::INFINITY, f64::min);
    Ok((qubit_entropy(&objective.reduced) - best).max(0.0))
}

fn discord_from_parts(mutual_info: f64, classical_corr: f64) -> f64 {
    let discord = mutual_info - classical_corr;
    if (-DISCORD_CLIP..0.0).contains(&discord) {
        0.0
    } else {
        discord
    }
}

/// Mutual information minus classical correlation.
pub fn quantum_discord(rho: &TwoQubitState, measured: Subsystem) -> f64 {
    discord_from_parts(mutual_information(rho), classical_correlation(rho, measured).0)
}

/// `σ_y ⊗ σ_y`; identical in either single-qubit basis order.
fn spin_flip() -> Matrix4 {
    let mut m = Matrix4::zeros();
    m[(0, 3)] = Complex64::new(-1.0, 0.0);
    m[(1, 2)] = Complex64::new(1.0, 0.0);
    m[(2, 1)] = Complex64::new(1.0, 0.0);
    m[(3, 0)] = Complex64::new(-1.0, 0.0);
    m
}

/// Wootters concurrence `max(0, √λ₁ − √λ₂ − √λ₃ − √λ₄)`.
///
/// The `λᵢ` are the eigenvalues of `ρ ρ̃`, computed as those of the Hermitian
/// matrix `√ρ ρ̃ √ρ`.
pub fn concurrence(rho: &TwoQubitState) -> f64 {
    if is_x_shaped(rho) {
        return x_state_concurrence(rho);
    }
    wootters_concurrence(rho)
}

/// True when every entry off the diagonal and anti-diagonal is exactly zero.
fn is_x_shaped(rho: &TwoQubitState) -> bool {
    (0..4).all(|i| (0..4).all(|j| i == j || i + j == 3 || rho.element(i, j) == ZERO))
}

/// Closed form for X states. Unlike the spectral route it keeps full
/// relative precision when the concurrence is tiny.
fn x_state_concurrence(rho: &TwoQubitState) -> f64 {
    let p = |i: usize| rho.element(i, i).re.max(0.0);
    let outer = rho.element(0, 3).norm() - (p(1) * p(2)).sqrt();
    let inner = rho.element(1, 2).norm() - (p(0) * p(3)).sqrt();
    (2.0 * outer.max(inner)).clamp(0.0, 1.0)
}

fn wootters_concurrence(rho: &TwoQubitState) -> f64 {
    let (values, vectors) = jacobi_eigh(rho.matrix());
    let sqrt_rho = Matrix4::from_real_diagonal(values.map(|v| v.max(0.0).sqrt())).conjugate_by(&vectors);
    let flipped = rho.matrix().conj().conjugate_by(&spin_flip());
    let product = sqrt_rho * flipped * sqrt_rho;
    let hermitian = Matrix4::from_fn(|i, j| 0.5 * (product[(i, j)] + product[(j, i)].conj()));
    let mut roots = jacobi_eigh(&hermitian).0.map(|v| v.max(0.0).sqrt());
    roots.sort_by(|a, b| b.total_cmp(a));
    (roots[0] - roots[1] - roots[2] - roots[3]).max(0.0)
}

/// Entropy of a single-qubit state in bits.
pub fn qubit_state_entropy(rho: &QubitState) -> f64 {
    qubit_entropy(rho.matrix())
}
