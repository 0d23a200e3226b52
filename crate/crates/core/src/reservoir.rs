// Copyright 2026 discord-dynamics Contributors
// SPDX-License-Identifier: Apache-2.0

//! Zero-temperature Lorentzian reservoir acting on a single qubit.
//!
//! The excited-state amplitude obeys `Ċ₁(t) = −∫₀ᵗ F(t−t′) C₁(t′) dt′` with the
//! exponential kernel `F(τ) = (γ₀λ/2) e^{−λτ}` obtained from the Lorentzian
//! spectral density. Its exact solution is `C₁(t) = C₁(0) χ(t)`, and `χ` is what
//! this module evaluates. All times are dimensionless (`γ₀t`), so the dynamics
//! only depend on the ratio `λ/γ₀`.
//!
//! [`solve_memory_kernel`] integrates the integro-differential equation
//! numerically and never touches the closed form; it is the cross-check for
//! [`ReservoirParams::chi`].

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Below this value of `d/γ₀` the degenerate limit `e^{−λt/2}(1 + λt/2)` is used.
pub const DEGENERATE_D_TOLERANCE: f64 = 1e-9;

/// Largest admissible step (in `γ₀t`) for the memory-kernel solver.
pub const MAX_KERNEL_STEP: f64 = 1e-3;

/// Step halving stops once successive solutions agree to this sup-norm.
pub const KERNEL_REFINEMENT_TOLERANCE: f64 = 1e-8;
const KERNEL_MAX_HALVINGS: u32 = 10;

/// Bracket half-width (in `γ₀t`) for polishing zeros of `χ`.
const ZERO_POLISH_WINDOW: f64 = 0.01;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Regime {
    Markovian,
    NonMarkovian,
}

/// Lorentzian reservoir described by its decay rate `γ₀` and the spectral
/// width expressed as the ratio `λ/γ₀`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ReservoirParams {
    gamma0: f64,
    lambda_ratio: f64,
    omega0: f64,
}

impl ReservoirParams {
    pub fn new(gamma0: f64, lambda_ratio: f64) -> Result<Self> {
        if !(gamma0.is_finite() && gamma0 > 0.0) {
            return Err(Error::InvalidParams(format!("gamma0 must be positive and finite, got {gamma0}")));
        }
        if !(lambda_ratio.is_finite() && lambda_ratio > 0.0) {
            return Err(Error::InvalidParams(format!("lambda/gamma0 must be positive and finite, got {lambda_ratio}")));
        }
        Ok(Self { gamma0, lambda_ratio, omega0: 0.0 })
    }

    /// Unit decay rate, so that physical and dimensionless times coincide.
    pub fn from_ratio(lambda_ratio: f64) -> Result<Self> {
        Self::new(1.0, lambda_ratio)
    }

    /// Sets the qubit transition frequency. It only shifts [`Self::spectral_density`].
    pub fn with_carrier(mut self, omega0: f64) -> Self {
        self.omega0 = omega0;
        self
    }

    pub fn gamma0(&self) -> f64 {
        self.gamma0
    }

    pub fn lambda_ratio(&self) -> f64 {
        self.lambda_ratio
    }

    pub fn lambda(&self) -> f64 {
        self.lambda_ratio * self.gamma0
    }

    pub fn omega0(&self) -> f64 {
        self.omega0
    }

    /// `d/γ₀ = √|2λ/γ₀ − (λ/γ₀)²|`.
    pub fn d_ratio(&self) -> f64 {
        let r = self.lambda_ratio;
        (2.0 * r - r * r).abs().sqrt()
    }

    /// `d = √|2γ₀λ − λ²|`.
    pub fn d(&self) -> f64 {
        self.gamma0 * self.d_ratio()
    }

    /// Reservoir memory time `τ_B ≈ 1/λ`.
    pub fn correlation_time(&self) -> f64 {
        1.0 / self.lambda()
    }

    /// System relaxation time `τ_R ≈ 1/γ₀`.
    pub fn relaxation_time(&self) -> f64 {
        1.0 / self.gamma0
    }

    /// Non-Markovian iff `γ₀ > λ/2`. The boundary counts as Markovian.
    pub fn regime(&self) -> Regime {
        if self.lambda_ratio < 2.0 {
            Regime::NonMarkovian
        } else {
            Regime::Markovian
        }
    }

    /// Amplitude factor `χ` at dimensionless time `t = γ₀t`.
    pub fn chi(&self, t: f64) -> Result<f64> {
        if !(t >= 0.0) || !t.is_finite() {
            return Err(Error::NegativeTime(t));
        }
        Ok(self.chi_unchecked(t))
    }

    pub(crate) fn chi_unchecked(&self, t: f64) -> f64 {
        let r = self.lambda_ratio;
        let d = self.d_ratio();
        if d < DEGENERATE_D_TOLERANCE {
            let x = 0.5 * r * t;
            return (-x).exp() * (1.0 + x);
        }
        match self.regime() {
            Regime::NonMarkovian => {
                let phase = 0.5 * d * t;
                (-0.5 * r * t).exp() * (phase.cos() + (r / d) * phase.sin())
            }
            Regime::Markovian => {
                // cosh/sinh expanded into two decaying exponentials so that
                // large λ does not overflow. r − d = 2r/(r + d) avoids cancellation.
                let slow = 2.0 * r / (r + d);
                let fast = r + d;
                let slow_mode = (-0.5 * slow * t).exp();
                slow_mode + 0.5 * (1.0 - r / d) * ((-0.5 * fast * t).exp() - slow_mode)
            }
        }
    }

    /// The first `n_max` positive zeros of `χ` (dimensionless times).
    ///
    /// Values come from `t_n = 2[nπ − arctan(d/λ)]/d` and are then polished by
    /// bisection on [`Self::chi`].
    pub fn chi_zeros(&self, n_max: usize) -> Result<Vec<f64>> {
        if self.regime() == Regime::Markovian {
            return Err(Error::NoZeros(self.lambda_ratio));
        }
        let d = self.d_ratio();
        let offset = (d / self.lambda_ratio).atan();
        Ok((1..=n_max)
            .map(|n| {
                let guess = 2.0 * (n as f64 * PI - offset) / d;
                self.polish_zero(guess)
            })
            .collect())
    }

    fn polish_zero(&self, guess: f64) -> f64 {
        let mut lo = (guess - ZERO_POLISH_WINDOW).max(0.0);
        let mut hi = guess + ZERO_POLISH_WINDOW;
        let mut f_lo = self.chi_unchecked(lo);
        let f_hi = self.chi_unchecked(hi);
        if f_lo == 0.0 {
            return lo;
        }
        if f_lo * f_hi > 0.0 {
            return guess;
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            let f_mid = self.chi_unchecked(mid);
            if f_mid == 0.0 {
                return mid;
            }
            if f_lo * f_mid < 0.0 {
                hi = mid;
            } else {
                lo = mid;
                f_lo = f_mid;
            }
        }
        if self.chi_unchecked(lo).abs() <= self.chi_unchecked(hi).abs() {
            lo
        } else {
            hi
        }
    }

    /// Lorentzian spectral density `J(ω) = (1/2π) γ₀λ² / ((ω₀ − ω)² + λ²)`.
    pub fn spectral_density(&self, omega: f64) -> f64 {
        let lambda = self.lambda();
        let detuning = self.omega0 - omega;
        self.gamma0 * lambda * lambda / (2.0 * PI * (detuning * detuning + lambda * lambda))
    }

    /// Reservoir correlation function `F(τ) = (γ₀λ/2) e^{−λτ}` in units of γ₀².
    pub fn kernel(&self, tau: f64) -> f64 {
        0.5 * self.lambda_ratio * (-self.lambda_ratio * tau).exp()
    }
}

/// Numerically integrates `Ċ₁ = −∫₀ᵗ F(t−t′) C₁(t′) dt′`, `C₁(0) = 1`.
///
/// `t_grid` must start at 0, be uniform and ascending with step at most
/// [`MAX_KERNEL_STEP`]. The trapezoidal rule is used both for the memory
/// integral and for the time step. The internal step is halved until two
/// successive solutions agree to [`KERNEL_REFINEMENT_TOLERANCE`] on the grid.
pub fn solve_memory_kernel(params: &ReservoirParams, t_grid: &[f64]) -> Result<Vec<f64>> {
    let step = validate_uniform_grid(t_grid)?;
    if t_grid.len() == 1 {
        return Ok(vec![1.0]);
    }
    let intervals = t_grid.len() - 1;

    let mut previous = trapezoid_volterra(params, step, intervals, 1);
    for halving in 1..=KERNEL_MAX_HALVINGS {
        let current = trapezoid_volterra(params, step, intervals, 1 << halving);
        let change = previous.iter().zip(&current).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        previous = current;
        if change < KERNEL_REFINEMENT_TOLERANCE {
            break;
        }
    }
    Ok(previous)
}

fn validate_uniform_grid(t_grid: &[f64]) -> Result<f64> {
    let first = *t_grid.first().ok_or_else(|| Error::InvalidGrid("grid is empty".into()))?;
    if first != 0.0 {
        return Err(Error::InvalidGrid(format!("grid must start at 0, starts at {first}")));
    }
    if t_grid.len() == 1 {
        return Ok(0.0);
    }
    let step = t_grid[1] - t_grid[0];
    if !(step > 0.0) {
        return Err(Error::InvalidGrid("grid must be strictly ascending".into()));
    }
    if step > MAX_KERNEL_STEP * (1.0 + 1e-9) {
        return Err(Error::InvalidGrid(format!("step {step} exceeds {MAX_KERNEL_STEP}")));
    }
    for (i, &t) in t_grid.iter().enumerate() {
        let expected = i as f64 * step;
        if (t - expected).abs() > 1e-9 * expected.max(1.0) {
            return Err(Error::InvalidGrid(format!("grid is not uniform at index {i}")));
        }
    }
    Ok(step)
}

/// Trapezoidal Volterra solver with `substeps` internal steps per grid step.
///
/// Because the kernel is exponential, the running trapezoid sum
/// `Σ_j F(t_n − t_j) C_j` obeys `S_n = e^{−λh} S_{n−1} + F(0) C_n`, which keeps
/// the cost linear in the number of steps. The quadrature itself is the plain
/// trapezoidal convolution.
fn trapezoid_volterra(params: &ReservoirParams, grid_step: f64, intervals: usize, substeps: usize) -> Vec<f64> {
    let h = grid_step / substeps as f64;
    let rate = params.lambda_ratio();
    let f0 = params.kernel(0.0);
    let decay = (-rate * h).exp();
    let implicit = 1.0 + 0.25 * h * h * f0;

    let c0 = 1.0;
    let mut c = c0;
    let mut running_sum = f0 * c0;
    let mut derivative = 0.0;

    let mut out = Vec::with_capacity(intervals + 1);
    out.push(c0);
    for n in 0..intervals * substeps {
        let tail = params.kernel((n + 1) as f64 * h);
        let history = decay * running_sum;
        let next = (c + 0.5 * h * derivative - 0.5 * h * h * (history - 0.5 * tail * c0)) / implicit;
        running_sum = history + f0 * next;
        let integral = h * (running_sum - 0.5 * f0 * next - 0.5 * tail * c0);
        derivative = -integral;
        c = next;
        if (n + 1) % substeps == 0 {
            out.push(c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(r: f64) -> ReservoirParams {
        ReservoirParams::from_ratio(r).unwrap()
    }

    fn grid(t_max: f64, step: f64) -> Vec<f64> {
        let n = (t_max / step).round() as usize;
        (0..=n).map(|i| i as f64 * step).collect()
    }

    /// Plain O(N²) trapezoidal convolution with one internal step per grid step.
    fn naive_volterra(p: &ReservoirParams, h: f64, intervals: usize) -> Vec<f64> {
        let mut c = vec![1.0];
        let mut g = vec![0.0];
        let integral = |c: &[f64], n: usize| -> f64 {
            let t = |j: usize| (n - j) as f64 * h;
            let interior: f64 = (1..n).map(|j| p.kernel(t(j)) * c[j]).sum();
            h * (0.5 * p.kernel(t(0)) * c[0] + interior + 0.5 * p.kernel(0.0) * c[n])
        };
        for n in 0..intervals {
            // Fixed-point solve of the implicit trapezoid step.
            let mut guess = c[n];
            for _ in 0..100 {
                c.push(guess);
                let next_g = -integral(&c, n + 1);
                c.pop();
                guess = c[n] + 0.5 * h * (g[n] + next_g);
            }
            c.push(guess);
            g.push(-integral(&c, n + 1));
        }
        c
    }

    #[test]
    fn regime_classification() {
        assert_eq!(params(10.0).regime(), Regime::Markovian);
        assert_eq!(params(0.1).regime(), Regime::NonMarkovian);
        assert_eq!(params(2.0).regime(), Regime::Markovian);
    }

    #[test]
    fn rejects_invalid_params() {
        assert!(ReservoirParams::new(0.0, 1.0).is_err());
        assert!(ReservoirParams::new(1.0, 0.0).is_err());
        assert!(ReservoirParams::new(1.0, f64::INFINITY).is_err());
        assert!(ReservoirParams::new(-1.0, 1.0).is_err());
    }

    #[test]
    fn chi_starts_at_one() {
        for r in [0.05, 0.1, 2.0, 10.0, 1000.0] {
            assert_eq!(params(r).chi(0.0).unwrap(), 1.0);
        }
        assert!(matches!(params(1.0).chi(-0.1), Err(Error::NegativeTime(_))));
    }

    #[test]
    fn first_zero_from_formula() {
        // t_1 = 2(π − arctan(√0.19/0.1))/√0.19
        let d: f64 = 0.19f64.sqrt();
        let t1 = 2.0 * (PI - (d / 0.1).atan()) / d;
        assert!((t1 - 8.2424).abs() < 1e-3);
        let zeros = params(0.1).chi_zeros(2).unwrap();
        assert!((zeros[0] - t1).abs() < 1e-9);
        let t2 = 2.0 * (2.0 * PI - (d / 0.1).atan()) / d;
        assert!((t2 - 22.657).abs() < 1e-3);
        assert!((zeros[1] - t2).abs() < 1e-9);
        for z in zeros {
            assert!(params(0.1).chi(z).unwrap().abs() < 1e-9);
        }
    }

    #[test]
    fn zeros_edge_cases() {
        assert!(matches!(params(10.0).chi_zeros(1), Err(Error::NoZeros(_))));
        assert!(params(0.1).chi_zeros(0).unwrap().is_empty());
    }

    #[test]
    fn flat_spectrum_limit() {
        let chi = params(1000.0).chi(1.0).unwrap();
        assert!((chi - (-0.5f64).exp()).abs() < 1e-2);
        // cosh/sinh form evaluated directly where it does not overflow
        let r: f64 = 10.0;
        let d = (r * r - 2.0 * r).sqrt();
        for t in [0.3, 1.0, 4.0] {
            let direct = (-0.5 * r * t).exp() * ((0.5 * d * t).cosh() + (r / d) * (0.5 * d * t).sinh());
            assert!((params(r).chi(t).unwrap() - direct).abs() < 1e-14);
        }
    }

    #[test]
    fn degenerate_limit_is_continuous() {
        let at = params(2.0);
        for side in [2.0 - 1e-6, 2.0 + 1e-6] {
            let near = params(side);
            for i in 0..=1000 {
                let t = i as f64 * 0.01;
                assert!((near.chi(t).unwrap() - at.chi(t).unwrap()).abs() < 1e-6);
            }
        }
    }

    #[test]
    fn spectral_density_properties() {
        let p = ReservoirParams::new(0.7, 3.0).unwrap().with_carrier(5.0);
        assert!((p.spectral_density(5.0) - 0.7 / (2.0 * PI)).abs() < 1e-15);
        for delta in [0.1, 1.0, 17.0] {
            assert_eq!(p.spectral_density(5.0 + delta), p.spectral_density(5.0 - delta));
        }
        // composite Simpson over ±1e5 λ
        let lambda = p.lambda();
        let half_width = 1e5 * lambda;
        let n = 4_000_000usize;
        let h = 2.0 * half_width / n as f64;
        let mut sum = p.spectral_density(5.0 - half_width) + p.spectral_density(5.0 + half_width);
        for i in 1..n {
            let w = if i % 2 == 1 { 4.0 } else { 2.0 };
            sum += w * p.spectral_density(5.0 - half_width + i as f64 * h);
        }
        let integral = sum * h / 3.0;
        let exact = 0.5 * p.gamma0() * lambda;
        assert!(((integral - exact) / exact).abs() < 1e-4);
    }

    #[test]
    fn linear_recurrence_is_the_trapezoid_rule() {
        let p = params(3.0);
        let h = 0.01;
        let fast = trapezoid_volterra(&p, h, 300, 1);
        let slow = naive_volterra(&p, h, 300);
        for (a, b) in fast.iter().zip(&slow) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn kernel_solver_matches_closed_form() {
        for (r, t_max) in [(0.1, 25.0), (10.0, 5.0), (2.0, 10.0)] {
            let p = params(r);
            let g = grid(t_max, 1e-3);
            let numeric = solve_memory_kernel(&p, &g).unwrap();
            assert_eq!(numeric[0], 1.0);
            let worst = g.iter().zip(&numeric).map(|(&t, c)| (p.chi(t).unwrap() - c).abs()).fold(0.0, f64::max);
            assert!(worst < 1e-6, "lambda/gamma0 = {r}: sup error {worst:e}");
        }
    }

    #[test]
    fn kernel_solver_rejects_bad_grids() {
        let p = params(1.0);
        assert!(solve_memory_kernel(&p, &[]).is_err());
        assert!(solve_memory_kernel(&p, &[0.1, 0.2]).is_err());
        assert!(solve_memory_kernel(&p, &[0.0, 0.001, 0.0015]).is_err());
        assert!(solve_memory_kernel(&p, &[0.0, -0.001]).is_err());
        assert!(solve_memory_kernel(&p, &[0.0, 0.01]).is_err());
        assert_eq!(solve_memory_kernel(&p, &[0.0]).unwrap(), vec![1.0]);
    }
}
