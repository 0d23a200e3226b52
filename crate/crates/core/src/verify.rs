// Copyright 2026 discord-dynamics Contributors
// SPDX-License-Identifier: Apache-2.0

//! Self-checks against independent oracles, reported as a pass/fail table.
//!
//! [`Level::Quick`] keeps to cheap identities and small samples. [`Level::Full`]
//! runs the complete set of physics and reproducibility checks, including a
//! full figure sweep done twice.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::correlations::{
    brute_force_classical_correlation, classical_correlation, concurrence, quantum_discord, von_neumann_entropy,
};
use crate::error::{Error, Result};
use crate::random;
use crate::reservoir::{solve_memory_kernel, ReservoirParams};
use crate::scenarios::{build_state, figure_preset, Family, FigureId, StateFamily};
use crate::state::{
    amplitude_damping_kraus, partial_trace, single_qubit_evolve, two_qubit_evolve, Subsystem, TwoQubitState,
};
use crate::sweep::{
    detect_discord_zeros, detect_esd, evolve_trajectory, render_sweep, revival_amplitude, TimeGrid,
    DISCORD_ZERO_THRESHOLD, ESD_DWELL_WINDOW, ESD_THRESHOLD,
};

const SEED: u64 = 0x5eed_d15c;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Quick,
    Full,
}

impl FromStr for Level {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quick" => Ok(Level::Quick),
            "full" => Ok(Level::Full),
            other => Err(Error::InvalidConfig(format!("unknown verification level {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, passed: bool, detail: String) -> Self {
        Self { name, passed, detail }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for check in &self.checks {
            let status = if check.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{status}  {:width$}  {}", check.name, check.detail)?;
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        write!(f, "{} checks, {failed} failed", self.checks.len())
    }
}

pub fn run(level: Level) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut checks = vec![chi_starts_at_one()];
    match level {
        Level::Quick => {
            checks.push(kernel_oracle(&[0.1, 10.0], 5.0));
            checks.push(channel_laws(&mut rng, 100));
            checks.push(bell_discord(|rho| quantum_discord(rho, Subsystem::B)));
            checks.push(pure_state_identity(&mut rng, 20));
            checks.push(diagonal_states(&mut rng, 20));
            checks.push(optimizer_vs_grid(&mut rng, 10, 64, 1e-3));
            checks.push(werner_onset());
        }
        Level::Full => {
            checks.push(kernel_oracle(&[0.05, 0.1, 0.5, 2.0, 10.0], 25.0));
            checks.push(discord_zeros());
            checks.push(esd_dichotomy());
            checks.push(werner_onset());
            checks.push(revival_trend());
            checks.push(optimizer_vs_grid(&mut rng, 200, 256, 1e-4));
            checks.push(bell_discord(|rho| quantum_discord(rho, Subsystem::B)));
            checks.push(pure_state_identity(&mut rng, 100));
            checks.push(diagonal_states(&mut rng, 100));
            checks.push(channel_laws(&mut rng, 1000));
            checks.push(sweep_determinism());
        }
    }
    Report { checks }
}

fn failed(name: &'static str, err: Error) -> Check {
    Check::new(name, false, format!("error: {err}"))
}

fn chi_starts_at_one() -> Check {
    let worst = [0.05, 0.1, 0.5, 2.0, 10.0, 1000.0]
        .iter()
        .map(|&r| ReservoirParams::from_ratio(r).and_then(|p| p.chi(0.0)).map_or(f64::INFINITY, |c| (c - 1.0).abs()))
        .fold(0.0, f64::max);
    Check::new("chi(0) = 1", worst < 1e-15, format!("max deviation {worst:.1e}"))
}

fn kernel_oracle(ratios: &[f64], t_max: f64) -> Check {
    const NAME: &str = "closed-form chi vs memory-kernel solution";
    let points = (t_max * 1000.0).round() as usize + 1;
    let grid = TimeGrid::new(t_max, points).times();
    let mut worst: f64 = 0.0;
    for &ratio in ratios {
        let result = ReservoirParams::from_ratio(ratio).and_then(|p| {
            let numeric = solve_memory_kernel(&p, &grid)?;
            let mut sup: f64 = 0.0;
            for (&t, &n) in grid.iter().zip(&numeric) {
                sup = sup.max((p.chi(t)? - n).abs());
            }
            Ok(sup)
        });
        match result {
            Ok(d) => worst = worst.max(d),
            Err(e) => return failed(NAME, e),
        }
    }
    Check::new(NAME, worst < 1e-6, format!("sup-norm {worst:.2e} on [0, {t_max}] over ratios {ratios:?}"))
}

fn channel_laws(rng: &mut ChaCha8Rng, samples: usize) -> Check {
    const NAME: &str = "channel laws";
    let mut worst_trace: f64 = 0.0;
    let mut worst_kraus: f64 = 0.0;
    let mut worst_eigenvalue = f64::INFINITY;
    let mut worst_locality: f64 = 0.0;
    for _ in 0..samples {
        let rho = random::mixed_state::<4>(rng);
        let chi_a = rng.random_range(-1.0..=1.0);
        let chi_b = rng.random_range(-1.0..=1.0);
        let outcome = (|| -> Result<()> {
            worst_kraus = worst_kraus.max(amplitude_damping_kraus(chi_a)?.completeness_defect());
            let out = two_qubit_evolve(&rho, chi_a, chi_b)?;
            worst_trace = worst_trace.max((out.matrix().trace().re - 1.0).abs());
            worst_eigenvalue = worst_eigenvalue.min(out.eigenvalues()[0]);
            for (keep, chi) in [(Subsystem::A, chi_a), (Subsystem::B, chi_b)] {
                let direct = single_qubit_evolve(&partial_trace(&rho, keep), chi)?;
                let reduced = partial_trace(&out, keep);
                worst_locality = worst_locality.max(direct.matrix().max_abs_diff(reduced.matrix()));
            }
            Ok(())
        })();
        if let Err(e) = outcome {
            return failed(NAME, e);
        }
    }
    let passed = worst_trace < 1e-12 && worst_kraus < 1e-14 && worst_eigenvalue >= -1e-10 && worst_locality < 1e-12;
    Check::new(
        NAME,
        passed,
        format!(
            "{samples} inputs: trace {worst_trace:.1e}, completeness {worst_kraus:.1e}, \
             min eigenvalue {worst_eigenvalue:.1e}, locality {worst_locality:.1e}"
        ),
    )
}

fn bell() -> TwoQubitState {
    build_state(&StateFamily::new(Family::Psi, 0.5, 1.0).expect("valid parameters"))
}

/// Takes the discord as a parameter so a broken implementation can be
/// shown to fail.
pub fn bell_discord(discord: impl Fn(&TwoQubitState) -> f64) -> Check {
    let value = discord(&bell());
    Check::new("Bell-state discord = 1 bit", (value - 1.0).abs() < 1e-4, format!("{value:.6} bits"))
}

fn pure_state_identity(rng: &mut ChaCha8Rng, samples: usize) -> Check {
    let worst = (0..samples)
        .map(|_| {
            let rho = random::pure_state::<4>(rng);
            (quantum_discord(&rho, Subsystem::B) - von_neumann_entropy(&partial_trace(&rho, Subsystem::A))).abs()
        })
        .fold(0.0, f64::max);
    Check::new("pure states: discord = S(rho_A)", worst < 1e-6, format!("{samples} states, max gap {worst:.1e}"))
}

fn diagonal_states(rng: &mut ChaCha8Rng, samples: usize) -> Check {
    let worst = (0..samples)
        .map(|_| quantum_discord(&random::computational_diagonal_state(rng), Subsystem::B))
        .fold(0.0, f64::max);
    Check::new("diagonal states: zero discord", worst < 1e-6, format!("{samples} states, max {worst:.1e}"))
}

/// The optimizer may not lose to the grid; `max_gain` bounds how far a grid
/// of `grid_n` points can fall short of the true maximum.
fn optimizer_vs_grid(rng: &mut ChaCha8Rng, samples: usize, grid_n: usize, max_gain: f64) -> Check {
    const NAME: &str = "optimizer vs brute-force grid";
    let mut lowest = f64::INFINITY;
    let mut highest = f64::NEG_INFINITY;
    for _ in 0..samples {
        let rho = random::mixed_state::<4>(rng);
        let optimized = classical_correlation(&rho, Subsystem::B).0;
        match brute_force_classical_correlation(&rho, grid_n, Subsystem::B) {
            Ok(grid) => {
                lowest = lowest.min(optimized - grid);
                highest = highest.max(optimized - grid);
            }
            Err(e) => return failed(NAME, e),
        }
    }
    Check::new(
        NAME,
        lowest >= -1e-9 && highest <= max_gain,
        format!("{samples} states, grid {grid_n}: optimized - grid in [{lowest:.1e}, {highest:.1e}]"),
    )
}

fn werner_onset() -> Check {
    let at = |r: f64| build_state(&StateFamily::new(Family::Psi, 0.5, r).expect("valid parameters"));
    let c_third = concurrence(&at(1.0 / 3.0));
    let c_04 = concurrence(&at(0.4));
    let d_005 = quantum_discord(&at(0.05), Subsystem::B);
    Check::new(
        "Werner onset at t = 0",
        c_third.abs() < 1e-10 && c_04 > 0.04 && d_005 > 1e-4,
        format!("C(1/3) = {c_third:.1e}, C(0.4) = {c_04:.4}, D(0.05) = {d_005:.2e}"),
    )
}

fn trajectory(family: Family, alpha_sq: f64, ratio: f64, grid: &[f64]) -> Result<Vec<crate::CorrelationRecord>> {
    let spec = StateFamily::new(family, alpha_sq, 1.0)?;
    evolve_trajectory(&spec, &ReservoirParams::from_ratio(ratio)?, grid, Subsystem::B)
}

fn discord_zeros() -> Check {
    const NAME: &str = "discord zeros at the zeros of chi";
    let grid = TimeGrid::new(25.0, 1001).times();
    let outcome = (|| -> Result<(Vec<f64>, Vec<f64>, f64)> {
        let series = trajectory(Family::Psi, 0.5, 0.1, &grid)?;
        let expected = ReservoirParams::from_ratio(0.1)?.chi_zeros(2)?;
        let found = detect_discord_zeros(&series, DISCORD_ZERO_THRESHOLD);
        let between = match found[..] {
            [a, b, ..] => series.iter().filter(|r| r.t > a && r.t < b).map(|r| r.discord).fold(0.0, f64::max),
            _ => 0.0,
        };
        Ok((found, expected, between))
    })();
    match outcome {
        Ok((found, expected, between)) => {
            let worst = if found.len() >= 2 {
                found.iter().zip(&expected).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
            } else {
                f64::INFINITY
            };
            Check::new(
                NAME,
                worst < 5e-3 && between > 1e-3,
                format!("found {found:.4?}, expected {expected:.4?}, peak between {between:.3e}"),
            )
        }
        Err(e) => failed(NAME, e),
    }
}

fn esd_dichotomy() -> Check {
    const NAME: &str = "sudden death only below alpha^2 = 1/2";
    let grid = TimeGrid::new(20.0, 1001).times();
    let outcome = (|| -> Result<Check> {
        let low = trajectory(Family::Psi, 0.25, 10.0, &grid)?;
        let high = trajectory(Family::Psi, 0.75, 10.0, &grid)?;
        let esd_low = detect_esd(&low, ESD_THRESHOLD, ESD_DWELL_WINDOW).esd_time;
        let esd_high = detect_esd(&high, ESD_THRESHOLD, ESD_DWELL_WINDOW).esd_time;
        let min_discord =
            low.iter().chain(&high).filter(|r| r.t < 10.0).map(|r| r.discord).fold(f64::INFINITY, f64::min);
        Ok(Check::new(
            NAME,
            esd_low.is_some() && esd_high.is_none() && min_discord > 1e-9,
            format!("esd(0.25) = {esd_low:?}, esd(0.75) = {esd_high:?}, min discord before t=10 {min_discord:.2e}"),
        ))
    })();
    outcome.unwrap_or_else(|e| failed(NAME, e))
}

fn revival_trend() -> Check {
    const NAME: &str = "revival amplitude grows as the reservoir narrows";
    let grid = TimeGrid::new(25.0, 1001).times();
    let amplitudes: Result<Vec<f64>> = [0.05, 0.1, 0.2, 0.5]
        .iter()
        .map(|&ratio| revival_amplitude(&trajectory(Family::Psi, 1.0 / 3.0, ratio, &grid)?))
        .collect();
    match amplitudes {
        Ok(a) => Check::new(NAME, a.windows(2).all(|w| w[0] > w[1]), format!("ratios 0.05, 0.1, 0.2, 0.5: {a:.4?}")),
        Err(e) => failed(NAME, e),
    }
}

fn sweep_determinism() -> Check {
    const NAME: &str = "fig2 sweep is byte-identical across runs";
    let config = figure_preset(FigureId::Fig2);
    let outcome = (|| -> Result<(bool, usize)> {
        let first = render_sweep(&config, Family::Psi)?;
        let second = render_sweep(&config, Family::Psi)?;
        Ok((first == second, first.len()))
    })();
    match outcome {
        Ok((same, bytes)) => Check::new(NAME, same, format!("{bytes} bytes")),
        Err(e) => failed(NAME, e),
    }
}
