// Copyright 2026 discord-dynamics Contributors
// SPDX-License-Identifier: Apache-2.0

//! Exact dynamics of two qubits, each damped by its own zero-temperature
//! reservoir with a Lorentzian spectral density, and the correlations that
//! survive it.
//!
//! The pipeline is
//!
//! 1. [`ReservoirParams::chi`] gives the closed-form excited-state amplitude
//!    factor `χ(t)` in either the Markovian or the non-Markovian regime;
//! 2. [`two_qubit_evolve`] applies the amplitude-damping channel to each
//!    qubit;
//! 3. [`CorrelationRecord::evaluate`] measures concurrence, mutual
//!    information, classical correlation and quantum discord;
//! 4. the [`sweep`] module strings these together over parameter grids,
//!    writes CSV and finds sudden death, discord zeros and revivals.
//!
//! Time is dimensionless throughout, in units of `1/γ₀`.
//!
//! ```
//! use discord_dynamics::{build_state, two_qubit_evolve, quantum_discord, Family, ReservoirParams, StateFamily, Subsystem};
//!
//! let params = ReservoirParams::from_ratio(0.1)?;
//! let rho0 = build_state(&StateFamily::new(Family::Psi, 0.5, 1.0)?);
//! let chi = params.chi(3.0)?;
//! let rho = two_qubit_evolve(&rho0, chi, chi)?;
//! assert!(quantum_discord(&rho, Subsystem::B) > 0.0);
//! # Ok::<(), discord_dynamics::Error>(())
//! ```

// Range checks are written `!(lo <= x)` on purpose so that NaN fails them.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod correlations;
pub mod error;
pub mod linalg;
pub mod random;
pub mod reservoir;
pub mod scenarios;
pub mod state;
pub mod sweep;
pub mod verify;

pub use correlations::{
    brute_force_classical_correlation, classical_correlation, concurrence, conditional_entropy, mutual_information,
    quantum_discord, von_neumann_entropy, CorrelationRecord, MeasurementBasis,
};
pub use error::{Error, Result};
pub use reservoir::{solve_memory_kernel, Regime, ReservoirParams};
pub use scenarios::{build_state, figure_preset, Family, FigureId, StateFamily};
pub use state::{
    amplitude_damping_kraus, partial_trace, single_qubit_evolve, tensor, two_qubit_evolve, DensityMatrix, KrausPair,
    QubitState, Subsystem, TwoQubitState,
};
pub use sweep::{
    detect_discord_zeros, detect_esd, evolve_state_trajectory, evolve_trajectory, revival_amplitude, run_sweep,
    EsdReport, SweepConfig,
};
