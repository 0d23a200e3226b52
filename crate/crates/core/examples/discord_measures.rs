// Copyright 2026 discord-dynamics Contributors
// SPDX-License-Identifier: Apache-2.0

//! Entropic correlations and concurrence of a few reference states.

use discord_dynamics::{
    build_state, classical_correlation, concurrence, mutual_information, quantum_discord, DensityMatrix, Family,
    StateFamily, Subsystem, TwoQubitState,
};

fn report(name: &str, rho: &TwoQubitState) {
    let (classical, basis) = classical_correlation(rho, Subsystem::B);
    println!(
        "{name:<24} I = {:.4}  J = {classical:.4}  D = {:.4}  C = {:.4}  (theta {:.3}, phi {:.3})",
        mutual_information(rho),
        quantum_discord(rho, Subsystem::B),
        concurrence(rho),
        basis.theta(),
        basis.phi(),
    );
}

fn main() -> discord_dynamics::Result<()> {
    report("Bell", &build_state(&StateFamily::new(Family::Psi, 0.5, 1.0)?));
    report("pure, alpha^2 = 1/3", &build_state(&StateFamily::new(Family::Psi, 1.0 / 3.0, 1.0)?));
    for r in [0.2, 1.0 / 3.0, 0.6] {
        report(&format!("Werner r = {r:.3}"), &build_state(&StateFamily::new(Family::Psi, 0.5, r)?));
    }
    report("classical mixture", &DensityMatrix::diagonal([0.5, 0.0, 0.0, 0.5])?);
    Ok(())
}
