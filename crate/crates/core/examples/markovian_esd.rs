// Copyright 2026 discord-dynamics Contributors
// SPDX-License-Identifier: Apache-2.0

//! Broad reservoir (λ = 10γ₀): entanglement dies at a finite time when the
//! doubly excited component dominates, while the discord only decays.

use discord_dynamics::sweep::{TimeGrid, ESD_DWELL_WINDOW, ESD_THRESHOLD};
use discord_dynamics::{detect_esd, evolve_trajectory, Family, ReservoirParams, StateFamily, Subsystem};

fn main() -> discord_dynamics::Result<()> {
    let params = ReservoirParams::from_ratio(10.0)?;
    let grid = TimeGrid::new(20.0, 201).times();
    println!("alpha^2  sudden death   discord at t=5");
    for alpha_sq in [0.1, 0.25, 0.4, 0.5, 0.6, 0.75, 0.9] {
        let spec = StateFamily::new(Family::Psi, alpha_sq, 1.0)?;
        let series = evolve_trajectory(&spec, &params, &grid, Subsystem::B)?;
        let esd = detect_esd(&series, ESD_THRESHOLD, ESD_DWELL_WINDOW);
        let death = esd.esd_time.map_or("never".to_string(), |t| format!("t = {t:.2}"));
        println!("{alpha_sq:>7}  {death:<13}  {:.3e}", series[50].discord);
    }
    Ok(())
}
