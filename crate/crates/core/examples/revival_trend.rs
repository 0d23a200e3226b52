// Copyright 2026 discord-dynamics Contributors
// SPDX-License-Identifier: Apache-2.0

//! Discord revival after the first zero grows as the reservoir narrows.

use discord_dynamics::sweep::TimeGrid;
use discord_dynamics::{evolve_trajectory, revival_amplitude, Family, ReservoirParams, StateFamily, Subsystem};

fn main() -> discord_dynamics::Result<()> {
    let spec = StateFamily::new(Family::Psi, 1.0 / 3.0, 1.0)?;
    let grid = TimeGrid::new(25.0, 1001).times();
    for ratio in [0.05, 0.1, 0.2, 0.5, 1.0, 5.0] {
        let series = evolve_trajectory(&spec, &ReservoirParams::from_ratio(ratio)?, &grid, Subsystem::B)?;
        match revival_amplitude(&series) {
            Ok(amplitude) => println!("lambda/gamma0 = {ratio:<4}  revival amplitude {amplitude:.4e} bits"),
            Err(e) => println!("lambda/gamma0 = {ratio:<4}  {e}"),
        }
    }
    Ok(())
}
