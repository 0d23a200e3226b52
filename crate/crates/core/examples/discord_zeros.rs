// Copyright 2026 discord-dynamics Contributors
// SPDX-License-Identifier: Apache-2.0

//! Narrow reservoir (λ = 0.1γ₀): the discord vanishes only at the isolated
//! zeros of χ and revives in between.

use discord_dynamics::sweep::{TimeGrid, DISCORD_ZERO_THRESHOLD};
use discord_dynamics::{detect_discord_zeros, evolve_trajectory, Family, ReservoirParams, StateFamily, Subsystem};

fn main() -> discord_dynamics::Result<()> {
    let params = ReservoirParams::from_ratio(0.1)?;
    let grid = TimeGrid::new(25.0, 1001).times();
    println!("zeros of chi: {:.4?}", params.chi_zeros(2)?);
    for alpha_sq in [0.2, 0.5, 0.8] {
        let spec = StateFamily::new(Family::Psi, alpha_sq, 1.0)?;
        let series = evolve_trajectory(&spec, &params, &grid, Subsystem::B)?;
        let zeros = detect_discord_zeros(&series, DISCORD_ZERO_THRESHOLD);
        let peak = series.iter().filter(|r| r.t > 10.0 && r.t < 20.0).map(|r| r.discord).fold(0.0, f64::max);
        println!("alpha^2 = {alpha_sq}: discord zeros {zeros:.4?}, revival peak {peak:.4}");
    }
    Ok(())
}
