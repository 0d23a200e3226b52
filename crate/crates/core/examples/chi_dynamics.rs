// Copyright 2026 discord-dynamics Contributors
// SPDX-License-Identifier: Apache-2.0

//! Amplitude factor χ(t) on either side of the Markovian boundary, its
//! zeros, and a cross-check against direct integration of the memory kernel.

use discord_dynamics::sweep::TimeGrid;
use discord_dynamics::{solve_memory_kernel, ReservoirParams};

fn main() -> discord_dynamics::Result<()> {
    for ratio in [0.1, 2.0, 10.0] {
        let params = ReservoirParams::from_ratio(ratio)?;
        println!("lambda/gamma0 = {ratio} ({:?})", params.regime());
        for t in [0.0, 2.0, 5.0, 10.0, 20.0] {
            println!("  chi({t:>4}) = {:+.6e}", params.chi(t)?);
        }
        match params.chi_zeros(3) {
            Ok(zeros) => println!("  first zeros: {zeros:.4?}"),
            Err(e) => println!("  {e}"),
        }

        let grid = TimeGrid::new(10.0, 10_001).times();
        let numeric = solve_memory_kernel(&params, &grid)?;
        let gap = grid.iter().zip(&numeric).map(|(&t, &n)| (params.chi(t).unwrap() - n).abs()).fold(0.0, f64::max);
        println!("  max |closed form - kernel solution| on [0, 10]: {gap:.2e}");
    }
    Ok(())
}
