// Copyright 2026 discord-dynamics Contributors
// SPDX-License-Identifier: Apache-2.0

//! Evolves an arbitrary initial state given as 32 reals (row-major,
//! real/imaginary interleaved) in the `{|11⟩, |10⟩, |01⟩, |00⟩}` basis.

use discord_dynamics::sweep::{parse_raw_matrix, render_csv, trajectory_rows, TimeGrid};
use discord_dynamics::{ReservoirParams, Subsystem};

// (|10⟩ + i|01⟩)/√2 mixed with a little white noise.
const STATE: &str = "
    0.025 0    0     0    0     0     0    0
    0     0    0.475 0    0     -0.45 0    0
    0     0    0     0.45 0.475 0     0    0
    0     0    0     0    0     0     0.025 0
";

fn main() -> discord_dynamics::Result<()> {
    let rho = parse_raw_matrix(STATE)?;
    let params = ReservoirParams::from_ratio(0.2)?;
    let rows = trajectory_rows(&rho, None, &params, &TimeGrid::new(10.0, 6).times(), Subsystem::A)?;
    print!("{}", String::from_utf8(render_csv(&rows)).expect("CSV is ASCII"));
    Ok(())
}
