// Copyright 2026 discord-dynamics Contributors
// SPDX-License-Identifier: Apache-2.0

//! Runs a figure preset on a coarse grid, writes its CSV and reads it back.
//!
//! `cargo run --example figure_sweep -- fig3a out/fig3a.csv`

use discord_dynamics::sweep::read_csv;
use discord_dynamics::{figure_preset, run_sweep, FigureId};

fn main() -> discord_dynamics::Result<()> {
    let mut args = std::env::args().skip(1);
    let id: FigureId = args.next().as_deref().unwrap_or("fig3a").parse()?;
    let mut config = figure_preset(id);
    config.output = args.next().map_or_else(|| std::env::temp_dir().join(config.output.clone()), Into::into);
    config.axes.iter_mut().for_each(|axis| axis.count = axis.count.min(6));
    config.time.points = 51;

    for path in run_sweep(&config)? {
        let rows = read_csv(&std::fs::read_to_string(&path)?)?;
        let peak = rows.iter().map(|r| r.record.discord).fold(0.0, f64::max);
        println!("{}: {} rows, largest discord {peak:.4} bits", path.display(), rows.len());
    }
    Ok(())
}
