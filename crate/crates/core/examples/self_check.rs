// Copyright 2026 discord-dynamics Contributors
// SPDX-License-Identifier: Apache-2.0

//! Quick self-verification; pass `full` for the complete suite.

use discord_dynamics::verify::{run, Level};

fn main() -> std::process::ExitCode {
    let level = match std::env::args().nth(1).as_deref() {
        Some("full") => Level::Full,
        _ => Level::Quick,
    };
    let report = run(level);
    println!("{report}");
    if report.passed() {
        std::process::ExitCode::SUCCESS
    } else {
        std::process::ExitCode::FAILURE
    }
}
