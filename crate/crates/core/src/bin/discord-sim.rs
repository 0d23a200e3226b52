// Copyright 2026 discord-dynamics Contributors
// SPDX-License-Identifier: Apache-2.0

//! Command-line front end: single trajectories, figure sweeps, zero finding
//! and self-verification.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use discord_dynamics::scenarios::{figure_preset, FigureId};
use discord_dynamics::sweep::{
    detect_discord_zeros, detect_esd, read_raw_matrix, render_csv, revival_amplitude, run_sweep, trajectory_rows,
    write_csv, AxisName, TimeGrid, DISCORD_ZERO_THRESHOLD, ESD_DWELL_WINDOW, ESD_THRESHOLD,
};
use discord_dynamics::{
    build_state, evolve_trajectory, verify, Error, Family, ReservoirParams, Result, StateFamily, Subsystem,
};

#[derive(Parser)]
#[command(name = "discord-sim", version, about = "Two-qubit entanglement and discord under Lorentzian reservoirs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evolve one initial state and write its trajectory as CSV.
    Evolve(EvolveArgs),
    /// Run a figure preset and write one CSV per state family.
    Sweep(SweepArgs),
    /// List the zeros of chi and the detected discord zeros.
    Zeros(StateArgs),
    /// Check the implementation against its oracles.
    Verify {
        #[arg(value_enum, default_value = "quick")]
        level: LevelArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Phi,
    Psi,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Phi => Family::Phi,
            FamilyArg::Psi => Family::Psi,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MeasureArg {
    A,
    B,
}

impl From<MeasureArg> for Subsystem {
    fn from(m: MeasureArg) -> Self {
        match m {
            MeasureArg::A => Subsystem::A,
            MeasureArg::B => Subsystem::B,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Quick,
    Full,
}

#[derive(Args)]
struct StateArgs {
    #[arg(long, value_enum, default_value = "psi")]
    state: FamilyArg,
    #[arg(long = "alpha2", default_value_t = 0.5)]
    alpha2: f64,
    #[arg(long, default_value_t = 1.0)]
    r: f64,
    #[arg(long = "lambda-ratio", default_value_t = 0.1)]
    lambda_ratio: f64,
    #[arg(long, default_value_t = 25.0)]
    tmax: f64,
    /// Number of time points, endpoints included.
    #[arg(long, default_value_t = 1001)]
    steps: usize,
    /// Qubit the local measurement acts on.
    #[arg(long, value_enum, default_value = "B", ignore_case = true)]
    measure: MeasureArg,
}

#[derive(Args)]
struct EvolveArgs {
    #[command(flatten)]
    state: StateArgs,
    /// Initial state as 32 reals (row-major, re/im interleaved); overrides
    /// --state, --alpha2 and --r.
    #[arg(long)]
    matrix: Option<PathBuf>,
    /// Defaults to standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    preset: String,
    #[arg(long)]
    output: Option<PathBuf>,
    /// Points per swept axis.
    #[arg(long)]
    grid: Option<usize>,
    #[arg(long)]
    steps: Option<usize>,
    #[arg(long)]
    tmax: Option<f64>,
    #[arg(long = "alpha2")]
    alpha2: Option<f64>,
    #[arg(long)]
    r: Option<f64>,
    #[arg(long = "lambda-ratio")]
    lambda_ratio: Option<f64>,
    #[arg(long, value_enum, ignore_case = true)]
    measure: Option<MeasureArg>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Evolve(args) => evolve(args),
        Command::Sweep(args) => sweep(args),
        Command::Zeros(args) => zeros(args),
        Command::Verify { level } => {
            let level = match level {
                LevelArg::Quick => verify::Level::Quick,
                LevelArg::Full => verify::Level::Full,
            };
            let report = verify::run(level);
            println!("{report}");
            return if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) };
        }
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn evolve(args: EvolveArgs) -> Result<()> {
    let s = &args.state;
    let params = ReservoirParams::from_ratio(s.lambda_ratio)?;
    let grid = time_grid(s.tmax, s.steps)?;
    let rows = match &args.matrix {
        Some(path) => {
            let rho0 = read_raw_matrix(path)?;
            trajectory_rows(&rho0, None, &params, &grid, s.measure.into())?
        }
        None => {
            let spec = StateFamily::new(s.state.into(), s.alpha2, s.r)?;
            trajectory_rows(&build_state(&spec), Some(&spec), &params, &grid, s.measure.into())?
        }
    };
    match &args.output {
        Some(path) => write_csv(path, &rows),
        None => std::io::stdout().write_all(&render_csv(&rows)).map_err(Error::from),
    }
}

fn time_grid(tmax: f64, steps: usize) -> Result<Vec<f64>> {
    if !(tmax > 0.0 && tmax.is_finite()) || steps < 2 {
        return Err(Error::InvalidGrid(format!("need tmax > 0 and at least 2 steps, got {tmax} and {steps}")));
    }
    Ok(TimeGrid::new(tmax, steps).times())
}

fn sweep(args: SweepArgs) -> Result<()> {
    let id: FigureId = args.preset.parse()?;
    let mut config = figure_preset(id);
    if let Some(path) = args.output {
        config.output = path;
    }
    if let Some(n) = args.grid {
        config.axes.iter_mut().for_each(|axis| axis.count = n);
    }
    if let Some(n) = args.steps {
        config.time.points = n;
    }
    if let Some(t) = args.tmax {
        config.time.t_max = t;
    }
    if let Some(m) = args.measure {
        config.measured = m.into();
    }
    let fixed = [(AxisName::AlphaSq, args.alpha2), (AxisName::R, args.r), (AxisName::LambdaRatio, args.lambda_ratio)];
    for (name, value) in fixed {
        let Some(value) = value else { continue };
        if config.axes.iter().any(|axis| axis.name == name) {
            return Err(Error::InvalidConfig(format!("{name} is swept by preset {id} and cannot be fixed")));
        }
        match name {
            AxisName::AlphaSq => config.alpha_sq = value,
            AxisName::R => config.r = value,
            AxisName::LambdaRatio => config.lambda_ratio = value,
        }
    }
    for path in run_sweep(&config)? {
        println!("{}", path.display());
    }
    Ok(())
}

fn zeros(args: StateArgs) -> Result<()> {
    let params = ReservoirParams::from_ratio(args.lambda_ratio)?;
    let grid = time_grid(args.tmax, args.steps)?;
    match params.chi_zeros(1 + (args.tmax * params.d_ratio() / std::f64::consts::TAU) as usize) {
        Ok(zeros) => {
            for (n, t) in zeros.iter().filter(|&&t| t <= args.tmax).enumerate() {
                println!("chi_zero {} {t:.10}", n + 1);
            }
        }
        Err(Error::NoZeros(_)) => println!("chi has no zeros in the Markovian regime"),
        Err(e) => return Err(e),
    }
    let spec = StateFamily::new(args.state.into(), args.alpha2, args.r)?;
    let series = evolve_trajectory(&spec, &params, &grid, args.measure.into())?;
    for t in detect_discord_zeros(&series, DISCORD_ZERO_THRESHOLD) {
        println!("discord_zero {t:.10}");
    }
    let esd = detect_esd(&series, ESD_THRESHOLD, ESD_DWELL_WINDOW);
    match esd.esd_time {
        Some(t) => println!("sudden_death {t:.10}"),
        None => println!("sudden_death none"),
    }
    for (start, end) in esd.revival_times {
        println!("entanglement_revival {start:.10} {end:.10}");
    }
    match revival_amplitude(&series) {
        Ok(amplitude) => println!("discord_revival_amplitude {amplitude:.10e}"),
        Err(Error::NoRevival) => println!("discord_revival_amplitude none"),
        Err(e) => return Err(e),
    }
    Ok(())
}
