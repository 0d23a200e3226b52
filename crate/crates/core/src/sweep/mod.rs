// Copyright 2026 discord-dynamics Contributors
// SPDX-License-Identifier: Apache-2.0

//! Trajectories, parameter sweeps and the analyses run on them.
//!
//! Sweep points are independent and are evaluated in parallel; results are
//! always assembled in axis-major, then time, order so the output bytes do
//! not depend on scheduling.

mod csv;
mod detect;
mod raw;

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;

use crate::correlations::CorrelationRecord;
use crate::error::{Error, Result};
use crate::reservoir::ReservoirParams;
use crate::scenarios::{build_state, Family, StateFamily};
use crate::state::{two_qubit_evolve, Subsystem, TwoQubitState};

pub use self::csv::{read_csv, render_csv, write_csv, SweepRow, CSV_HEADER};
pub use self::detect::{
    detect_discord_zeros, detect_esd, revival_amplitude, EsdReport, DISCORD_ZERO_THRESHOLD, ESD_DWELL_WINDOW,
    ESD_THRESHOLD,
};
pub use self::raw::{parse_raw_matrix, read_raw_matrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AxisName {
    AlphaSq,
    R,
    LambdaRatio,
}

impl AxisName {
    pub fn name(self) -> &'static str {
        match self {
            AxisName::AlphaSq => "alpha_sq",
            AxisName::R => "r",
            AxisName::LambdaRatio => "lambda_ratio",
        }
    }
}

impl fmt::Display for AxisName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AxisName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "alpha_sq" => Ok(AxisName::AlphaSq),
            "r" => Ok(AxisName::R),
            "lambda_ratio" => Ok(AxisName::LambdaRatio),
            other => Err(Error::InvalidConfig(format!("unknown axis {other:?}"))),
        }
    }
}

/// Uniformly spaced values of one parameter, endpoints included.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Axis {
    pub name: AxisName,
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

impl Axis {
    pub fn new(name: AxisName, min: f64, max: f64, count: usize) -> Self {
        Self { name, min, max, count }
    }

    pub fn values(&self) -> Vec<f64> {
        linspace(self.min, self.max, self.count)
    }
}

/// `points` uniformly spaced dimensionless times on `[0, t_max]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TimeGrid {
    pub t_max: f64,
    pub points: usize,
}

impl TimeGrid {
    pub fn new(t_max: f64, points: usize) -> Self {
        Self { t_max, points }
    }

    pub fn times(&self) -> Vec<f64> {
        linspace(0.0, self.t_max, self.points)
    }

    pub fn step(&self) -> f64 {
        self.t_max / (self.points - 1) as f64
    }
}

fn linspace(min: f64, max: f64, count: usize) -> Vec<f64> {
    if count == 1 {
        return vec![min];
    }
    let step = (max - min) / (count - 1) as f64;
    (0..count).map(|i| if i + 1 == count { max } else { min + i as f64 * step }).collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    /// One output file per family.
    pub families: Vec<Family>,
    pub alpha_sq: f64,
    pub r: f64,
    pub lambda_ratio: f64,
    /// Swept parameters; the first axis varies slowest.
    pub axes: Vec<Axis>,
    pub time: TimeGrid,
    pub measured: Subsystem,
    pub output: PathBuf,
}

/// One sweep point: the parameters not tied to time.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepPoint {
    pub family: Family,
    pub alpha_sq: f64,
    pub r: f64,
    pub lambda_ratio: f64,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        let invalid = |msg: String| Err(Error::InvalidConfig(msg));
        if self.families.is_empty() {
            return invalid("at least one state family is required".into());
        }
        if !(self.time.t_max > 0.0 && self.time.t_max.is_finite()) {
            return invalid(format!("t_max must be positive, got {}", self.time.t_max));
        }
        if self.time.points < 2 {
            return invalid(format!("need at least 2 time points, got {}", self.time.points));
        }
        for (i, axis) in self.axes.iter().enumerate() {
            if axis.count < 2 {
                return invalid(format!("axis {} needs at least 2 points, got {}", axis.name, axis.count));
            }
            if !(axis.min <= axis.max) {
                return invalid(format!("axis {} has min > max", axis.name));
            }
            if self.axes[..i].iter().any(|other| other.name == axis.name) {
                return invalid(format!("axis {} appears twice", axis.name));
            }
        }
        for point in self.points_for(self.families[0]) {
            StateFamily::new(point.family, point.alpha_sq, point.r)?;
            ReservoirParams::from_ratio(point.lambda_ratio)?;
        }
        Ok(())
    }

    /// Every axis combination for `family`, first axis slowest.
    pub fn points_for(&self, family: Family) -> Vec<SweepPoint> {
        let mut points =
            vec![SweepPoint { family, alpha_sq: self.alpha_sq, r: self.r, lambda_ratio: self.lambda_ratio }];
        for axis in &self.axes {
            let values = axis.values();
            points = points
                .into_iter()
                .flat_map(|p| {
                    values.iter().map(move |&v| {
                        let mut q = p;
                        match axis.name {
                            AxisName::AlphaSq => q.alpha_sq = v,
                            AxisName::R => q.r = v,
                            AxisName::LambdaRatio => q.lambda_ratio = v,
                        }
                        q
                    })
                })
                .collect();
        }
        points
    }

    /// Output path for `family`: the configured path when there is one
    /// family, otherwise `<stem>_<family>.<ext>`.
    pub fn output_for(&self, family: Family) -> PathBuf {
        if self.families.len() == 1 {
            return self.output.clone();
        }
        let stem = self.output.file_stem().and_then(|s| s.to_str()).unwrap_or("sweep");
        let ext = self.output.extension().and_then(|s| s.to_str()).unwrap_or("csv");
        self.output.with_file_name(format!("{stem}_{}.{ext}", family.name()))
    }
}

/// Evolves `rho0` under identical reservoirs on both qubits and records all
/// correlation measures at each time in `t_grid`.
pub fn evolve_state_trajectory(
    rho0: &TwoQubitState,
    params: &ReservoirParams,
    t_grid: &[f64],
    measured: Subsystem,
) -> Result<Vec<CorrelationRecord>> {
    t_grid
        .par_iter()
        .map(|&t| {
            let chi = params.chi(t)?;
            let rho = two_qubit_evolve(rho0, chi, chi)?;
            Ok(CorrelationRecord::evaluate(t, &rho, measured))
        })
        .collect()
}

/// Trajectory of the Werner-like state described by `spec`.
pub fn evolve_trajectory(
    spec: &StateFamily,
    params: &ReservoirParams,
    t_grid: &[f64],
    measured: Subsystem,
) -> Result<Vec<CorrelationRecord>> {
    evolve_state_trajectory(&build_state(spec), params, t_grid, measured)
}

/// CSV rows for one trajectory. `spec` fills the state columns; they are
/// NaN for an arbitrary initial matrix.
pub fn trajectory_rows(
    rho0: &TwoQubitState,
    spec: Option<&StateFamily>,
    params: &ReservoirParams,
    t_grid: &[f64],
    measured: Subsystem,
) -> Result<Vec<SweepRow>> {
    let records = evolve_state_trajectory(rho0, params, t_grid, measured)?;
    records
        .into_iter()
        .map(|record| {
            Ok(SweepRow {
                alpha_sq: spec.map_or(f64::NAN, |s| s.alpha_sq),
                r: spec.map_or(f64::NAN, |s| s.r),
                lambda_ratio: params.lambda_ratio(),
                chi: params.chi(record.t)?,
                record,
            })
        })
        .collect()
}

/// All rows for one family, in output order.
pub fn sweep_rows(config: &SweepConfig, family: Family) -> Result<Vec<SweepRow>> {
    config.validate()?;
    let times = config.time.times();
    let points = config.points_for(family);
    let jobs: Vec<(SweepPoint, f64)> = points.iter().flat_map(|&p| times.iter().map(move |&t| (p, t))).collect();
    jobs.par_iter()
        .map(|&(point, t)| {
            let spec = StateFamily::new(point.family, point.alpha_sq, point.r)?;
            let params = ReservoirParams::from_ratio(point.lambda_ratio)?;
            let chi = params.chi(t)?;
            let rho = two_qubit_evolve(&build_state(&spec), chi, chi)?;
            Ok(SweepRow {
                alpha_sq: point.alpha_sq,
                r: point.r,
                lambda_ratio: point.lambda_ratio,
                chi,
                record: CorrelationRecord::evaluate(t, &rho, config.measured),
            })
        })
        .collect()
}

/// Runs the sweep and writes one CSV per family. Returns the paths written.
pub fn run_sweep(config: &SweepConfig) -> Result<Vec<PathBuf>> {
    config.validate()?;
    let mut written = Vec::with_capacity(config.families.len());
    for &family in &config.families {
        let rows = sweep_rows(config, family)?;
        let path = config.output_for(family);
        write_csv(&path, &rows)?;
        written.push(path);
    }
    Ok(written)
}

/// Convenience for callers that only need the CSV bytes of a single family.
pub fn render_sweep(config: &SweepConfig, family: Family) -> Result<Vec<u8>> {
    Ok(render_csv(&sweep_rows(config, family)?))
}

pub(crate) fn ensure_parent(path: &Path) -> Result<()> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        std::fs::create_dir_all(parent).map_err(|source| Error::Write { path: path.to_path_buf(), source })?;
    }
    Ok(())
}
