// Copyright 2026 discord-dynamics Contributors
// SPDX-License-Identifier: Apache-2.0

//! Sudden death, isolated discord zeros and revival amplitudes read off a
//! sampled trajectory.

use crate::correlations::CorrelationRecord;
use crate::error::{Error, Result};

/// Concurrence below this counts as zero. It sits just above the round-off
/// floor of the concurrence, so slow asymptotic decay is not mistaken for
/// sudden death inside the default windows.
pub const ESD_THRESHOLD: f64 = 1e-12;
/// Dimensionless time the concurrence has to stay at zero.
pub const ESD_DWELL_WINDOW: f64 = 0.5;
/// Discord dips must fall below this and rise back above it.
pub const DISCORD_ZERO_THRESHOLD: f64 = 1e-6;

/// Slack on grid-time comparisons.
const TIME_SLACK: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct EsdReport {
    pub esd_time: Option<f64>,
    /// Closed grid-time intervals after `esd_time` where the concurrence is
    /// back at or above the threshold.
    pub revival_times: Vec<(f64, f64)>,
}

/// Maximal runs of consecutive indices where `keep` holds, as `(first, last)`.
fn runs(n: usize, keep: impl Fn(usize) -> bool) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut start = None;
    for i in 0..n {
        match (keep(i), start) {
            (true, None) => start = Some(i),
            (false, Some(s)) => {
                out.push((s, i - 1));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, n - 1));
    }
    out
}

pub fn detect_esd(series: &[CorrelationRecord], threshold: f64, dwell_window: f64) -> EsdReport {
    let t_end = series.last().map_or(f64::NEG_INFINITY, |r| r.t);

    let esd_index = (0..series.len()).find(|&i| {
        let horizon = series[i].t + dwell_window;
        horizon <= t_end + TIME_SLACK
            && series[i..].iter().take_while(|r| r.t <= horizon + TIME_SLACK).all(|r| r.concurrence < threshold)
    });

    let Some(start) = esd_index else {
        return EsdReport { esd_time: None, revival_times: Vec::new() };
    };
    let tail = &series[start..];
    let revival_times = runs(tail.len(), |i| tail[i].concurrence >= threshold)
        .into_iter()
        .map(|(a, b)| (tail[a].t, tail[b].t))
        .collect();
    EsdReport { esd_time: Some(series[start].t), revival_times }
}

/// Vertex of the parabola through three points.
fn parabola_vertex((x0, y0): (f64, f64), (x1, y1): (f64, f64), (x2, y2): (f64, f64)) -> Option<f64> {
    let d01 = (y1 - y0) / (x1 - x0);
    let d12 = (y2 - y1) / (x2 - x1);
    let curvature = (d12 - d01) / (x2 - x0);
    if !(curvature > 0.0) {
        return None;
    }
    Some(0.5 * (x0 + x1) - d01 / (2.0 * curvature))
}

/// Times where the discord dips below `threshold` and comes back.
///
/// Each dip contributes the refined position of its smallest sample. Discord
/// vanishes like the fourth power of the distance to an isolated zero, so
/// the parabola is fitted to its square root. A series that stays below the
/// threshold throughout collapses to its two endpoints; a run that reaches
/// only one end of the series is monotone decay, not a zero.
pub fn detect_discord_zeros(series: &[CorrelationRecord], threshold: f64) -> Vec<f64> {
    let n = series.len();
    let below = runs(n, |i| series[i].discord < threshold);
    if below == [(0, n.saturating_sub(1))] && n > 0 {
        return if n == 1 { vec![series[0].t] } else { vec![series[0].t, series[n - 1].t] };
    }

    let mut zeros = Vec::new();
    for (first, last) in below {
        if first == 0 || last == n - 1 {
            continue;
        }
        let min = (first..=last).min_by(|&a, &b| series[a].discord.total_cmp(&series[b].discord)).unwrap();
        let point = |i: usize| (series[i].t, series[i].discord.max(0.0).sqrt());
        let t = parabola_vertex(point(min - 1), point(min), point(min + 1))
            .map_or(series[min].t, |t| t.clamp(series[min - 1].t, series[min + 1].t));
        zeros.push(t);
    }
    zeros
}

/// Largest discord strictly after the first detected zero.
pub fn revival_amplitude(series: &[CorrelationRecord]) -> Result<f64> {
    let first = *detect_discord_zeros(series, DISCORD_ZERO_THRESHOLD).first().ok_or(Error::NoRevival)?;
    series.iter().filter(|r| r.t > first).map(|r| r.discord).reduce(f64::max).ok_or(Error::NoRevival)
}
