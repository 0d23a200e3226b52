// Copyright 2026 discord-dynamics Contributors
// SPDX-License-Identifier: Apache-2.0

//! Fixed-column CSV: `.` decimals, 17 significant digits, `\n` line endings.

use std::path::Path;

use crate::correlations::{CorrelationRecord, MeasurementBasis};
use crate::error::{Error, Result};

pub const CSV_HEADER: &str = "t_gamma0,alpha_sq,r,lambda_ratio,chi,concurrence,mutual_info_bits,\
classical_corr_bits,discord_bits,argmax_theta,argmax_phi";

/// One output row. Parameters unknown for raw initial matrices are NaN.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepRow {
    pub alpha_sq: f64,
    pub r: f64,
    pub lambda_ratio: f64,
    pub chi: f64,
    pub record: CorrelationRecord,
}

impl SweepRow {
    fn fields(&self) -> [f64; 11] {
        let rec = &self.record;
        [
            rec.t,
            self.alpha_sq,
            self.r,
            self.lambda_ratio,
            self.chi,
            rec.concurrence,
            rec.mutual_info,
            rec.classical_corr,
            rec.discord,
            rec.argmax_basis.theta(),
            rec.argmax_basis.phi(),
        ]
    }
}

pub fn render_csv(rows: &[SweepRow]) -> Vec<u8> {
    let mut out = String::with_capacity((rows.len() + 1) * 256);
    out.push_str(CSV_HEADER);
    out.push('\n');
    for row in rows {
        let fields = row.fields().map(|v| format!("{v:.16e}"));
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out.into_bytes()
}

pub fn write_csv(path: &Path, rows: &[SweepRow]) -> Result<()> {
    super::ensure_parent(path)?;
    std::fs::write(path, render_csv(rows)).map_err(|source| Error::Write { path: path.to_path_buf(), source })
}

pub fn read_csv(text: &str) -> Result<Vec<SweepRow>> {
    let mut lines = text.lines();
    match lines.next() {
        Some(header) if header == CSV_HEADER => {}
        other => return Err(Error::Csv(format!("unexpected header {other:?}"))),
    }
    lines
        .enumerate()
        .map(|(i, line)| {
            let values: Vec<f64> = line
                .split(',')
                .map(|field| field.parse::<f64>().map_err(|e| Error::Csv(format!("line {}: {e}", i + 2))))
                .collect::<Result<_>>()?;
            let [t, alpha_sq, r, lambda_ratio, chi, concurrence, mutual_info, classical_corr, discord, theta, phi] =
                <[f64; 11]>::try_from(values)
                    .map_err(|v| Error::Csv(format!("line {}: expected 11 fields, got {}", i + 2, v.len())))?;
            Ok(SweepRow {
                alpha_sq,
                r,
                lambda_ratio,
                chi,
                record: CorrelationRecord {
                    t,
                    concurrence,
                    mutual_info,
                    classical_corr,
                    discord,
                    argmax_basis: MeasurementBasis::new(theta, phi),
                },
            })
        })
        .collect()
}
