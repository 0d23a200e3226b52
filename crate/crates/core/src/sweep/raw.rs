// Copyright 2026 discord-dynamics Contributors
// SPDX-License-Identifier: Apache-2.0

//! Loader for arbitrary 4×4 initial states: 32 whitespace-separated reals,
//! row-major, real and imaginary parts interleaved.

use std::path::Path;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::Matrix4;
use crate::state::{DensityMatrix, TwoQubitState};

pub fn parse_raw_matrix(text: &str) -> Result<TwoQubitState> {
    let values: Vec<f64> = text
        .split_whitespace()
        .map(|tok| tok.parse::<f64>().map_err(|e| Error::RawMatrix(format!("{tok:?}: {e}"))))
        .collect::<Result<_>>()?;
    if values.len() != 32 {
        return Err(Error::RawMatrix(format!("expected 32 reals, got {}", values.len())));
    }
    let m = Matrix4::from_fn(|i, j| {
        let k = 2 * (4 * i + j);
        Complex64::new(values[k], values[k + 1])
    });
    DensityMatrix::new(m)
}

pub fn read_raw_matrix(path: &Path) -> Result<TwoQubitState> {
    parse_raw_matrix(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::basis_state;

    #[test]
    fn parses_row_major_interleaved() {
        let mut text = String::new();
        for i in 0..4 {
            for j in 0..4 {
                let re = if i == j { 0.25 } else { 0.0 };
                let im = if (i, j) == (0, 1) {
                    0.1
                } else if (i, j) == (1, 0) {
                    -0.1
                } else {
                    0.0
                };
                text.push_str(&format!("{re} {im}\n"));
            }
        }
        let rho = parse_raw_matrix(&text).unwrap();
        assert_eq!(rho.element(0, 1), Complex64::new(0.0, 0.1));
        assert_eq!(rho.element(1, 0), Complex64::new(0.0, -0.1));
    }

    #[test]
    fn pure_basis_state() {
        let mut values = vec!["0"; 32];
        values[2 * 15] = "1";
        assert_eq!(parse_raw_matrix(&values.join(" ")).unwrap(), basis_state(0, 0));
    }

    #[test]
    fn rejects_wrong_count_and_invalid_states() {
        assert!(matches!(parse_raw_matrix("1 0 0"), Err(Error::RawMatrix(_))));
        assert!(matches!(parse_raw_matrix(&vec!["0"; 32].join(" ")), Err(Error::TraceNotUnit(_))));
        assert!(parse_raw_matrix(&vec!["x"; 32].join(" ")).is_err());
    }
}
