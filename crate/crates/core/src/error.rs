// Copyright 2026 discord-dynamics Contributors
// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid reservoir parameters: {0}")]
    InvalidParams(String),

    #[error("time must be nonnegative, got {0}")]
    NegativeTime(f64),

    #[error("chi has no positive zeros in the Markovian regime (lambda/gamma0 = {0})")]
    NoZeros(f64),

    #[error("|chi| must not exceed 1, got {0}")]
    ChiOutOfRange(f64),

    #[error("matrix is not Hermitian (max deviation {0:e})")]
    NotHermitian(f64),

    #[error("trace must be 1, got {0}")]
    TraceNotUnit(f64),

    #[error("matrix is not positive semidefinite (min eigenvalue {0:e})")]
    NotPositive(f64),

    #[error("invalid time grid: {0}")]
    InvalidGrid(String),

    #[error("no discord zero found in the window, so there is no revival")]
    NoRevival,

    #[error("unknown figure preset {0:?}")]
    UnknownPreset(String),

    #[error("invalid sweep configuration: {0}")]
    InvalidConfig(String),

    #[error("invalid state parameters: {0}")]
    InvalidState(String),

    #[error("malformed raw matrix: {0}")]
    RawMatrix(String),

    #[error("malformed CSV: {0}")]
    Csv(String),

    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
