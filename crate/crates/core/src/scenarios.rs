// Copyright 2026 discord-dynamics Contributors
// SPDX-License-Identifier: Apache-2.0

//! Extended Werner-like initial states and the parameter presets that
//! regenerate each published figure as sweep data.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, ZERO};
use crate::state::{DensityMatrix, Subsystem, TwoQubitState};
use crate::sweep::{Axis, AxisName, SweepConfig, TimeGrid};

/// Points per swept axis in the figure presets.
pub const DEFAULT_AXIS_POINTS: usize = 101;
/// Time points in the figure presets.
pub const DEFAULT_TIME_POINTS: usize = 1001;
pub const NON_MARKOVIAN_WINDOW: f64 = 25.0;
pub const MARKOVIAN_WINDOW: f64 = 20.0;

/// Which Bell-like vector the Werner mixture is built on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `α|10⟩ + √(1−α²)|01⟩`
    Phi,
    /// `α|00⟩ + √(1−α²)|11⟩`
    Psi,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Phi => "phi",
            Family::Psi => "psi",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "phi" => Ok(Family::Phi),
            "psi" => Ok(Family::Psi),
            other => Err(Error::InvalidState(format!("unknown state family {other:?}"))),
        }
    }
}

/// `r|ξ⟩⟨ξ| + (1−r)/4 · I` with `ξ` from `family` and real `α = √alpha_sq`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StateFamily {
    pub family: Family,
    pub alpha_sq: f64,
    pub r: f64,
}

impl StateFamily {
    pub fn new(family: Family, alpha_sq: f64, r: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&alpha_sq) {
            return Err(Error::InvalidState(format!("alpha^2 must lie in [0, 1], got {alpha_sq}")));
        }
        if !(0.0..=1.0).contains(&r) {
            return Err(Error::InvalidState(format!("r must lie in [0, 1], got {r}")));
        }
        Ok(Self { family, alpha_sq, r })
    }

    /// Amplitudes of the Bell-like vector in the `{|11⟩, |10⟩, |01⟩, |00⟩}` basis.
    pub fn bell_like_vector(&self) -> [Complex64; 4] {
        let alpha = Complex64::new(self.alpha_sq.sqrt(), 0.0);
        let beta = Complex64::new((1.0 - self.alpha_sq).sqrt(), 0.0);
        match self.family {
            Family::Phi => [ZERO, alpha, beta, ZERO],
            Family::Psi => [beta, ZERO, ZERO, alpha],
        }
    }
}

pub fn build_state(spec: &StateFamily) -> TwoQubitState {
    let pure = Matrix::projector(&spec.bell_like_vector());
    let noise = (1.0 - spec.r) / 4.0;
    let m = Matrix::from_fn(|i, j| {
        let diagonal = if i == j { noise } else { 0.0 };
        pure[(i, j)] * spec.r + diagonal
    });
    DensityMatrix::new(m).expect("Werner-like mixtures are valid states")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FigureId {
    Fig1,
    Fig2,
    Fig3a,
    Fig3b,
    Fig4,
    Fig5,
}

impl FigureId {
    pub const ALL: [FigureId; 6] =
        [FigureId::Fig1, FigureId::Fig2, FigureId::Fig3a, FigureId::Fig3b, FigureId::Fig4, FigureId::Fig5];

    pub fn name(self) -> &'static str {
        match self {
            FigureId::Fig1 => "fig1",
            FigureId::Fig2 => "fig2",
            FigureId::Fig3a => "fig3a",
            FigureId::Fig3b => "fig3b",
            FigureId::Fig4 => "fig4",
            FigureId::Fig5 => "fig5",
        }
    }
}

impl fmt::Display for FigureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FigureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FigureId::ALL
            .into_iter()
            .find(|id| id.name() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::UnknownPreset(s.to_string()))
    }
}

/// Parameters behind each figure. Output goes to `<figure>.csv` unless overridden.
pub fn figure_preset(id: FigureId) -> SweepConfig {
    let unit = |name| Axis::new(name, 0.0, 1.0, DEFAULT_AXIS_POINTS);
    let non_markovian = TimeGrid::new(NON_MARKOVIAN_WINDOW, DEFAULT_TIME_POINTS);
    let (families, alpha_sq, r, lambda_ratio, axes, time) = match id {
        FigureId::Fig1 => (
            vec![Family::Psi],
            0.5,
            1.0,
            10.0,
            vec![unit(AxisName::AlphaSq)],
            TimeGrid::new(MARKOVIAN_WINDOW, DEFAULT_TIME_POINTS),
        ),
        FigureId::Fig2 => (vec![Family::Psi], 0.5, 1.0, 0.1, vec![unit(AxisName::AlphaSq)], non_markovian),
        // Fig. 3 shows a handful of curves rather than a surface.
        FigureId::Fig3a => {
            (vec![Family::Psi], 0.5, 1.0, 0.1, vec![Axis::new(AxisName::AlphaSq, 0.0, 1.0, 11)], non_markovian)
        }
        FigureId::Fig3b => {
            (vec![Family::Psi], 0.5, 1.0, 0.1, vec![Axis::new(AxisName::R, 0.0, 1.0, 11)], non_markovian)
        }
        FigureId::Fig4 => (vec![Family::Phi, Family::Psi], 0.5, 1.0, 0.1, vec![unit(AxisName::R)], non_markovian),
        FigureId::Fig5 => (
            vec![Family::Psi],
            1.0 / 3.0,
            1.0,
            0.1,
            vec![Axis::new(AxisName::LambdaRatio, 0.05, 1.0, DEFAULT_AXIS_POINTS)],
            non_markovian,
        ),
    };
    SweepConfig {
        families,
        alpha_sq,
        r,
        lambda_ratio,
        axes,
        time,
        measured: Subsystem::B,
        output: PathBuf::from(format!("{}.csv", id.name())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::Subsystem;

    fn swap_qubits(rho: &TwoQubitState) -> crate::linalg::Matrix4 {
        // |ab⟩ ↔ |ba⟩ exchanges indices 1 and 2.
        let perm = [0, 2, 1, 3];
        Matrix::from_fn(|i, j| rho.element(perm[i], perm[j]))
    }

    #[test]
    fn bell_state_corners() {
        let rho = build_state(&StateFamily::new(Family::Psi, 0.5, 1.0).unwrap());
        for (i, j) in [(0, 0), (0, 3), (3, 0), (3, 3)] {
            assert!((rho.element(i, j).re - 0.5).abs() < 1e-15);
        }
        assert!(rho.element(1, 1).norm() < 1e-15);
    }

    #[test]
    fn zero_purity_is_maximally_mixed() {
        for family in [Family::Phi, Family::Psi] {
            for alpha_sq in [0.0, 0.3, 1.0] {
                let rho = build_state(&StateFamily::new(family, alpha_sq, 0.0).unwrap());
                assert_eq!(rho, TwoQubitState::maximally_mixed());
            }
        }
    }

    #[test]
    fn phi_mixture_entrywise() {
        let spec = StateFamily::new(Family::Phi, 1.0 / 3.0, 0.5).unwrap();
        let rho = build_state(&spec);
        let v = spec.bell_like_vector();
        for i in 0..4 {
            for j in 0..4 {
                let expected = 0.5 * v[i] * v[j].conj() + if i == j { 0.125 } else { 0.0 };
                assert!((rho.element(i, j) - expected).norm() < 1e-15);
            }
        }
        // |Φ⟩ lives on |10⟩ (index 1) and |01⟩ (index 2)
        assert!((v[1].re - (1.0f64 / 3.0).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn linear_in_purity() {
        for family in [Family::Phi, Family::Psi] {
            let at = |r| build_state(&StateFamily::new(family, 0.3, r).unwrap());
            let r = 0.37;
            let mix = at(1.0).matrix().scale(r) + at(0.0).matrix().scale(1.0 - r);
            assert!(at(r).matrix().max_abs_diff(&mix) < 1e-15);
        }
    }

    #[test]
    fn balanced_states_are_swap_symmetric() {
        for family in [Family::Phi, Family::Psi] {
            let rho = build_state(&StateFamily::new(family, 0.5, 0.8).unwrap());
            assert!(swap_qubits(&rho).max_abs_diff(rho.matrix()) < 1e-15);
        }
    }

    #[test]
    fn rejects_out_of_range_parameters() {
        assert!(StateFamily::new(Family::Psi, 1.2, 0.5).is_err());
        assert!(StateFamily::new(Family::Psi, 0.5, -0.1).is_err());
        assert!("chi".parse::<Family>().is_err());
        assert!(matches!("fig9".parse::<FigureId>(), Err(Error::UnknownPreset(_))));
    }

    #[test]
    fn presets_follow_captions() {
        let fig1 = figure_preset(FigureId::Fig1);
        assert_eq!(fig1.lambda_ratio, 10.0);
        assert_eq!(fig1.time.t_max, 20.0);

        let fig2 = figure_preset(FigureId::Fig2);
        assert_eq!(fig2.families, vec![Family::Psi]);
        assert_eq!(fig2.lambda_ratio, 0.1);
        assert_eq!(fig2.axes[0].name, AxisName::AlphaSq);
        assert_eq!((fig2.axes[0].min, fig2.axes[0].max), (0.0, 1.0));
        assert_eq!(fig2.time.t_max, 25.0);

        let fig4 = figure_preset(FigureId::Fig4);
        assert_eq!(fig4.alpha_sq, 0.5);
        assert_eq!(fig4.lambda_ratio, 0.1);
        assert_eq!(fig4.axes[0].name, AxisName::R);
        assert_eq!(fig4.families, vec![Family::Phi, Family::Psi]);

        let fig5 = figure_preset(FigureId::Fig5);
        assert_eq!(fig5.r, 1.0);
        assert!((fig5.alpha_sq - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(fig5.axes[0].name, AxisName::LambdaRatio);
        assert_eq!((fig5.axes[0].min, fig5.axes[0].max), (0.05, 1.0));

        for id in FigureId::ALL {
            let preset = figure_preset(id);
            assert_eq!(preset.measured, Subsystem::B);
            preset.validate().unwrap();
            assert_eq!(id.name().parse::<FigureId>().unwrap(), id);
        }
    }
}
