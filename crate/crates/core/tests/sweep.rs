// Copyright 2026 discord-dynamics Contributors
// SPDX-License-Identifier: Apache-2.0

use discord_dynamics::correlations::{concurrence, mutual_information};
use discord_dynamics::sweep::{
    detect_discord_zeros, detect_esd, read_csv, render_sweep, revival_amplitude, sweep_rows, Axis, AxisName, TimeGrid,
    CSV_HEADER, DISCORD_ZERO_THRESHOLD, ESD_DWELL_WINDOW, ESD_THRESHOLD,
};
use discord_dynamics::{
    build_state, evolve_trajectory, figure_preset, quantum_discord, run_sweep, Error, Family, FigureId,
    ReservoirParams, StateFamily, Subsystem,
};

fn small(id: FigureId, axis_points: usize, time_points: usize) -> discord_dynamics::SweepConfig {
    let mut config = figure_preset(id);
    config.axes.iter_mut().for_each(|a| a.count = axis_points);
    config.time.points = time_points;
    config
}

fn series(family: Family, alpha_sq: f64, ratio: f64, grid: &TimeGrid) -> Vec<discord_dynamics::CorrelationRecord> {
    let spec = StateFamily::new(family, alpha_sq, 1.0).unwrap();
    evolve_trajectory(&spec, &ReservoirParams::from_ratio(ratio).unwrap(), &grid.times(), Subsystem::B).unwrap()
}

#[test]
fn fig2_on_an_11_by_11_grid_has_121_rows() {
    let bytes = render_sweep(&small(FigureId::Fig2, 11, 11), Family::Psi).unwrap();
    let text = String::from_utf8(bytes).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some(CSV_HEADER));
    assert_eq!(lines.count(), 121);
    assert!(!text.contains('\r'));
}

#[test]
fn rows_are_axis_major_then_time() {
    let rows = sweep_rows(&small(FigureId::Fig2, 3, 4), Family::Psi).unwrap();
    let keys: Vec<(f64, f64)> = rows.iter().map(|r| (r.alpha_sq, r.record.t)).collect();
    let mut sorted = keys.clone();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    assert_eq!(keys, sorted);
    assert_eq!(rows[0].alpha_sq, 0.0);
    assert_eq!(rows.last().unwrap().alpha_sq, 1.0);
}

#[test]
fn output_is_independent_of_thread_count() {
    let config = small(FigureId::Fig5, 4, 21);
    let pool = |n| rayon::ThreadPoolBuilder::new().num_threads(n).build().unwrap();
    let single = pool(1).install(|| render_sweep(&config, Family::Psi).unwrap());
    let many = pool(4).install(|| render_sweep(&config, Family::Psi).unwrap());
    assert_eq!(single, many);
    assert_eq!(single, render_sweep(&config.clone(), Family::Psi).unwrap());
}

#[test]
fn written_csv_reads_back() {
    let dir = tempfile::tempdir().unwrap();
    let mut config = small(FigureId::Fig3b, 3, 15);
    config.output = dir.path().join("nested").join("fig3b.csv");
    let paths = run_sweep(&config).unwrap();
    assert_eq!(paths, vec![config.output.clone()]);

    let parsed = read_csv(&std::fs::read_to_string(&paths[0]).unwrap()).unwrap();
    let expected = sweep_rows(&config, Family::Psi).unwrap();
    assert_eq!(parsed.len(), expected.len());
    for (a, b) in parsed.iter().zip(&expected) {
        assert!((a.record.discord - b.record.discord).abs() <= 1e-12);
        assert!((a.chi - b.chi).abs() <= 1e-12);
        assert!((a.record.argmax_basis.phi() - b.record.argmax_basis.phi()).abs() <= 1e-12);
    }
}

#[test]
fn two_family_preset_writes_one_file_each() {
    let dir = tempfile::tempdir().unwrap();
    let mut config = small(FigureId::Fig4, 3, 3);
    config.output = dir.path().join("fig4.csv");
    let paths = run_sweep(&config).unwrap();
    let names: Vec<_> = paths.iter().map(|p| p.file_name().unwrap().to_str().unwrap().to_owned()).collect();
    assert_eq!(names, ["fig4_phi.csv", "fig4_psi.csv"]);
    assert_ne!(std::fs::read(&paths[0]).unwrap(), std::fs::read(&paths[1]).unwrap());
}

#[test]
fn invalid_configs_are_rejected() {
    let mut config = small(FigureId::Fig2, 1, 11);
    assert!(matches!(run_sweep(&config), Err(Error::InvalidConfig(_))));
    config.axes[0].count = 3;
    config.time.t_max = 0.0;
    assert!(matches!(run_sweep(&config), Err(Error::InvalidConfig(_))));
    config.time.t_max = 1.0;
    config.axes.push(Axis::new(AxisName::AlphaSq, 0.0, 1.0, 2));
    assert!(matches!(run_sweep(&config), Err(Error::InvalidConfig(_))));
    config.axes.pop();
    config.axes[0] = Axis::new(AxisName::AlphaSq, 0.0, 1.5, 3);
    assert!(run_sweep(&config).is_err());
}

#[test]
fn unwritable_output_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("file");
    std::fs::write(&blocker, b"").unwrap();
    let mut config = small(FigureId::Fig2, 2, 2);
    config.output = blocker.join("out.csv");
    assert!(matches!(run_sweep(&config), Err(Error::Write { .. })));
}

#[test]
fn sudden_death_is_confined_below_one_half() {
    let grid = TimeGrid::new(20.0, 201);
    let alphas: Vec<f64> = (0..=20).map(|i| i as f64 / 20.0).collect();
    let reports: Vec<_> = alphas
        .iter()
        .map(|&a| {
            let s = series(Family::Psi, a, 10.0, &grid);
            (s[0].concurrence, detect_esd(&s, ESD_THRESHOLD, ESD_DWELL_WINDOW).esd_time)
        })
        .collect();
    // α² = 0 and 1 are product states: separable from the start.
    assert_eq!(reports[0].1, Some(0.0));
    assert_eq!(reports[20].1, Some(0.0));

    let dies: Vec<bool> = reports[1..20]
        .iter()
        .map(|&(c0, esd)| {
            assert!(c0 > 0.0);
            esd.is_some()
        })
        .collect();
    let entangled = &alphas[1..20];
    let last_dying = dies.iter().rposition(|&d| d).unwrap();
    assert!(dies[..=last_dying].iter().all(|&d| d), "{dies:?}");
    assert!(dies[last_dying + 1..].iter().all(|&d| !d), "{dies:?}");
    assert!((entangled[last_dying] - 0.5).abs() <= 0.05, "{dies:?}");
}

#[test]
fn discord_zeros_sit_on_the_zeros_of_chi() {
    let grid = TimeGrid::new(25.0, 1001);
    for (family, alpha_sq, ratio) in
        [(Family::Psi, 0.5, 0.1), (Family::Psi, 0.8, 0.3), (Family::Phi, 0.3, 1.0), (Family::Psi, 1.0 / 3.0, 0.05)]
    {
        let params = ReservoirParams::from_ratio(ratio).unwrap();
        let chi_zeros = params.chi_zeros(5).unwrap();
        let found = detect_discord_zeros(&series(family, alpha_sq, ratio, &grid), DISCORD_ZERO_THRESHOLD);
        assert!(!found.is_empty(), "{family} {alpha_sq} {ratio}");
        for t in found {
            let nearest = chi_zeros.iter().map(|z| (z - t).abs()).fold(f64::INFINITY, f64::min);
            assert!(nearest <= grid.step(), "{family} {alpha_sq} {ratio}: {t} is {nearest} from a zero of chi");
        }
    }
}

#[test]
fn markovian_discord_has_no_zeros_or_revival() {
    let s = series(Family::Psi, 0.5, 10.0, &TimeGrid::new(20.0, 501));
    assert!(detect_discord_zeros(&s, DISCORD_ZERO_THRESHOLD).is_empty());
    assert!(matches!(revival_amplitude(&s), Err(Error::NoRevival)));
}

#[test]
fn truncated_before_the_first_zero_has_no_revival() {
    let s = series(Family::Psi, 1.0 / 3.0, 0.1, &TimeGrid::new(8.0, 321));
    assert!(matches!(revival_amplitude(&s), Err(Error::NoRevival)));
}

#[test]
fn state_collapses_to_ground_at_first_zero() {
    let params = ReservoirParams::from_ratio(0.1).unwrap();
    let t1 = params.chi_zeros(1).unwrap()[0];
    let spec = StateFamily::new(Family::Psi, 0.5, 1.0).unwrap();
    let record = evolve_trajectory(&spec, &params, &[t1], Subsystem::B).unwrap()[0];
    assert!(record.concurrence < 1e-6);
    assert!(record.discord.abs() < 1e-6);
}

#[test]
fn first_record_matches_static_measures() {
    for family in [Family::Phi, Family::Psi] {
        let spec = StateFamily::new(family, 0.3, 0.7).unwrap();
        let rho = build_state(&spec);
        let record =
            evolve_trajectory(&spec, &ReservoirParams::from_ratio(0.5).unwrap(), &[0.0], Subsystem::B).unwrap()[0];
        assert_eq!(record.concurrence, concurrence(&rho));
        assert_eq!(record.mutual_info, mutual_information(&rho));
        assert_eq!(record.discord, quantum_discord(&rho, Subsystem::B));
    }
}

#[test]
fn markovian_sudden_death_keeps_discord_positive() {
    let s = series(Family::Psi, 0.25, 10.0, &TimeGrid::new(20.0, 401));
    let esd = detect_esd(&s, ESD_THRESHOLD, ESD_DWELL_WINDOW).esd_time.unwrap();
    assert!(s.iter().filter(|r| r.t >= esd).all(|r| r.concurrence == 0.0));
    assert!(s.iter().filter(|r| r.t < 10.0).all(|r| r.discord > 0.0));
}
