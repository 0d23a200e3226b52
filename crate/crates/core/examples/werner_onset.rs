// Copyright 2026 discord-dynamics Contributors
// SPDX-License-Identifier: Apache-2.0

//! Purity dependence at t = 0 and later: concurrence needs r > 1/3, discord
//! does not.

use discord_dynamics::{
    build_state, concurrence, quantum_discord, two_qubit_evolve, Family, ReservoirParams, StateFamily, Subsystem,
};

fn main() -> discord_dynamics::Result<()> {
    let params = ReservoirParams::from_ratio(0.1)?;
    let chi = params.chi(4.0)?;
    println!("family      r   C(0)     D(0)     C(4)     D(4)");
    for family in [Family::Phi, Family::Psi] {
        for r in [0.05, 0.2, 1.0 / 3.0, 0.4, 0.7, 1.0] {
            let rho = build_state(&StateFamily::new(family, 0.5, r)?);
            let later = two_qubit_evolve(&rho, chi, chi)?;
            println!(
                "{family:<6} {r:>6.3}  {:.4}  {:.4}  {:.4}  {:.4}",
                concurrence(&rho),
                quantum_discord(&rho, Subsystem::B),
                concurrence(&later),
                quantum_discord(&later, Subsystem::B),
            );
        }
    }
    Ok(())
}
