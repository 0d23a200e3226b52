// Copyright 2026 discord-dynamics Contributors
// SPDX-License-Identifier: Apache-2.0

//! The amplitude-damping channel on one and two qubits.

use num_complex::Complex64;

use discord_dynamics::state::basis_state;
use discord_dynamics::{
    amplitude_damping_kraus, partial_trace, single_qubit_evolve, two_qubit_evolve, DensityMatrix, Subsystem,
};

fn main() -> discord_dynamics::Result<()> {
    let chi = 0.6;
    let kraus = amplitude_damping_kraus(chi)?;
    for (name, k) in [("k0", kraus.k0), ("k1", kraus.k1)] {
        println!("{name} = {:?}", k.0.map(|row| row.map(|z| z.re)));
    }
    println!("completeness defect: {:.1e}", kraus.completeness_defect());

    // |+⟩ = (|1⟩ + |0⟩)/√2: coherences shrink by χ, the excited population by χ².
    let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let plus = DensityMatrix::pure([h, h])?;
    let damped = single_qubit_evolve(&plus, chi)?;
    println!("damped |+>: excited population {:.4}, coherence {:.4}", damped.element(0, 0).re, damped.element(0, 1).re);

    // Both qubits excited; each decays on its own.
    let both = two_qubit_evolve(&basis_state(1, 1), chi, 0.3)?;
    println!("|11> populations after damping: {:.4?}", (0..4).map(|i| both.element(i, i).re).collect::<Vec<_>>());
    let a = partial_trace(&both, Subsystem::A);
    println!("qubit A excited population {:.4} = chi_a^2", a.element(0, 0).re);
    Ok(())
}
