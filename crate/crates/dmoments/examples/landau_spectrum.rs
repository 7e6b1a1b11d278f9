//! Relativistic Landau levels of an electron in a constant magnetic field:
//! the spectrum E² = (m_e c²)² + scale²·(n+k+1), its degeneracy in n+k, and
//! the per-state data the rest of the crate builds on.
//!
//! Run with: cargo run --example landau_spectrum

use dmoments::constants::{MagneticField, M_E_C2_EV};
use dmoments::landau::{build_state, energy_ev, QuantumNumbers};

fn main() -> dmoments::Result<()> {
    let field = MagneticField::from_tesla(1e10)?;
    println!(
        "B = {:.1e} T, magnetic energy scale = {:.4} eV, m_e c^2 = {M_E_C2_EV} eV\n",
        field.tesla(),
        field.scale_ev()
    );

    println!("{:>3} {:>3} {:>18} {:>14} {:>8}", "n", "k", "E (eV)", "eps (eV)", "delta");
    for (n, k) in [(0, 0), (0, 1), (1, 0), (2, 3), (5, 2)] {
        let state = build_state(QuantumNumbers::new(n, k), field, M_E_C2_EV)?;
        println!(
            "{n:>3} {k:>3} {:>18.6e} {:>14.6e} {:>8.1}",
            state.energy_ev, state.epsilon_ev, state.delta
        );
    }

    // the energy depends on (n, k) only through n + k + 1
    println!("\ndegeneracy at n + k = 3:");
    for n in 0..=3u32 {
        let qn = QuantumNumbers::new(n, 3 - n);
        println!(
            "  (n={}, k={})  E = {:.10e} eV",
            qn.n,
            qn.k,
            energy_ev(qn, field, M_E_C2_EV)
        );
    }

    // zero field is allowed in spectrum queries and returns the rest energy
    let rest = energy_ev(QuantumNumbers::new(0, 0), MagneticField::from_tesla(0.0)?, M_E_C2_EV);
    println!("\nB = 0 limit: E = {rest} eV");
    Ok(())
}
