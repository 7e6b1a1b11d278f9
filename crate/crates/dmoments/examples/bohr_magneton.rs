//! The magnetic dipole moment from the magnetization density. In the
//! weak-field limit the integral is exactly the Bohr magneton; at finite
//! field it carries the ratio (A + 2δ(2δ+1))/(A + 2δ), checked here against
//! adaptive quadrature.
//!
//! Run with: cargo run --example bohr_magneton

use dmoments::constants::{MagneticField, M_E_C2_EV, MU_B_J_PER_T};
use dmoments::gordon::{magnetization_quadrature, magnetization_ratio_closed, QuadratureSettings};
use dmoments::landau::{build_state, QuantumNumbers};
use dmoments::moments::mdm_closed;

fn main() -> dmoments::Result<()> {
    println!("closed-form MDM: mu_B = {:.10e} J/T\n", mdm_closed());

    println!(
        "{:>10} {:>14} {:>22} {:>22} {:>10}",
        "B (T)", "A weight", "quadrature (J/T)", "ratio to mu_B", "rel diff"
    );
    for b in [1e-10, 1e-2, 1.0, 1e8, 1e10] {
        let state = build_state(QuantumNumbers::new(0, 0), MagneticField::from_tesla(b)?, M_E_C2_EV)?;
        let settings = QuadratureSettings::for_state(&state).with_rel_tol(1e-12);
        let quad = magnetization_quadrature(&state, &settings)?;
        let ratio = magnetization_ratio_closed(&state);
        println!(
            "{b:>10.0e} {:>14.4e} {quad:>22.12e} {ratio:>22.12} {:>10.1e}",
            state.a_weight(),
            (quad / (MU_B_J_PER_T * ratio) - 1.0).abs()
        );
    }
    println!("\nweak fields recover the Bohr magneton; strong fields are bounded by 2*delta + 1.");
    Ok(())
}
