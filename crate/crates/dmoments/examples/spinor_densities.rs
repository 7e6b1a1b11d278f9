//! The spinor itself and the Gordon-decomposed densities built from it:
//! exact versus asymptotic components, the normalization integral, and the
//! pointwise polarization/magnetization values with their phase structure.
//!
//! Run with: cargo run --example spinor_densities

use std::f64::consts::PI;

use dmoments::constants::{MagneticField, M_E_C2_EV};
use dmoments::gordon::densities;
use dmoments::landau::{build_state, QuantumNumbers};

fn main() -> dmoments::Result<()> {
    let field = MagneticField::from_tesla(1e10)?;
    let state = build_state(QuantumNumbers::new(0, 2), field, M_E_C2_EV)?;

    println!("state (n=0, k=2) at B = 1e10 T:");
    println!("  N1/N2 = {:.6}, N2^2 = {:.6e}, delta = {}", state.n1_over_n2, state.n2_sq, state.delta);
    println!("  norm integral = {:.12} (defines N2^2)\n", state.norm_integral()?);

    // for n = 0 the exact profile already has the asymptotic shape
    println!("exact vs asymptotic |phi/chi| ratios:");
    for rho in [0.5, 2.0, 8.0] {
        let ex = state.spinor_exact(rho, 0.0, 0.0)?;
        let asym = state.spinor_asymptotic(rho, 0.0, 0.0)?;
        println!(
            "  rho = {rho:>4}: exact {:.8}, asymptotic {:.8}",
            ex.phi.norm() / ex.chi.norm(),
            asym.phi.norm() / asym.chi.norm()
        );
    }

    println!("\ndensities at rho = 2.0:");
    for theta in [0.0, PI / 4.0, PI / 2.0] {
        let d = densities(&state, 2.0, theta)?;
        println!(
            "  theta = {theta:>6.4}: P01 = {:>12.4e} {:+.1e}i, P02 = {:>9.1e} {:+.4e}i, M0 = {:.4e}",
            d.p01.re, d.p01.im, d.p02.re, d.p02.im, d.m0
        );
    }
    println!("\nP01 is real (~cos theta), P02 imaginary (~sin theta), M0 non-negative.");
    Ok(())
}
