//! Electric dipole moment of one state three ways: the closed form, the
//! independent density quadrature, and the in-regime reduced form.
//!
//! Run with: cargo run --example edm_point

use dmoments::constants::{MagneticField, M_E_C2_EV};
use dmoments::gordon::{polarization_quadrature, AngularConvention, QuadratureSettings};
use dmoments::landau::{build_state, QuantumNumbers};
use dmoments::moments::{edm_asymptotic_high, edm_closed, RegimeThresholds};

fn main() -> dmoments::Result<()> {
    // a cesium-flavoured benchmark point: eps = 2.6e5 eV, B = 1e-3 G
    let qn = QuantumNumbers::new(0, 0);
    let field = MagneticField::from_gauss(1e-3)?;
    let eps = 2.6e5;

    let closed = edm_closed(qn, field, eps)?;
    println!("closed form      p1 = {:.6e} e.cm   regime {}", closed.value, closed.regime.as_str());
    println!("                |p2| = {:.6e} e.cm   (p2 = i*p1)", closed.p2_magnitude());

    // independent route: integrate the polarization density of the state
    // with this kinetic energy
    let state = build_state(qn, field, M_E_C2_EV)?.with_epsilon(eps)?;
    let settings = QuadratureSettings::for_state(&state);
    let quad = polarization_quadrature(&state, &settings, AngularConvention::Deficit)?;
    println!(
        "quadrature        p1 = {quad:.6e} e.cm   (rel diff {:.2e})",
        (quad / closed.value - 1.0).abs()
    );

    // with the plain full-circle angular integral the moment vanishes
    let full = polarization_quadrature(&state, &settings, AngularConvention::FullCircle)?;
    println!("full circle       p1 = {full:.2e} e.cm   (axial symmetry)");

    // deep in the high-kinetic regime the reduced sqrt(B) form applies
    let reduced = edm_asymptotic_high(qn, field, eps, &RegimeThresholds::default())?;
    println!(
        "reduced (high)    p1 = {reduced:.6e} e.cm   (rel diff {:.2e})",
        (reduced / closed.value - 1.0).abs()
    );
    Ok(())
}
