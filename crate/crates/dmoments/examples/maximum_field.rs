//! The field strength that maximizes the electric dipole moment at fixed
//! kinetic energy, from the closed-form condition scale(B)² = ε²(2n+k+1)/(k+1)²,
//! cross-checked by a golden-section search over the closed form.
//!
//! Run with: cargo run --example maximum_field

use dmoments::constants::MagneticField;
use dmoments::landau::QuantumNumbers;
use dmoments::moments::{b_max, b_max_numeric, edm_closed, edm_curvature_at};

fn main() -> dmoments::Result<()> {
    let eps = 2.6e5; // eV

    println!(
        "{:>3} {:>3} {:>16} {:>16} {:>10} {:>16}",
        "n", "k", "b_max (T)", "argmax (T)", "rel diff", "p1(b_max) e.cm"
    );
    for (n, k) in [(0, 0), (1, 0), (0, 2), (3, 1)] {
        let qn = QuantumNumbers::new(n, k);
        let analytic = b_max(qn, eps)?;
        let numeric = b_max_numeric(qn, eps)?;
        let peak = edm_closed(qn, MagneticField::from_tesla(analytic)?, eps)?.value;
        println!(
            "{n:>3} {k:>3} {analytic:>16.6e} {numeric:>16.6e} {:>10.1e} {peak:>16.6e}",
            ((numeric - analytic) / analytic).abs()
        );
    }

    let qn = QuantumNumbers::new(0, 0);
    let bm = b_max(qn, eps)?;
    println!(
        "\ncurvature d²p1/dB² at the maximum: {:.3e} (negative, a true maximum)",
        edm_curvature_at(qn, bm, eps)?
    );
    println!("either side of b_max the moment falls off as sqrt(B) / 1/sqrt(B):");
    for factor in [0.01, 0.1, 1.0, 10.0, 100.0] {
        let b = bm * factor;
        let p = edm_closed(qn, MagneticField::from_tesla(b)?, eps)?.value;
        println!("  B = {:>10.3e} T:  p1 = {p:.6e} e.cm", b);
    }
    Ok(())
}
