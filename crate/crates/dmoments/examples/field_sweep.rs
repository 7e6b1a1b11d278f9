//! Electric dipole moment versus field strength at fixed kinetic energy
//! (eps = 2.6e5 eV, B from 1 nT to 0.4 µT — the weak-field regime where the
//! moment grows like √B). Writes field_sweep.csv and field_sweep.svg.
//!
//! Run with: cargo run --example field_sweep

use std::fs;

use dmoments::sweep::{render_svg, run, write_csv, SweepSpec};

fn main() -> dmoments::Result<()> {
    let spec = SweepSpec::from_json(include_str!("data/field_sweep.json"))?;
    let rows = run(&spec)?;

    let mut csv = Vec::new();
    write_csv(&rows, &mut csv)?;
    fs::write("field_sweep.csv", csv)?;
    fs::write("field_sweep.svg", render_svg(&rows, &spec))?;

    let first = rows.first().unwrap();
    let last = rows.last().unwrap();
    println!("{} rows written to field_sweep.csv (+ field_sweep.svg)", rows.len());
    println!(
        "p1({:.1e} T) = {:.4e} e.cm   ->   p1({:.1e} T) = {:.4e} e.cm",
        first.b_tesla, first.value, last.b_tesla, last.value
    );
    println!(
        "growth factor {:.3} vs sqrt(B) prediction {:.3}",
        last.value / first.value,
        (last.b_tesla / first.b_tesla).sqrt()
    );
    Ok(())
}
