//! Electric dipole moment versus kinetic energy at fixed field
//! (B = 1e-10 T, eps from 1e-14 J to 10^-12.5 J expressed in eV). Deep in
//! the high-kinetic regime the moment falls off like 1/eps. Writes
//! kinetic_sweep.csv and kinetic_sweep.svg.
//!
//! Run with: cargo run --example kinetic_energy_sweep

use std::fs;

use dmoments::sweep::{render_svg, run, write_csv, SweepSpec};

fn main() -> dmoments::Result<()> {
    let spec = SweepSpec::from_json(include_str!("data/kinetic_sweep.json"))?;
    let rows = run(&spec)?;

    let mut csv = Vec::new();
    write_csv(&rows, &mut csv)?;
    fs::write("kinetic_sweep.csv", csv)?;
    fs::write("kinetic_sweep.svg", render_svg(&rows, &spec))?;

    let first = rows.first().unwrap();
    let last = rows.last().unwrap();
    println!("{} rows written to kinetic_sweep.csv (+ kinetic_sweep.svg)", rows.len());
    println!(
        "p1(eps = {:.3e} eV) = {:.4e} e.cm   ->   p1(eps = {:.3e} eV) = {:.4e} e.cm",
        first.epsilon_ev, first.value, last.epsilon_ev, last.value
    );
    println!(
        "decay factor {:.3} vs 1/eps prediction {:.3}",
        first.value / last.value,
        last.epsilon_ev / first.epsilon_ev
    );
    Ok(())
}
