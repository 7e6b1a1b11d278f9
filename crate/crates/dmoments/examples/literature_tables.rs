//! The embedded literature comparison tables: published eEDM values next to
//! this crate's n = k = 0 closed form. The publication behind the tables
//! does not state its quantum numbers, so the ratios are informational.
//!
//! Run with: cargo run --example literature_tables

use dmoments::report::{compare, format_table};

fn main() -> dmoments::Result<()> {
    for table in [1, 2] {
        println!("table {table}:");
        print!("{}", format_table(&compare(table)?));
        println!();
    }
    Ok(())
}
