//! A transition-probability surface over the plane, written as CSV.
//!
//! Run with `cargo run --example grid > surface.csv`.

use sta::cli::{grid_rows, GridMode, GridSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = GridSpec {
        mode: GridMode::Fixed([1.0, 1.0]),
        phi_x: 0.0,
        phi_y: 0.0,
        x1_range: [-3.0, 3.0],
        x2_range: [-3.0, 3.0],
        steps: 13,
    };
    let rows = grid_rows(&spec);
    let mut out = csv::Writer::from_writer(std::io::stdout());
    for row in &rows {
        out.serialize(row)?;
    }
    out.flush()?;
    let best = rows.iter().max_by(|a, b| a.value.total_cmp(&b.value)).expect("grid is not empty");
    eprintln!("{} points, maximum {:.6} at ({}, {})", rows.len(), best.value, best.x1, best.x2);
    Ok(())
}
