//! Bilinear observables of a Dirac spinor and the Fierz identities they obey.
//!
//! Run with `cargo run --example fierz`.

use num_complex::Complex64;
use sta::fierz::{fierz_check, observables, regularity};
use sta::spinor::{spinor_operator, DiracSpinor};

fn main() -> sta::Result<()> {
    let c = Complex64::new;
    let spinors = [
        ("regular", DiracSpinor::new([c(0.8, 0.1), c(0.3, -0.2), c(0.1, 0.4), c(-0.2, 0.1)])?),
        ("singular", DiracSpinor::new([c(0.6, 0.2), c(-0.3, 0.5), c(0.6, 0.2), c(-0.3, 0.5)])?),
    ];
    for (label, d) in spinors {
        let op = spinor_operator(&d);
        let obs = observables(&op);
        println!("{label} spinor φ = {d}");
        println!("  J = {}", obs.j);
        println!("  K = {}", obs.k);
        println!("  S = {}", obs.s);
        println!("  R = {}", obs.r);
        let reg = regularity(&op);
        println!("  class {} (|det Ω| = {:.3e}), vanishing: {}", reg.class, reg.det_magnitude, reg.vanishing);
        println!("{}", fierz_check(&obs));
    }
    Ok(())
}
