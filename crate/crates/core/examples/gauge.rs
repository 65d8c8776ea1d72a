//! Gauge freedom `e^{Iθ + Jφ}` of E-spinors and the normalization that makes
//! `det[Ω]` real.
//!
//! Run with `cargo run --example gauge`.

use num_complex::Complex64;
use sta::measurement::{gauge_normalize, gauge_transform, is_physical, EKet, GaugeParams};
use sta::spinor::{sphere_state, DiracSpinor};

fn main() -> sta::Result<()> {
    let c = Complex64::new;
    let d = DiracSpinor::new([c(0.6, 0.3), c(0.2, -0.1), c(-0.3, 0.2), c(0.1, 0.1)])?;
    let k = EKet::from_spinor(&d);
    println!("det[Ω] = {}", k.det());
    println!("physical: {}", is_physical(&k));

    let (n, g) = gauge_normalize(&k)?;
    println!("\nnormalizing gauge θ = {:.6}, φ = {:.6}", g.theta, g.phi);
    println!("det[Ω] after = {}", n.det());

    let moved = gauge_transform(&k, GaugeParams { theta: 0.8, phi: -0.3 });
    let (before, after) = (sphere_state(&d)?, sphere_state(&moved.spinor())?);
    println!("\nâ before gauge = {}", before.a_hat);
    println!("â after gauge  = {}", after.a_hat);
    println!("difference {:.2e}", before.a_hat.dist(&after.a_hat));
    Ok(())
}
