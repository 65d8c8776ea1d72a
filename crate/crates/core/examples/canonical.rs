//! Canonical decomposition of the parity-invariant spinor part
//! `S_E = e^{ω1 + Jω2} (...)`, checked across all its equivalent forms.
//!
//! Run with `cargo run --example canonical`.

use num_complex::Complex64;
use sta::spinor::{canonical_se, DiracSpinor};

fn main() -> sta::Result<()> {
    let c = Complex64::new;
    let d = DiracSpinor::new([c(0.7, 0.2), c(-0.4, 0.1), c(0.2, 0.3), c(0.05, -0.25)])?;
    let cse = canonical_se(&d)?;
    println!("S_E = {}", cse.s_e);
    println!("ω1 = {}", cse.omega1);
    println!("ω2 = {}", cse.omega2);
    println!("M̂e3 = e^(I b̂ z): z = {}, b̂ = {}", cse.e_polar.z, cse.e_polar.b_hat);
    println!("âM̂ = e^(I b̂ z): z = {}, b̂ = {}", cse.a_polar.z, cse.a_polar.b_hat);
    for (k, form) in cse.forms()?.iter().enumerate() {
        println!("form {k}: error {:.2e}", form.dist(&cse.s_e));
    }
    println!("max residual {:.2e}", cse.max_residual()?);
    Ok(())
}
