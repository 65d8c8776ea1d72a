//! Dirac spinors as even multivectors, their complex Riemann sphere state
//! and the boost that carries the rest state onto it.
//!
//! Run with `cargo run --example spinor`.

use num_complex::Complex64;
use sta::spinor::{
    boost_decompose, family_state, family_velocity, sphere_state, spinor_operator, substitution_vars, DiracSpinor,
};

fn main() -> sta::Result<()> {
    let c = Complex64::new;
    let d = DiracSpinor::new([c(0.9, 0.0), c(0.3, 0.2), c(-0.1, 0.4), c(0.2, -0.3)])?;
    let op = spinor_operator(&d);
    println!("φ = {d}");
    println!("ψ = {}", op.psi());
    println!("Ω0 = {}, Ω1 = {}", op.omega0(), op.omega1());
    let v = substitution_vars(&d);
    println!("x = {:?}\ny = {:?}", v.x, v.y);

    let s = sphere_state(&d)?;
    println!("\nλ = {}", s.lambda);
    println!("M = {}", s.m);
    println!("M² = {}", s.m_sq);
    println!("M̂ = {}", s.m_hat);
    println!("â = {}", s.a_hat);

    println!("\nfamily x = (1, 0.5) at rapidity 0.4:");
    let x = [1.0, 0.5];
    let st = family_state(x, 0.4)?;
    let b = boost_decompose(&st)?;
    println!("  m1 = {}, m2 = {}", b.m1, b.m2);
    println!("  boost rapidity φ = {:.6}, direction {}", b.phi, b.direction);
    println!("  v/c = {:.6} (tanh φ = {:.6})", family_velocity(x, 0.4), b.phi.tanh());
    println!("  M̂ rebuilt from the boost: error {:.2e}", b.m_hat().dist(&st.m_hat));
    Ok(())
}
