//! The spectral-basis matrix representation: gamma matrices, the primitive
//! idempotents and determinants of spinor operators.
//!
//! Run with `cargo run --example matrix`.

use num_complex::Complex64;
use sta::algebra::Multivector;
use sta::matrix::{det4, det_omega, from_matrix, omega_matrix, to_matrix, IdempotentSet};
use sta::spinor::{odd_operator, spinor_operator, DiracSpinor};

fn main() -> sta::Result<()> {
    for mu in 0..4 {
        println!("[γ{mu}] =\n{}", to_matrix(&Multivector::gamma(mu)));
    }

    let u = IdempotentSet::new();
    for (name, p) in ["u++", "u+-", "u-+", "u--"].iter().zip(u.primitives()) {
        println!("{name} = {p}  ->  diag {:?}", to_matrix(&p).entries.iter().enumerate().map(|(i, r)| r[i].re).collect::<Vec<_>>());
    }

    let c = Complex64::new;
    let d = DiracSpinor::new([c(0.8, 0.1), c(-0.2, 0.4), c(0.3, -0.5), c(0.1, 0.2)])?;
    let op = spinor_operator(&d);
    let m = to_matrix(op.psi());
    println!("\nψ for φ = {d}:\n{m}");
    println!("det[ψ]      = {:.12}", det4(&m));
    println!("det[ψ odd]  = {:.12}", det4(&to_matrix(&odd_operator(&d))));
    println!("det[Ω]      = {}", det_omega(&op));
    println!("|det[Ω]|²   = {:.12}", det_omega(&op).scalar.powi(2) + det_omega(&op).pseudo.powi(2));
    println!("Ω matrix    =\n{}", omega_matrix(&op));
    println!("round trip error {:.2e}", from_matrix(&m).dist(op.psi()));
    Ok(())
}
