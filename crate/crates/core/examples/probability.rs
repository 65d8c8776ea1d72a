//! Inner products and transition probabilities between spin states.
//!
//! Run with `cargo run --example probability`.

use num_complex::Complex64;
use sta::measurement::{
    braket, braket_components, braket_coordinates, family_probability, family_transition, volcano, Ket,
};
use sta::spinor::DiracSpinor;

fn main() -> sta::Result<()> {
    let c = Complex64::new;
    let a = DiracSpinor::new([c(1.0, 0.0), c(0.2, 0.1), c(0.0, 0.3), c(-0.1, 0.0)])?;
    let b = DiracSpinor::new([c(0.5, -0.5), c(0.1, 0.0), c(0.2, 0.2), c(0.0, 0.4)])?;
    println!("⟨Φ|Ω⟩ via the ideal       {}", braket(&Ket::new(&a), &Ket::new(&b)));
    println!("⟨Φ|Ω⟩ via the components  {}", braket_components(&a, &b));
    println!("⟨Φ|Ω⟩ via the coordinates {}", braket_coordinates(&a, &b));

    let (x, y) = ([1.0, 0.0], [0.0, 1.0]);
    let t = family_transition(x, 0.0, y, 0.0)?;
    println!("\nsame frame, x = {x:?}, y = {y:?}:");
    println!("  idempotent route {}  projective route {}  probability: {}", t.value, t.projective, t.is_probability);

    let p = family_probability([1.0, 0.0], 1.0, [1.0, 0.0], 2.0);
    println!("\nsame point, rapidities 1 and 2: {} (probability: {})", p.value, p.is_probability);
    for r in [0.0, 0.5, 1.0, 2.0, 5.0] {
        println!("  volcano at |x| = {r}: {:.9}", volcano([r, 0.0]));
    }
    Ok(())
}
