//! Geometric products, conjugations and the commutative ring span{1, i, I, iI}.
//!
//! Run with `cargo run --example algebra`.

use sta::algebra::Multivector;
use sta::OmegaRingElement;

fn main() -> sta::Result<()> {
    let g = Multivector::gamma;
    let big_i = Multivector::pseudoscalar();

    println!("metric γμ·γν:");
    for mu in 0..4 {
        let row: Vec<String> = (0..4).map(|nu| format!("{:>4}", g(mu).sym(&g(nu)).to_string())).collect();
        println!("  {}", row.join(""));
    }
    println!("I = γ0γ1γ2γ3 = {}", g(0) * g(1) * g(2) * g(3));
    println!("I² = {}", big_i * big_i);
    println!("e1 = γ1γ0 = {}, e1e2e3 = {}", Multivector::e(1), Multivector::e(1) * Multivector::e(2) * Multivector::e(3));

    let v = g(0) * 2.0 + g(1) - g(3) * 0.5;
    println!("\nv = {v}");
    println!("v² = {}", v * v);
    println!("v⁻¹ = {}", v.inverse()?);

    let b = g(0) * g(1) * 0.75;
    let boost = b.exp()?;
    println!("\nexp(0.75 γ0γ1) = {boost}");
    println!("reverse, involute: {} | {}", boost.reverse(), boost.grade_involute());
    println!("boost γ0 boost~ = {}", boost * g(0) * boost.reverse());

    let z = OmegaRingElement::new(1.0, 0.5, -0.25, 2.0);
    let w = z.sqrt()?;
    println!("\nring element z = {z}");
    println!("√z = {w}, (√z)² = {}", w * w);
    println!("ln(exp z) = {}", z.exp().ln()?);
    let zero_divisor = (Multivector::one() + g(0)) * 0.5;
    match zero_divisor.inverse() {
        Ok(_) => println!("(1 + γ0)/2 unexpectedly inverted"),
        Err(e) => println!("(1 + γ0)/2 has no inverse: {e}"),
    }
    Ok(())
}
