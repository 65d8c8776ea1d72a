mod common;

use common::{coeff, complex, multivector};
use num_complex::Complex64;
use proptest::prelude::*;
use sta::algebra::{pauli_conjugations, Multivector, OmegaRingElement, PauliParts};

type Ring = OmegaRingElement;

fn ring() -> impl Strategy<Value = Ring> {
    (coeff(), coeff(), coeff(), coeff()).prop_map(|(a, b, c, d)| Ring::new(a, b, c, d))
}

/// A ring element away from the zero divisors: both `C ⊕ C` components
/// have modulus at least 0.2.
fn invertible_ring() -> impl Strategy<Value = Ring> {
    ring().prop_filter("near a zero divisor", |r| {
        let (p, q) = r.components();
        p.norm() > 0.2 && q.norm() > 0.2
    })
}

fn bivector() -> impl Strategy<Value = Multivector> {
    (prop::array::uniform6(complex()), 0.0..5.0f64).prop_map(|(c, norm)| {
        let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let b: Multivector = pairs
            .iter()
            .zip(c)
            .map(|(&(m, n), z)| Multivector::gamma(m) * Multivector::gamma(n) * z)
            .sum();
        let scale = if b.max_norm() > 0.0 { norm / b.max_norm() } else { 0.0 };
        b * scale
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn associative_and_distributive(a in multivector(), b in multivector(), c in multivector()) {
        prop_assert!(((a * b) * c).dist(&(a * (b * c))) < 1e-10);
        prop_assert!((a * (b + c)).dist(&(a * b + a * c)) < 1e-10);
        prop_assert!(((a + b) * c).dist(&(a * c + b * c)) < 1e-10);
    }

    #[test]
    fn conjugations_are_automorphisms_or_antiautomorphisms(a in multivector(), b in multivector()) {
        prop_assert!((a * b).reverse().dist(&(b.reverse() * a.reverse())) < 1e-12);
        prop_assert!((a * b).grade_involute().dist(&(a.grade_involute() * b.grade_involute())) < 1e-12);
        prop_assert!((a * b).complex_conjugate().dist(&(a.complex_conjugate() * b.complex_conjugate())) < 1e-12);
        prop_assert_eq!(a.reverse().reverse(), a);
    }

    #[test]
    fn grade_projections_partition(a in multivector()) {
        let parts: Vec<Multivector> = (0..=4).map(|k| a.grade(k)).collect();
        for (k, p) in parts.iter().enumerate() {
            prop_assert_eq!(p.grade(k as u32), *p);
        }
        let sum: Multivector = parts.into_iter().sum();
        prop_assert_eq!(sum, a);
    }

    #[test]
    fn ring_is_commutative_and_splits(r in ring(), s in ring()) {
        prop_assert!((r * s).dist(&(s * r)) < 1e-15);
        let (p, q) = r.components();
        let (p2, q2) = s.components();
        let (pp, qq) = (r * s).components();
        prop_assert!((pp - p * p2).norm() < 1e-14 && (qq - q * q2).norm() < 1e-14);
        prop_assert_eq!(r.inverse().is_ok(), !r.is_zero_divisor());
    }

    #[test]
    fn symmetric_and_antisymmetric_split_the_product(a in multivector(), b in multivector()) {
        prop_assert!((a.sym(&b) + a.antisym(&b)).dist(&(a * b)) < 1e-12);
        prop_assert!(a.sym(&b).dist(&b.sym(&a)) < 1e-12);
        prop_assert!(a.antisym(&b).dist(&-b.antisym(&a)) < 1e-12);
    }

    #[test]
    fn pseudoscalar_commutes_with_even_elements(a in multivector()) {
        let big_i = Multivector::pseudoscalar();
        let even = a.even();
        prop_assert!((big_i * even).dist(&(even * big_i)) < 1e-12);
        let odd = a.odd();
        prop_assert!((big_i * odd).dist(&-(odd * big_i)) < 1e-12);
    }

    #[test]
    fn pauli_conjugations_match_component_formulas(a in multivector()) {
        // For g = α + x + I y: g⁻ = α† − x + I y, g† = α† + x − I y,
        // g* = α − x − I y, with α† = a − b I.
        let g = a.even();
        let p = PauliParts::of(&g);
        prop_assert!(p.compose().dist(&g) < 1e-12);
        let big_i = Multivector::pseudoscalar();
        let alpha = p.alpha();
        let alpha_dag = Multivector::complex_scalar(p.a) - big_i * p.b;
        let (x, iy) = (p.x_vector(), big_i * p.y_vector());
        let (inv, dag, star) = pauli_conjugations(&g);
        prop_assert!(inv.dist(&(alpha_dag - x + iy)) < 1e-12);
        prop_assert!(dag.dist(&(alpha_dag + x - iy)) < 1e-12);
        prop_assert!(star.dist(&(alpha - x - iy)) < 1e-12);
    }

    #[test]
    fn exponential_of_negation_is_inverse(b in bivector()) {
        let product = b.exp().unwrap() * (-b).exp().unwrap();
        // The exponential grows like e^{|b|}; compare relative to that scale.
        let scale = b.exp().unwrap().max_norm().max(1.0).powi(2);
        prop_assert!(product.dist(&Multivector::one()) < 1e-10 * scale, "{product}");
    }

    #[test]
    fn ring_arithmetic_matches_embedding(r in ring(), s in ring(), x in coeff()) {
        let (rm, sm) = (r.to_multivector(), s.to_multivector());
        prop_assert!((r + s).to_multivector().dist(&(rm + sm)) < 1e-14);
        prop_assert!((r - s).to_multivector().dist(&(rm - sm)) < 1e-14);
        prop_assert!((r * s).to_multivector().dist(&(rm * sm)) < 1e-14);
        prop_assert!((r * x).to_multivector().dist(&(rm * x)) < 1e-14);
        prop_assert!(r.conj_i().to_multivector().dist(&rm.complex_conjugate()) < 1e-14);
        prop_assert!(r.exp().to_multivector().dist(&rm.exp().unwrap()) < 1e-12);
    }

    #[test]
    fn ring_inverse_sqrt_and_log(r in invertible_ring()) {
        let one = Ring::ONE;
        prop_assert!((r * r.inverse().unwrap()).dist(&one) < 1e-12);
        let root = r.sqrt().unwrap();
        prop_assert!((root * root).dist(&r) < 1e-12);
        prop_assert!(r.ln().unwrap().exp().dist(&r) < 1e-12);
        let inv_mv = r.to_multivector().inverse().unwrap();
        prop_assert!(inv_mv.dist(&r.inverse().unwrap().to_multivector()) < 1e-10);
    }

    #[test]
    fn ring_trigonometry(r in ring()) {
        let (c, s) = (r.cos(), r.sin());
        prop_assert!((c * c + s * s).dist(&Ring::ONE) < 1e-12);
    }

    #[test]
    fn inverse_through_matrix(a in multivector()) {
        if let Ok(inv) = a.inverse() {
            let scale = inv.max_norm().max(1.0) * a.max_norm().max(1.0);
            prop_assert!((a * inv).dist(&Multivector::one()) < 1e-10 * scale);
        }
    }
}

#[test]
fn zero_divisors_have_no_inverse() {
    let half = Ring::new(0.5, 0.0, 0.0, 0.0);
    let projector = half + Ring::J * 0.5;
    assert!(projector.inverse().is_err());
    assert!((projector * projector).dist(&projector) < 1e-15);
    assert!(projector.to_multivector().inverse().is_err());
}

#[test]
fn metric_signature_table() {
    for mu in 0..4u8 {
        for nu in 0..4u8 {
            let s = Multivector::gamma(mu).sym(&Multivector::gamma(nu));
            let expected = match (mu, nu) {
                (0, 0) => 1.0,
                (m, n) if m == n => -1.0,
                _ => 0.0,
            };
            assert_eq!(s, Multivector::complex_scalar(Complex64::new(expected, 0.0)));
        }
        let g = Multivector::gamma(mu);
        let big_i = Multivector::pseudoscalar();
        assert_eq!(big_i * g, -(g * big_i));
    }
}
