//! The Pauli algebra G3 as the even subalgebra, and its rest-frame
//! conjugations relative to `gamma_0`.

use num_complex::Complex64;

use super::multivector::Multivector;

/// `e_k = gamma_k gamma_0`.
pub fn pauli_embed(k: u8) -> Multivector {
    Multivector::e(k)
}

/// Rest-frame conjugations of `g`: inversion `g⁻ = γ0 g γ0`, reversion
/// `g† = γ0 g̃ γ0` and their composition `g* = g̃`. Coefficients are not
/// complex-conjugated.
pub fn pauli_conjugations(g: &Multivector) -> (Multivector, Multivector, Multivector) {
    let g0 = Multivector::gamma(0);
    let rev = g.reverse();
    (g0 * g * g0, g0 * rev * g0, rev)
}

pub fn pauli_inversion(g: &Multivector) -> Multivector {
    pauli_conjugations(g).0
}

pub fn pauli_dagger(g: &Multivector) -> Multivector {
    pauli_conjugations(g).1
}

/// `(g + g⁻ + g† + g*) / 4`. On the even subalgebra this keeps exactly the
/// complex scalar part.
pub fn four_conjugation_average(g: &Multivector) -> Multivector {
    let (inv, dag, star) = pauli_conjugations(g);
    (g + inv + dag + star) * 0.25
}

/// `g = α + x + I y` for even `g`, with `α = a + b I` and complex
/// coordinates on `e1, e2, e3`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PauliParts {
    pub a: Complex64,
    pub b: Complex64,
    pub x: [Complex64; 3],
    pub y: [Complex64; 3],
}

impl PauliParts {
    pub fn of(g: &Multivector) -> Self {
        let i = Multivector::pseudoscalar();
        let x = std::array::from_fn(|k| (g * Multivector::e(k as u8 + 1)).scalar_part());
        let y = std::array::from_fn(|k| -(g * i * Multivector::e(k as u8 + 1)).scalar_part());
        PauliParts { a: g.scalar_part(), b: g.pseudoscalar_part(), x, y }
    }

    pub fn alpha(&self) -> Multivector {
        Multivector::complex_scalar(self.a) + Multivector::pseudoscalar() * self.b
    }

    pub fn x_vector(&self) -> Multivector {
        (0..3).map(|k| Multivector::e(k as u8 + 1) * self.x[k]).sum()
    }

    pub fn y_vector(&self) -> Multivector {
        (0..3).map(|k| Multivector::e(k as u8 + 1) * self.y[k]).sum()
    }

    pub fn compose(&self) -> Multivector {
        self.alpha() + self.x_vector() + Multivector::pseudoscalar() * self.y_vector()
    }
}

/// Cross product of two G3 vectors, `a × b = -I (a ∧ b)`.
pub fn cross(a: &Multivector, b: &Multivector) -> Multivector {
    -(Multivector::pseudoscalar() * a.antisym(b))
}
