use std::fmt;

use num_complex::Complex64;

use crate::algebra::{pauli_dagger, Multivector, OmegaRingElement};
use crate::error::{Error, Result};
use crate::matrix::{e3_complex, to_matrix, u_pp};

type Ring = OmegaRingElement;

/// Tolerance for deciding that an input is a real even element.
const STRUCTURE_TOL: f64 = 1e-10;

/// A four-component complex column spinor `(φ1, φ2, φ3, φ4)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DiracSpinor {
    pub phi: [Complex64; 4],
}

impl DiracSpinor {
    pub fn new(phi: [Complex64; 4]) -> Result<Self> {
        if phi.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite("spinor component"));
        }
        Ok(DiracSpinor { phi })
    }

    /// From `[re1, im1, re2, im2, re3, im3, re4, im4]`.
    pub fn from_reals(v: [f64; 8]) -> Result<Self> {
        Self::new(std::array::from_fn(|k| Complex64::new(v[2 * k], v[2 * k + 1])))
    }

    pub fn basis(k: usize) -> Self {
        let mut phi = [Complex64::new(0.0, 0.0); 4];
        phi[k] = Complex64::new(1.0, 0.0);
        DiracSpinor { phi }
    }

    /// `αk = φk` with `i` replaced by `γ21`.
    pub fn alphas(&self) -> [Multivector; 4] {
        let g21 = Multivector::gamma(2) * Multivector::gamma(1);
        self.phi.map(|p| Multivector::scalar(p.re) + g21 * p.im)
    }
}

impl fmt::Display for DiracSpinor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.phi.iter().map(|c| crate::algebra::fmt_complex(*c)).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Left factors `(1, e13, e3, e1)` multiplying `φk` in the ideal.
fn ideal_border() -> [Multivector; 4] {
    let (e1, e3) = (Multivector::e(1), Multivector::e(3));
    [Multivector::one(), e1 * e3, e3, e1]
}

/// The geometric Dirac spinor `S = (φ1 + φ2 e13 + φ3 e3 + φ4 e1) u_++`.
pub fn g_spinor(d: &DiracSpinor) -> Multivector {
    let sum: Multivector = ideal_border()
        .iter()
        .zip(d.phi)
        .map(|(b, p)| *b * p)
        .sum();
    sum * u_pp()
}

/// `ψ = α1 + e13 α2 + e3 α3 + e1 α4`.
fn even_from_spinor(d: &DiracSpinor) -> Multivector {
    ideal_border().iter().zip(d.alphas()).map(|(b, a)| *b * a).sum()
}

/// `(Ω0, Ω1) = (φ1 + Jφ3, φ4 + Jφ2)`.
pub fn omega_pair(d: &DiracSpinor) -> (Ring, Ring) {
    let c = |k: usize| Ring::complex(d.phi[k]);
    (c(0) + Ring::J * c(2), c(3) + Ring::J * c(1))
}

/// The real even spinor operator together with its Ω-pair and the column
/// spinor it came from. Only constructed through the factories, so the
/// three views always agree.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpinorOperator {
    psi: Multivector,
    omega0: Ring,
    omega1: Ring,
    source: DiracSpinor,
}

impl SpinorOperator {
    pub fn from_spinor(d: &DiracSpinor) -> Self {
        let (omega0, omega1) = omega_pair(d);
        SpinorOperator { psi: even_from_spinor(d), omega0, omega1, source: *d }
    }

    /// Accepts a real even element of G(1,3). The spinor is read off the
    /// first column of its matrix.
    pub fn from_even(psi: &Multivector) -> Result<Self> {
        if !psi.is_finite() {
            return Err(Error::NonFinite("spinor operator"));
        }
        let odd = psi.odd().max_norm();
        if odd > STRUCTURE_TOL {
            return Err(Error::NotEven(odd));
        }
        let imag = psi.coeffs().iter().map(|c| c.im.abs()).fold(0.0, f64::max);
        if imag > STRUCTURE_TOL {
            return Err(Error::NotReal(imag));
        }
        let d = DiracSpinor::new(to_matrix(psi).column(0))?;
        Ok(Self::from_spinor(&d))
    }

    pub fn psi(&self) -> &Multivector {
        &self.psi
    }

    pub fn omega0(&self) -> Ring {
        self.omega0
    }

    pub fn omega1(&self) -> Ring {
        self.omega1
    }

    pub fn source(&self) -> &DiracSpinor {
        &self.source
    }
}

/// `ψ = S + S̄ + S# + S⋆` for the spinor `d`.
pub fn spinor_operator(d: &DiracSpinor) -> SpinorOperator {
    SpinorOperator::from_spinor(d)
}

/// The odd operator `Φ = ψ γ0`.
pub fn odd_operator(d: &DiracSpinor) -> Multivector {
    even_from_spinor(d) * Multivector::gamma(0)
}

/// `(Z+, Z−) = (ψ E3, ψ γ0 E3)`.
pub fn complex_operators(d: &DiracSpinor) -> (Multivector, Multivector) {
    let psi = even_from_spinor(d);
    let e3 = e3_complex();
    (psi * e3, psi * Multivector::gamma(0) * e3)
}

/// Real coordinates with `φ1 = x0 + i y3`, `φ2 = −y2 + i y1`,
/// `φ3 = x3 + i y0`, `φ4 = x1 + i x2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SubstitutionVars {
    pub x: [f64; 4],
    pub y: [f64; 4],
}

impl SubstitutionVars {
    pub fn to_spinor(&self) -> DiracSpinor {
        let (x, y) = (self.x, self.y);
        let c = Complex64::new;
        DiracSpinor {
            phi: [c(x[0], y[3]), c(-y[2], y[1]), c(x[3], y[0]), c(x[1], x[2])],
        }
    }

    /// Paravector `X = x0 + x1 e1 + x2 e2 + x3 e3`.
    pub fn big_x(&self) -> Multivector {
        Multivector::scalar(self.x[0]) + Multivector::pauli_vector([self.x[1], self.x[2], self.x[3]])
    }

    /// Paravector `Y = y0 + y1 e1 + y2 e2 + y3 e3`.
    pub fn big_y(&self) -> Multivector {
        Multivector::scalar(self.y[0]) + Multivector::pauli_vector([self.y[1], self.y[2], self.y[3]])
    }

    /// Spacetime vector `x = X γ0`.
    pub fn x_vector(&self) -> Multivector {
        Multivector::spacetime_vector(self.x)
    }

    /// Spacetime vector `y = Y γ0`.
    pub fn y_vector(&self) -> Multivector {
        Multivector::spacetime_vector(self.y)
    }
}

pub fn substitution_vars(d: &DiracSpinor) -> SubstitutionVars {
    let p = d.phi;
    SubstitutionVars {
        x: [p[0].re, p[3].re, p[3].im, p[2].re],
        y: [p[2].im, p[1].im, -p[1].re, p[0].im],
    }
}

/// `ψ = X + I Y` with `X = (ψ + ψ†)/2` and `I Y = (ψ − ψ†)/2`.
pub fn hermitian_split(psi: &SpinorOperator) -> (Multivector, Multivector) {
    let dag = pauli_dagger(psi.psi());
    ((psi.psi() + dag) * 0.5, (psi.psi() - dag) * 0.5)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{det4, IdempotentSet, MatrixRep};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn sample() -> DiracSpinor {
        DiracSpinor::new([c(0.3, -0.7), c(1.1, 0.2), c(-0.4, 0.9), c(0.5, 0.05)]).unwrap()
    }

    #[test]
    fn g_spinor_examples() {
        let u = u_pp();
        let (e1, e3) = (Multivector::e(1), Multivector::e(3));
        assert!(g_spinor(&DiracSpinor::basis(0)).approx_eq(&u, 1e-14));
        assert!(g_spinor(&DiracSpinor::basis(1)).approx_eq(&(e1 * e3 * u), 1e-14));
        let d = DiracSpinor::new([c(0.0, 1.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]).unwrap();
        let g21 = Multivector::gamma(2) * Multivector::gamma(1);
        assert!(g_spinor(&d).approx_eq(&(g21 * u), 1e-14));
        let s = g_spinor(&sample());
        assert!((s * u).approx_eq(&s, 1e-13));
    }

    #[test]
    fn operator_examples() {
        assert!(spinor_operator(&DiracSpinor::basis(0)).psi().approx_eq(&Multivector::one(), 1e-14));
        assert!(spinor_operator(&DiracSpinor::basis(2)).psi().approx_eq(&Multivector::e(3), 1e-14));
        assert!(odd_operator(&DiracSpinor::basis(0)).approx_eq(&Multivector::gamma(0), 1e-14));
    }

    #[test]
    fn operator_is_sum_of_conjugate_ideals() {
        let s = g_spinor(&sample());
        let sum = s + s.complex_conjugate() + s.grade_involute() + s.star();
        assert!(sum.approx_eq(spinor_operator(&sample()).psi(), 1e-13));
        let odd = s + s.complex_conjugate() - s.grade_involute() - s.star();
        assert!(odd.approx_eq(&odd_operator(&sample()), 1e-13));
        let (zp, zm) = complex_operators(&sample());
        let zp_sum = s - s.complex_conjugate() + s.grade_involute() - s.star();
        let zm_sum = s - s.complex_conjugate() - s.grade_involute() + s.star();
        assert!(zp.approx_eq(&zp_sum, 1e-13));
        assert!(zm.approx_eq(&zm_sum, 1e-13));
    }

    #[test]
    fn conjugate_ideals_land_in_shifted_idempotents() {
        let d = sample();
        let set = IdempotentSet::new();
        let (o0, o1) = omega_pair(&d);
        let omega = o0.to_multivector() + o1.to_multivector() * Multivector::e(1);
        let bar = omega.complex_conjugate();
        let s = g_spinor(&d);
        assert!(s.approx_eq(&(omega * set.u_pp), 1e-13));
        assert!(s.complex_conjugate().approx_eq(&(bar * set.u_pm), 1e-13));
        assert!(s.grade_involute().approx_eq(&(omega * set.u_mp), 1e-13));
        assert!(s.star().approx_eq(&(bar * set.u_mm), 1e-13));
    }

    #[test]
    fn matrix_pattern() {
        let d = sample();
        let p = d.phi;
        let m = to_matrix(spinor_operator(&d).psi());
        let cj = |k: usize| p[k].conj();
        let expected = MatrixRep::new([
            [p[0], -cj(1), p[2], cj(3)],
            [p[1], cj(0), p[3], -cj(2)],
            [p[2], cj(3), p[0], -cj(1)],
            [p[3], -cj(2), p[1], cj(0)],
        ]);
        assert!(m.dist(&expected) < 1e-13);
        let odd = to_matrix(&odd_operator(&d));
        for i in 0..4 {
            for j in 0..4 {
                let sign = if j < 2 { 1.0 } else { -1.0 };
                assert!((odd.entries[i][j] - expected.entries[i][j] * sign).norm() < 1e-13);
            }
        }
    }

    #[test]
    fn omega_pair_examples() {
        let (o0, o1) = omega_pair(&DiracSpinor::basis(2));
        assert_eq!((o0, o1), (Ring::J, Ring::ZERO));
        let (o0, o1) = omega_pair(&DiracSpinor::basis(1));
        assert_eq!((o0, o1), (Ring::ZERO, Ring::J));
    }

    #[test]
    fn substitution_examples_and_roundtrip() {
        let v = substitution_vars(&DiracSpinor::basis(0));
        assert_eq!(v, SubstitutionVars { x: [1.0, 0.0, 0.0, 0.0], y: [0.0; 4] });
        let d = DiracSpinor::new([c(0.0, 1.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert_eq!(substitution_vars(&d).y, [0.0, 0.0, 0.0, 1.0]);
        let d = sample();
        let v = substitution_vars(&d);
        assert_eq!(v.to_spinor(), d);
        let psi = spinor_operator(&d);
        let big_i = Multivector::pseudoscalar();
        assert!(psi.psi().approx_eq(&(v.big_x() + big_i * v.big_y()), 1e-13));
        let phi = v.x_vector() + big_i * v.y_vector();
        assert!(odd_operator(&d).approx_eq(&phi, 1e-13));
    }

    #[test]
    fn hermitian_split_examples() {
        let big_i = Multivector::pseudoscalar();
        let psi = SpinorOperator::from_even(&(Multivector::one() + big_i * Multivector::e(3))).unwrap();
        let (x, iy) = hermitian_split(&psi);
        assert!(x.approx_eq(&Multivector::one(), 1e-14));
        assert!(iy.approx_eq(&(big_i * Multivector::e(3)), 1e-14));
    }

    #[test]
    fn from_even_rejects_odd_and_complex_input() {
        assert!(matches!(SpinorOperator::from_even(&Multivector::gamma(0)), Err(Error::NotEven(_))));
        assert!(matches!(SpinorOperator::from_even(&Multivector::j()), Err(Error::NotReal(_))));
    }

    #[test]
    fn all_four_operators_share_the_determinant() {
        let d = sample();
        let det = det4(&to_matrix(spinor_operator(&d).psi()));
        let (zp, zm) = complex_operators(&d);
        for m in [odd_operator(&d), zp, zm] {
            assert!((det4(&to_matrix(&m)) - det).norm() < 1e-12 * det.norm().max(1.0));
        }
    }
}
