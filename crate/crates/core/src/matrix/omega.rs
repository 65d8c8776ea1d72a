use std::fmt;

use num_complex::Complex64;

use super::spectral::e3_plus;
use crate::algebra::{Multivector, OmegaRingElement};
use crate::spinor::SpinorOperator;

type Ring = OmegaRingElement;

/// The 2x2 E-matrix `[[Ω0, Ω̄1], [Ω1, Ω̄0]]` of an even element over the
/// ring span{1, i, I, iI}. Only the Ω-pair is stored; the conjugate entries
/// are derived.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OmegaMatrix {
    omega0: Ring,
    omega1: Ring,
}

impl OmegaMatrix {
    pub fn new(omega0: Ring, omega1: Ring) -> Self {
        OmegaMatrix { omega0, omega1 }
    }

    pub fn identity() -> Self {
        Self::new(Ring::ONE, Ring::ZERO)
    }

    pub fn omega0(&self) -> Ring {
        self.omega0
    }

    pub fn omega1(&self) -> Ring {
        self.omega1
    }

    pub fn entries(&self) -> [[Ring; 2]; 2] {
        [
            [self.omega0, self.omega1.conj_i()],
            [self.omega1, self.omega0.conj_i()],
        ]
    }

    /// `Ω0 Ω̄0 − Ω̄1 Ω1`, always in the span of {1, I}.
    pub fn det(&self) -> Ring {
        self.omega0 * self.omega0.conj_i() - self.omega1.conj_i() * self.omega1
    }

    /// `Ω = Ω0 + Ω1 e1` as a multivector.
    pub fn omega(&self) -> Multivector {
        self.omega0.to_multivector() + self.omega1.to_multivector() * Multivector::e(1)
    }

    /// Rebuilds the even operator, `ψ = Ω E3⁺ + Ω̄ E3⁻ = ½(Ω + Ω̄) + ½(Ω − Ω̄)E3`.
    pub fn to_even(&self) -> Multivector {
        let omega = self.omega();
        let bar = omega.complex_conjugate();
        let big_e3 = super::e3_complex();
        (omega + bar) * 0.5 + (omega - bar) * big_e3 * 0.5
    }

    /// Same element through the matrix form `(1, e1) E3⁺ [ψ]_Ω (1, e1)ᵀ`.
    pub fn to_even_via_matrix(&self) -> Multivector {
        let m = self.entries();
        let border = [Multivector::one(), Multivector::e(1)];
        let p = e3_plus();
        let mut out = Multivector::ZERO;
        for (i, row) in m.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                out += border[i] * p * entry.to_multivector() * border[j];
            }
        }
        out
    }
}

impl std::ops::Mul for OmegaMatrix {
    type Output = OmegaMatrix;
    /// Product of two constrained matrices stays constrained, so only the
    /// first column is computed.
    fn mul(self, rhs: OmegaMatrix) -> OmegaMatrix {
        let (a, b) = (self.omega0, self.omega1);
        let (c, d) = (rhs.omega0, rhs.omega1);
        OmegaMatrix::new(a * c + b.conj_i() * d, b * c + a.conj_i() * d)
    }
}

impl fmt::Display for OmegaMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.entries();
        writeln!(f, "[{}, {}]", m[0][0], m[0][1])?;
        write!(f, "[{}, {}]", m[1][0], m[1][1])
    }
}

/// `[1]_Ω, [e1]_Ω, [e2]_Ω, [e3]_Ω`.
pub fn e_matrices() -> [OmegaMatrix; 4] {
    [
        OmegaMatrix::identity(),
        OmegaMatrix::new(Ring::ZERO, Ring::ONE),
        OmegaMatrix::new(Ring::ZERO, Ring::I_UNIT),
        OmegaMatrix::new(Ring::J, Ring::ZERO),
    ]
}

/// `[ψ]_Ω` of a spinor operator.
pub fn omega_matrix(psi: &SpinorOperator) -> OmegaMatrix {
    OmegaMatrix::new(psi.omega0(), psi.omega1())
}

/// `det[ψ]_Ω = Ω0 Ω̄0 − Ω̄1 Ω1`.
pub fn det_omega(psi: &SpinorOperator) -> Ring {
    omega_matrix(psi).det()
}

/// Substitutes `i → I` (so `J → 1`) in every entry. The result is the Pauli
/// matrix of `ψ ∈ G3`, with `re + im·I` stored as a complex number.
pub fn pauli_representation(m: &OmegaMatrix) -> [[Complex64; 2]; 2] {
    let sub = |r: Ring| Complex64::new(r.scalar - r.imag_pseudo, r.imag + r.pseudo);
    m.entries().map(|row| row.map(sub))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spinor::{DiracSpinor, SpinorOperator};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn operator(phi: [Complex64; 4]) -> SpinorOperator {
        SpinorOperator::from_spinor(&DiracSpinor::new(phi).unwrap())
    }

    fn sample() -> SpinorOperator {
        operator([c(0.3, -0.7), c(1.1, 0.2), c(-0.4, 0.9), c(0.5, 0.05)])
    }

    #[test]
    fn generators_match_pauli_analogues() {
        let gens = e_matrices();
        let i = Ring::I_UNIT;
        assert_eq!(gens[2].entries(), [[Ring::ZERO, -i], [i, Ring::ZERO]]);
        assert_eq!(gens[3].entries(), [[Ring::J, Ring::ZERO], [Ring::ZERO, -Ring::J]]);
        let elems = [Multivector::one(), Multivector::e(1), Multivector::e(2), Multivector::e(3)];
        for (g, e) in gens.iter().zip(elems) {
            let op = SpinorOperator::from_even(&e).unwrap();
            let m = omega_matrix(&op);
            assert!(m.omega0().dist(&g.omega0()) < 1e-14 && m.omega1().dist(&g.omega1()) < 1e-14);
        }
    }

    #[test]
    fn reconstruction_both_ways() {
        let op = sample();
        let m = omega_matrix(&op);
        assert!(m.to_even().approx_eq(op.psi(), 1e-12));
        assert!(m.to_even_via_matrix().approx_eq(op.psi(), 1e-12));
    }

    #[test]
    fn multiplication_is_a_homomorphism() {
        let a = sample();
        let b = operator([c(-0.2, 0.4), c(0.0, 1.3), c(0.8, 0.1), c(-0.6, -0.3)]);
        let prod = SpinorOperator::from_even(&(a.psi() * b.psi())).unwrap();
        let lhs = omega_matrix(&prod);
        let rhs = omega_matrix(&a) * omega_matrix(&b);
        assert!(lhs.omega0().dist(&rhs.omega0()) < 1e-12);
        assert!(lhs.omega1().dist(&rhs.omega1()) < 1e-12);
    }

    #[test]
    fn determinant_examples() {
        let one = c(1.0, 0.0);
        let z = c(0.0, 0.0);
        assert!(det_omega(&operator([one, z, z, z])).dist(&Ring::ONE) < 1e-15);
        assert!(det_omega(&operator([z, z, one, z])).dist(&-Ring::ONE) < 1e-15);
        let d = det_omega(&operator([one, z, c(0.0, 1.0), z]));
        assert!(d.dist(&Ring::pseudocomplex(0.0, 2.0)) < 1e-15);
    }

    #[test]
    fn determinant_matches_component_formula() {
        let op = sample();
        let p = op.source().phi;
        let r = p[0].norm_sqr() + p[1].norm_sqr() - p[2].norm_sqr() - p[3].norm_sqr();
        let a = (p[0].conj() * p[2] + p[1].conj() * p[3]).im;
        assert!(det_omega(&op).dist(&Ring::pseudocomplex(r, 2.0 * a)) < 1e-13);
    }

    #[test]
    fn pauli_substitution_reproduces_g3_matrix_form() {
        let op = sample();
        let pm = pauli_representation(&omega_matrix(&op));
        let big_i = Multivector::pseudoscalar();
        let as_mv = |z: Complex64| Multivector::scalar(z.re) + big_i * z.im;
        let border = [Multivector::one(), Multivector::e(1)];
        let u_plus = (Multivector::one() + Multivector::e(3)) * 0.5;
        let mut psi = Multivector::ZERO;
        for i in 0..2 {
            for j in 0..2 {
                psi += border[i] * u_plus * as_mv(pm[i][j]) * border[j];
            }
        }
        assert!(psi.approx_eq(op.psi(), 1e-12));
    }
}
