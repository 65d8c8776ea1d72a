use num_complex::Complex64;

use crate::algebra::{
    four_conjugation_average, pauli_dagger, Multivector, OmegaRingElement,
};
use crate::error::Result;
use crate::matrix::{e3_plus, OmegaMatrix};
use crate::spinor::{canonical_se, g_spinor, omega_pair, substitution_vars, DiracSpinor};

type Ring = OmegaRingElement;

/// Spinor whose Ω-pair is `(Ω0, Ω1)`: `φ1 + Jφ3 = Ω0`, `φ4 + Jφ2 = Ω1`.
pub fn spinor_from_pair(omega0: Ring, omega1: Ring) -> DiracSpinor {
    let (a0, b0) = omega0.j_split();
    let (a1, b1) = omega1.j_split();
    DiracSpinor { phi: [a0, b1, b0, a1] }
}

/// `|Ω⟩ = 2 S = 2 (Ω0 + Ω1 e1) u_++`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Ket {
    ideal_element: Multivector,
    omega_pair: (Ring, Ring),
    spinor: DiracSpinor,
}

impl Ket {
    pub fn new(d: &DiracSpinor) -> Self {
        Ket { ideal_element: g_spinor(d) * 2.0, omega_pair: omega_pair(d), spinor: *d }
    }

    pub fn ideal_element(&self) -> &Multivector {
        &self.ideal_element
    }

    pub fn omega_pair(&self) -> (Ring, Ring) {
        self.omega_pair
    }

    pub fn spinor(&self) -> &DiracSpinor {
        &self.spinor
    }

    /// `⟨Ω| = reverse(conj(|Ω⟩)) = 2 u_++ (Ω̄0 − Ω̄1 e1)`.
    pub fn bra(&self) -> Multivector {
        bra(self)
    }
}

pub fn bra(k: &Ket) -> Multivector {
    k.ideal_element.complex_conjugate().reverse()
}

/// `⟨Φ|Ω⟩ = ⟨⟨Φ| |Ω⟩⟩_C`.
///
/// `⟨Φ||Ω⟩ = 4 u_++ c` for a complex number `c`, and `u_++` has scalar part
/// 1/4, so `c` is the complex blade-0 coefficient of the product.
pub fn braket(phi: &Ket, omega: &Ket) -> Complex64 {
    (phi.bra() * omega.ideal_element).scalar_part()
}

/// `φ̄1ψ1 + φ̄2ψ2 − φ̄3ψ3 − φ̄4ψ4` from raw components.
pub fn braket_components(phi: &DiracSpinor, omega: &DiracSpinor) -> Complex64 {
    let sign = [1.0, 1.0, -1.0, -1.0];
    (0..4).map(|k| phi.phi[k].conj() * omega.phi[k] * sign[k]).sum()
}

/// Inner product in substitution coordinates (`r, s` for `Φ`; `x, y` for `Ω`).
pub fn braket_coordinates(phi: &DiracSpinor, omega: &DiracSpinor) -> Complex64 {
    let (a, b) = (substitution_vars(phi), substitution_vars(omega));
    let (r, s, x, y) = (a.x, a.y, b.x, b.y);
    let minkowski = |u: [f64; 4], v: [f64; 4]| u[0] * v[0] - u[1] * v[1] - u[2] * v[2] - u[3] * v[3];
    let re = minkowski(r, x) - minkowski(s, y);
    let im = r[0] * y[3] - r[3] * y[0] + s[0] * x[3] - s[3] * x[0] + r[2] * x[1] - r[1] * x[2]
        + s[1] * y[2]
        - s[2] * y[1];
    Complex64::new(re, im)
}

/// Spacetime form `r·x − s·y + i(γ12·(r∧x − s∧y) + γ03·(r∧y + s∧x))` with
/// `r, s, x, y` the spacetime vectors of the two spinors.
///
/// The sign in front of `r∧y` is the one that agrees with the component
/// formula; see [`braket_spacetime_as_printed`] for the other choice.
pub fn braket_spacetime(phi: &DiracSpinor, omega: &DiracSpinor) -> Complex64 {
    spacetime_form(phi, omega, 1.0)
}

/// The spacetime form with `γ30·(r∧y − s∧x)` in the imaginary part. It
/// differs from [`braket_spacetime`] by `2 γ30·(r∧y)`.
pub fn braket_spacetime_as_printed(phi: &DiracSpinor, omega: &DiracSpinor) -> Complex64 {
    spacetime_form(phi, omega, -1.0)
}

fn spacetime_form(phi: &DiracSpinor, omega: &DiracSpinor, ry_sign: f64) -> Complex64 {
    let (a, b) = (substitution_vars(phi), substitution_vars(omega));
    let (r, s) = (a.x_vector(), a.y_vector());
    let (x, y) = (b.x_vector(), b.y_vector());
    let g = Multivector::gamma;
    let g12 = g(1) * g(2);
    let g03 = g(0) * g(3);
    let scalar = |m: Multivector| m.scalar_part();
    let re = scalar(r.dot(&x)) - scalar(s.dot(&y));
    let plane = scalar(g12.dot(&(r.wedge(&x) - s.wedge(&y))));
    let boost = scalar(g03.dot(&(r.wedge(&y) * ry_sign + s.wedge(&x))));
    re + Complex64::i() * (plane + boost)
}

/// `|Ω⟩_E = √2 (Ω0 + Ω1 e1) E3⁺`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EKet {
    ideal_element: Multivector,
    omega0: Ring,
    omega1: Ring,
}

impl EKet {
    pub fn new(omega0: Ring, omega1: Ring) -> Self {
        let omega = omega0.to_multivector() + omega1.to_multivector() * Multivector::e(1);
        EKet { ideal_element: omega * e3_plus() * std::f64::consts::SQRT_2, omega0, omega1 }
    }

    pub fn from_spinor(d: &DiracSpinor) -> Self {
        let (o0, o1) = omega_pair(d);
        Self::new(o0, o1)
    }

    pub fn ideal_element(&self) -> &Multivector {
        &self.ideal_element
    }

    pub fn omega_pair(&self) -> (Ring, Ring) {
        (self.omega0, self.omega1)
    }

    pub fn spinor(&self) -> DiracSpinor {
        spinor_from_pair(self.omega0, self.omega1)
    }

    pub fn det(&self) -> Ring {
        OmegaMatrix::new(self.omega0, self.omega1).det()
    }

    /// `⟨Ω|_E = reverse(conj(|Ω⟩_E))`.
    pub fn bra(&self) -> Multivector {
        self.ideal_element.complex_conjugate().reverse()
    }

    /// The matching Dirac ket `|Ω⟩ = √2 |Ω⟩_E γ0⁺`.
    pub fn dirac_ket(&self) -> Multivector {
        let g0_plus = (Multivector::one() + Multivector::gamma(0)) * 0.5;
        self.ideal_element * g0_plus * std::f64::consts::SQRT_2
    }
}

/// `⟨Φ|_E |Ω⟩_E`.
pub fn e_inner(phi: &EKet, omega: &EKet) -> Multivector {
    phi.bra() * omega.ideal_element
}

/// `|Ω⟩_E ⟨Ω|_E`.
pub fn e_outer(omega: &EKet) -> Multivector {
    omega.ideal_element * omega.bra()
}

/// `2 e^{ω̄′ + ω} E3⁺ (M̂′∘M̂ + J (M̂′⊗M̂)∘e3)` from the canonical data of
/// both spinors.
pub fn e_inner_canonical(phi: &EKet, omega: &EKet) -> Result<Multivector> {
    let cp = canonical_se(&phi.spinor())?;
    let co = canonical_se(&omega.spinor())?;
    let phase = (cp.exp_omega().conj_i() * co.exp_omega()).to_multivector();
    let (mp, mo) = (cp.state.m_hat, co.state.m_hat);
    let inner = mp.sym(&mo) + Multivector::j() * mp.antisym(&mo).sym(&Multivector::e(3));
    Ok(phase * e3_plus() * inner * 2.0)
}

/// `2 e^{2ω1} Â3⁺`.
pub fn e_outer_canonical(omega: &EKet) -> Result<Multivector> {
    let c = canonical_se(&omega.spinor())?;
    Ok((c.omega1 * 2.0).exp().to_multivector() * c.state.a_plus() * 2.0)
}

/// `⟨Φ|Ω⟩` as the four-conjugation average of the E-inner product.
pub fn dirac_from_e(phi: &EKet, omega: &EKet) -> Complex64 {
    four_conjugation_average(&e_inner(phi, omega)).scalar_part()
}

/// `M̂Φ∘M̂Ω` self-adjoint and `(M̂Φ⊗M̂Ω)∘e3` anti-self-adjoint under `†`.
pub fn special_condition(m_hat_phi: &Multivector, m_hat_omega: &Multivector, tol: f64) -> bool {
    let sym = m_hat_phi.sym(m_hat_omega);
    let anti = m_hat_phi.antisym(m_hat_omega).sym(&Multivector::e(3));
    sym.dist(&pauli_dagger(&sym)) <= tol && anti.dist(&-pauli_dagger(&anti)) <= tol
}

/// `½ (P + P†)` for `P = ⟨Φ|_E|Ω⟩_E`; equals `⟨Φ|Ω⟩` when the special
/// condition holds for gauge-normalized states.
pub fn simplified_inner(phi: &EKet, omega: &EKet) -> Multivector {
    let p = e_inner(phi, omega);
    (p + pauli_dagger(&p)) * 0.5
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn spinors() -> (DiracSpinor, DiracSpinor) {
        (
            DiracSpinor::new([c(0.3, -0.7), c(1.1, 0.2), c(-0.4, 0.9), c(0.5, 0.05)]).unwrap(),
            DiracSpinor::new([c(-0.2, 0.4), c(0.6, 1.3), c(0.8, 0.1), c(-0.6, -0.3)]).unwrap(),
        )
    }

    #[test]
    fn basis_examples() {
        let k = |i| Ket::new(&DiracSpinor::basis(i));
        assert!((braket(&k(0), &k(0)) - 1.0).norm() < 1e-15);
        assert!((braket(&k(2), &k(2)) + 1.0).norm() < 1e-15);
        assert!(braket(&k(0), &k(1)).norm() < 1e-15);
    }

    #[test]
    fn bra_has_documented_form() {
        let (a, _) = spinors();
        let ket = Ket::new(&a);
        let (o0, o1) = ket.omega_pair();
        let u = crate::matrix::u_pp();
        let expected = u
            * (o0.conj_i().to_multivector() - o1.conj_i().to_multivector() * Multivector::e(1))
            * 2.0;
        assert!(ket.bra().approx_eq(&expected, 1e-13));
    }

    #[test]
    fn all_inner_product_forms_agree() {
        let (a, b) = spinors();
        let direct = braket(&Ket::new(&a), &Ket::new(&b));
        assert!((direct - braket_components(&a, &b)).norm() < 1e-13);
        assert!((direct - braket_coordinates(&a, &b)).norm() < 1e-13);
        assert!((direct - braket_spacetime(&a, &b)).norm() < 1e-13);
        assert!((direct - dirac_from_e(&EKet::from_spinor(&a), &EKet::from_spinor(&b))).norm() < 1e-13);
    }

    #[test]
    fn printed_spacetime_sign_disagrees() {
        let (a, b) = spinors();
        let gap = braket_spacetime_as_printed(&a, &b) - braket_components(&a, &b);
        assert!(gap.norm() > 1e-3);
    }

    #[test]
    fn e_inner_component_form() {
        let (a, b) = spinors();
        let p = e_inner(&EKet::from_spinor(&a), &EKet::from_spinor(&b));
        let (f, g) = (a.phi, b.phi);
        let re = braket_components(&a, &b);
        let j_part = f[0].conj() * g[2] + f[1].conj() * g[3] - f[2].conj() * g[0] - f[3].conj() * g[1];
        let q = Ring::from_j_split(re, j_part).to_multivector();
        assert!(p.approx_eq(&(e3_plus() * q * 2.0), 1e-13));
        // With Φ = Ω the J part is 2i·im(φ̄1φ3 + φ̄2φ4), i.e. a real multiple of I.
        let p = e_inner(&EKet::from_spinor(&b), &EKet::from_spinor(&b));
        let cross = g[0].conj() * g[2] + g[1].conj() * g[3];
        let scalar = Multivector::complex_scalar(braket_components(&b, &b))
            + Multivector::pseudoscalar() * Multivector::scalar(2.0 * cross.im);
        assert!(p.approx_eq(&(e3_plus() * scalar * 2.0), 1e-13));
    }

    #[test]
    fn e_inner_matches_canonical_form() {
        let (a, b) = spinors();
        let (ka, kb) = (EKet::from_spinor(&a), EKet::from_spinor(&b));
        assert!(e_inner(&ka, &kb).approx_eq(&e_inner_canonical(&ka, &kb).unwrap(), 1e-10));
        assert!(e_outer(&kb).approx_eq(&e_outer_canonical(&kb).unwrap(), 1e-10));
        let self_inner = e_inner(&kb, &kb);
        assert!(self_inner.approx_eq(&(kb.det().to_multivector() * e3_plus() * 2.0), 1e-12));
    }

    #[test]
    fn trivial_e_products() {
        let k = EKet::from_spinor(&DiracSpinor::basis(0));
        assert!(e_inner(&k, &k).approx_eq(&(e3_plus() * 2.0), 1e-15));
        assert!(e_outer(&k).approx_eq(&(e3_plus() * 2.0), 1e-15));
        let zero = EKet::new(Ring::ZERO, Ring::ZERO);
        assert_eq!(dirac_from_e(&zero, &k), c(0.0, 0.0));
    }

    #[test]
    fn dirac_and_e_kets_are_related() {
        let (a, b) = spinors();
        let (ka, kb) = (EKet::from_spinor(&a), EKet::from_spinor(&b));
        assert!(kb.dirac_ket().approx_eq(Ket::new(&b).ideal_element(), 1e-13));
        let g0_plus = (Multivector::one() + Multivector::gamma(0)) * 0.5;
        let sandwiched = (g0_plus * e_inner(&ka, &kb) * g0_plus * 2.0).scalar_part();
        assert!((sandwiched - braket_components(&a, &b)).norm() < 1e-13);
    }

    #[test]
    fn pair_spinor_roundtrip() {
        let (a, _) = spinors();
        let (o0, o1) = omega_pair(&a);
        assert_eq!(spinor_from_pair(o0, o1), a);
    }
    #[test]
    fn special_condition_on_normalized_same_frame_pairs() {
        use crate::spinor::{family_spinor, sphere_state};
        let unit = |x: [f64; 2], phi: f64| {
            let s = 1.0 / (1.0 + x[0] * x[0] + x[1] * x[1]).sqrt();
            DiracSpinor::new(family_spinor(x, phi).phi.map(|c| c * s)).unwrap()
        };
        for (x, y, phi) in [([0.5, 0.3], [-1.0, 0.7], 0.0), ([0.5, 0.3], [-1.0, 0.7], 0.8), ([1.0, 0.0], [0.0, 1.0], 0.0)] {
            let (a, b) = (unit(x, phi), unit(y, phi));
            let (ka, kb) = (EKet::from_spinor(&a), EKet::from_spinor(&b));
            assert!(ka.det().dist(&Ring::ONE) < 1e-12 && kb.det().dist(&Ring::ONE) < 1e-12);
            let (ma, mb) = (sphere_state(&a).unwrap().m_hat, sphere_state(&b).unwrap().m_hat);
            assert!(special_condition(&ma, &mb, 1e-10));
            let expected = Multivector::complex_scalar(braket_components(&a, &b));
            assert!(simplified_inner(&ka, &kb).approx_eq(&expected, 1e-12));
        }
        // Generic spinors violate the condition and the shortcut is wrong.
        let (a, b) = spinors();
        let (ma, mb) = (sphere_state(&a).unwrap().m_hat, sphere_state(&b).unwrap().m_hat);
        assert!(!special_condition(&ma, &mb, 1e-10));
        let (ka, kb) = (EKet::from_spinor(&a), EKet::from_spinor(&b));
        let expected = Multivector::complex_scalar(braket_components(&a, &b));
        assert!(!simplified_inner(&ka, &kb).approx_eq(&expected, 1e-6));
    }
}

