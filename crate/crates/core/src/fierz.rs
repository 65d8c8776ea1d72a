//! Bilinear observables `J`, `S`, `K`, `R` of a spinor operator and their
//! quadratic (Fierz) relations.

use std::fmt;

use crate::algebra::{pauli_dagger, Multivector, OmegaRingElement};
use crate::error::{Error, Result};
use crate::matrix::det_omega;
use crate::spinor::SpinorOperator;

type Ring = OmegaRingElement;

/// Residual bound for every identity in [`fierz_check`].
pub const FIERZ_TOL: f64 = 1e-9;
/// `|det[Ω]|` at or above this is a regular (Dirac) spinor.
pub const REGULARITY_THRESHOLD: f64 = 1e-9;
/// Observables with max coefficient magnitude below this count as vanishing.
pub const VANISHING_THRESHOLD: f64 = 1e-9;

/// Tolerance for accepting an element as even.
const EVEN_TOL: f64 = 1e-12;

/// Bilinears of an even `g`, computed in the fixed `γ0` frame.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Observables {
    /// `J = g γ0 g*`, a spacetime vector.
    pub j: Multivector,
    /// `S = g γ12 g* = −I g e3 g*`, a spacetime bivector.
    pub s: Multivector,
    /// `K = g γ3 g*`, a spacetime vector.
    pub k: Multivector,
    /// `R = g g* = R1 + I R2`.
    pub r: Ring,
    /// `N = g g† = r + s â`, a paravector of G3.
    pub n: Multivector,
    /// `θ = J∘γ0`, the time component of `J`.
    pub theta: f64,
    /// `φâ = J − θγ0`, the part of `J` orthogonal to `γ0`.
    pub phi_a: Multivector,
}

impl Observables {
    /// Observables of any even element; odd input is rejected.
    pub fn of(g: &Multivector) -> Result<Self> {
        if !g.is_finite() {
            return Err(Error::NonFinite("spinor operator"));
        }
        let odd = g.odd().max_norm();
        if odd > EVEN_TOL {
            return Err(Error::NotEven(odd));
        }
        Ok(Self::of_even(g))
    }

    fn of_even(g: &Multivector) -> Self {
        let g_star = g.reverse();
        let g0 = Multivector::gamma(0);
        let j = g * g0 * g_star;
        let s = g * Multivector::gamma(1) * Multivector::gamma(2) * g_star;
        let k = g * Multivector::gamma(3) * g_star;
        let r = Ring::project(&(g * g_star));
        let n = g * pauli_dagger(g);
        let theta = j.dot(&g0).scalar_part().re;
        let phi_a = j - g0 * theta;
        Observables { j, s, k, r, n, theta, phi_a }
    }

    /// `R† = R1 − I R2`.
    pub fn r_dagger(&self) -> Ring {
        self.r.conj_pseudo()
    }

    /// `|R|² = R R†`.
    pub fn r_norm_sq(&self) -> Ring {
        self.r * self.r_dagger()
    }
}

/// Observables of a spinor operator.
pub fn observables(g: &SpinorOperator) -> Observables {
    Observables::of_even(g.psi())
}

/// One identity with its residual.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub residual: f64,
    pub passed: bool,
}

impl IdentityCheck {
    fn new(name: &'static str, residual: f64) -> Self {
        IdentityCheck { name, residual, passed: residual < FIERZ_TOL }
    }
}

/// Pass/fail per identity. `checks` holds the relations as they hold for
/// every even `g`; `printed` holds the two sign variants that fail
/// identically, kept for comparison.
#[derive(Clone, Debug, PartialEq)]
pub struct FierzReport {
    pub checks: Vec<IdentityCheck>,
    pub printed: Vec<IdentityCheck>,
}

impl FierzReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn max_residual(&self) -> f64 {
        self.checks.iter().map(|c| c.residual).fold(0.0, f64::max)
    }

    pub fn get(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().chain(&self.printed).find(|c| c.name == name)
    }
}

impl fmt::Display for FierzReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let verdict = if c.passed { "pass" } else { "FAIL" };
            writeln!(f, "{verdict}  {:<22} residual {:.3e}", c.name, c.residual)?;
        }
        for c in &self.printed {
            let verdict = if c.passed { "holds" } else { "fails" };
            writeln!(f, "{verdict} {:<22} residual {:.3e} (sign variant)", c.name, c.residual)?;
        }
        Ok(())
    }
}

/// Verifies the quadratic relations among `J`, `S`, `K` and `R`.
pub fn fierz_check(obs: &Observables) -> FierzReport {
    let Observables { j, s, k, r, .. } = *obs;
    let i = Multivector::pseudoscalar();
    let r_dag = obs.r_dagger().to_multivector();
    let rr = obs.r_norm_sq();
    let j_sq = j * j;
    let k_sq = k * k;
    let kj = k * j;
    let js = j * s;
    let jsk = js * k;
    let r_mv = r.to_multivector();
    let rr_mv = rr.to_multivector();
    let j_sq_real = j_sq.scalar_part().re;
    let k_sq_real = k_sq.scalar_part().re;
    let checks = vec![
        IdentityCheck::new("J^2 = R1^2 + R2^2", j_sq.dist(&rr_mv)),
        IdentityCheck::new("S^2 = -R^2", (s * s).dist(&-(r_mv * r_mv))),
        IdentityCheck::new("K^2 = -J^2", k_sq.dist(&-j_sq)),
        IdentityCheck::new("K.J = 0", k.dot(&j).max_norm()),
        IdentityCheck::new("KJ = I S R~", kj.dist(&(i * s * r_dag))),
        IdentityCheck::new("KJ = K^J", kj.dist(&k.wedge(&j))),
        IdentityCheck::new("JS = -I R~ K", js.dist(&-(i * r_dag * k))),
        IdentityCheck::new("JSK = I |R|^2 R~", jsk.dist(&(i * rr_mv * r_dag))),
        IdentityCheck::new("J^2 >= 0", (-j_sq_real).max(0.0) + j_sq.scalar_part().im.abs()),
        IdentityCheck::new("K^2 <= 0", k_sq_real.max(0.0) + k_sq.scalar_part().im.abs()),
    ];
    let printed = vec![
        IdentityCheck::new("JS = I R~ K", js.dist(&(i * r_dag * k))),
        IdentityCheck::new("JSK = -I |R|^2 R~", jsk.dist(&-(i * rr_mv * r_dag))),
    ];
    FierzReport { checks, printed }
}

/// Regular/singular split of a spinor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegularityClass {
    Regular,
    Singular,
}

impl fmt::Display for RegularityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RegularityClass::Regular => "REGULAR",
            RegularityClass::Singular => "SINGULAR",
        })
    }
}

/// Which observables are numerically zero.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Vanishing {
    pub r1: bool,
    pub r2: bool,
    pub j: bool,
    pub s: bool,
    pub k: bool,
}

impl fmt::Display for Vanishing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = [(self.r1, "R1"), (self.r2, "R2"), (self.j, "J"), (self.s, "S"), (self.k, "K")]
            .into_iter()
            .filter_map(|(zero, name)| zero.then_some(name))
            .collect();
        if names.is_empty() {
            f.write_str("none")
        } else {
            f.write_str(&names.join(", "))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Regularity {
    pub class: RegularityClass,
    /// `|det[Ω]|`, the Euclidean norm of its four ring components.
    pub det_magnitude: f64,
    pub vanishing: Vanishing,
}

fn ring_magnitude(r: &Ring) -> f64 {
    (r.scalar.powi(2) + r.imag.powi(2) + r.pseudo.powi(2) + r.imag_pseudo.powi(2)).sqrt()
}

/// Classifies `g` by `det[Ω]` and reports the vanishing observables.
pub fn regularity(g: &SpinorOperator) -> Regularity {
    let det_magnitude = ring_magnitude(&det_omega(g));
    let obs = observables(g);
    let zero = |x: f64| x.abs() < VANISHING_THRESHOLD;
    let vanishing = Vanishing {
        r1: zero(obs.r.scalar) && zero(obs.r.imag),
        r2: zero(obs.r.pseudo) && zero(obs.r.imag_pseudo),
        j: zero(obs.j.max_norm()),
        s: zero(obs.s.max_norm()),
        k: zero(obs.k.max_norm()),
    };
    let class = if det_magnitude >= REGULARITY_THRESHOLD {
        RegularityClass::Regular
    } else {
        RegularityClass::Singular
    };
    Regularity { class, det_magnitude, vanishing }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{cross, PauliParts};
    use crate::spinor::DiracSpinor;
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn operator(phi: [Complex64; 4]) -> SpinorOperator {
        SpinorOperator::from_spinor(&DiracSpinor::new(phi).unwrap())
    }

    fn generic() -> SpinorOperator {
        operator([c(0.9, 0.2), c(-0.3, 0.5), c(0.1, -0.4), c(0.6, 0.7)])
    }

    fn is_grade(m: &Multivector, k: u32) -> bool {
        (*m - m.grade(k)).max_norm() < 1e-12
    }

    #[test]
    fn identity_spinor() {
        let obs = Observables::of(&Multivector::one()).unwrap();
        assert_eq!(obs.j, Multivector::gamma(0));
        assert_eq!(obs.s, Multivector::gamma(1) * Multivector::gamma(2));
        assert_eq!(obs.k, Multivector::gamma(3));
        assert_eq!(obs.r, Ring::ONE);
        assert_eq!(obs.theta, 1.0);
        assert!(obs.phi_a.max_norm() < 1e-15);
        let report = fierz_check(&obs);
        assert!(report.passed());
        assert_eq!(report.max_residual(), 0.0);
    }

    #[test]
    fn rejects_odd_input() {
        assert!(matches!(Observables::of(&Multivector::gamma(1)), Err(Error::NotEven(_))));
    }

    #[test]
    fn e1_operator() {
        // g = e1: g* = g̃ = −e1, so R = −1 and J = e1 γ0 (−e1).
        let e1 = Multivector::e(1);
        let obs = Observables::of(&e1).unwrap();
        assert_eq!(obs.r, Ring::real(-1.0));
        let g0 = Multivector::gamma(0);
        assert!(obs.j.approx_eq(&(e1 * g0 * -e1), 1e-15));
        assert!(obs.j.approx_eq(&(obs.n * g0), 1e-15));
        assert!(fierz_check(&obs).passed());
    }

    #[test]
    fn generic_spinor_observables() {
        let g = generic();
        let obs = observables(&g);
        assert!(is_grade(&obs.j, 1) && is_grade(&obs.k, 1) && is_grade(&obs.s, 2));
        assert!(obs.k.reverse().approx_eq(&obs.k, 1e-14));
        assert!(obs.s.reverse().approx_eq(&-obs.s, 1e-14));
        // R is central and equals det[Ω].
        let psi = g.psi();
        assert!((psi.reverse() * psi).approx_eq(&obs.r.to_multivector(), 1e-13));
        assert!(obs.r.dist(&det_omega(&g)) < 1e-13);
        // J = g g† γ0 and J = θ γ0 + φ â with â ⊥ γ0.
        let g0 = Multivector::gamma(0);
        assert!(obs.j.approx_eq(&(obs.n * g0), 1e-13));
        assert!(obs.phi_a.dot(&g0).max_norm() < 1e-13);
        let report = fierz_check(&obs);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn printed_sign_variants_fail_for_generic_spinor() {
        let report = fierz_check(&observables(&generic()));
        for c in &report.printed {
            assert!(!c.passed, "{} unexpectedly holds", c.name);
        }
    }

    #[test]
    fn component_formula_for_current() {
        let g = *generic().psi();
        let p = PauliParts::of(&g);
        let (x0, y0) = (p.a.re, p.b.re);
        let (x, y) = (p.x_vector(), p.y_vector());
        let sq = |v: &Multivector| (v * v).scalar_part().re;
        let scalar = x0 * x0 + y0 * y0 + sq(&x) + sq(&y);
        let vector = (x * x0 + y * y0 + cross(&x, &y)) * 2.0;
        let g0 = Multivector::gamma(0);
        let obs = Observables::of(&g).unwrap();
        assert!(obs.n.approx_eq(&(Multivector::scalar(scalar) + vector), 1e-13));
        assert!(obs.j.approx_eq(&((Multivector::scalar(scalar) + vector) * g0), 1e-13));
        // g†g flips the sign of the cross term.
        let vector_rev = (x * x0 + y * y0 - cross(&x, &y)) * 2.0;
        assert!((pauli_dagger(&g) * g).approx_eq(&(Multivector::scalar(scalar) + vector_rev), 1e-13));
        // R = x0² − y0² + y² − x² + 2I(x0 y0 − x·y).
        let xy = (x.sym(&y)).scalar_part().re;
        let r = Ring::pseudocomplex(x0 * x0 - y0 * y0 + sq(&y) - sq(&x), 2.0 * (x0 * y0 - xy));
        assert!(obs.r.dist(&r) < 1e-13);
    }

    #[test]
    fn hermitian_operator_current() {
        // g = x0 + x: J = (x0² + x²)γ0 + 2 x0 x γ0.
        let x = Multivector::pauli_vector([0.3, -0.7, 0.4]);
        let g = Multivector::scalar(1.2) + x;
        let obs = Observables::of(&g).unwrap();
        let g0 = Multivector::gamma(0);
        let expected = (Multivector::scalar(1.44 + 0.09 + 0.49 + 0.16) + x * 2.4) * g0;
        assert!(obs.j.approx_eq(&expected, 1e-14));
    }

    #[test]
    fn current_is_frame_covariant() {
        let l = (Multivector::e(1) * 0.4 + Multivector::pseudoscalar() * Multivector::e(2) * 0.9).exp().unwrap();
        let g = *generic().psi();
        let moved = Observables::of(&(l * g)).unwrap();
        let expected = l * observables(&generic()).j * l.reverse();
        assert!(moved.j.approx_eq(&expected, 1e-12));
    }

    #[test]
    fn regularity_classes() {
        let one = c(1.0, 0.0);
        let zero = c(0.0, 0.0);
        let r = regularity(&operator([one, zero, zero, zero]));
        assert_eq!(r.class, RegularityClass::Regular);
        let with_i = operator([one, zero, c(0.0, 1.0), zero]);
        assert!(det_omega(&with_i).dist(&Ring::PSEUDO.scale(2.0)) < 1e-15);
        assert_eq!(regularity(&with_i).class, RegularityClass::Regular);
        let singular = operator([one, zero, one, zero]);
        let r = regularity(&singular);
        assert_eq!(r.class, RegularityClass::Singular);
        assert!(r.vanishing.r1 && r.vanishing.r2);
        assert!(!r.vanishing.j);
        assert_eq!(r.class.to_string(), "SINGULAR");
    }

    #[test]
    fn singular_spinor_degenerate_identities() {
        let one = c(1.0, 0.0);
        let zero = c(0.0, 0.0);
        let obs = observables(&operator([one, zero, one, zero]));
        let report = fierz_check(&obs);
        assert!(report.passed(), "{report}");
        assert!((obs.s * obs.s).max_norm() < 1e-14);
        assert!((obs.j * obs.j).max_norm() < 1e-14);
    }
}
