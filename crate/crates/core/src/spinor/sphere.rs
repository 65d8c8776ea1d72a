//! The complex Riemann sphere: `Λ = Ω0⁻¹Ω1`, the complex vector `M`, its
//! unit form `M̂`, the spin axis `â = M̂ e3 M̂`, and the boost hidden in `M̂`.

use num_complex::Complex64;

use super::dirac::{omega_pair, DiracSpinor};
use crate::algebra::{cross, Multivector, OmegaRingElement, ZERO_DIVISOR_THRESHOLD};
use crate::error::{Error, Result};
use crate::matrix::e3_plus;

type Ring = OmegaRingElement;

/// `|M²|` below this leaves `M̂` undefined.
pub const NULL_STATE_THRESHOLD: f64 = 1e-12;
/// Tolerance on `M̂² = 1` consistency in the boost decomposition.
pub const BOOST_TOL: f64 = 1e-10;

/// A point of the complex Riemann sphere.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SphereState {
    /// `M = x + e3` with `e3 ∘ M = 1`.
    pub m: Multivector,
    pub lambda: Ring,
    /// `M² = 1 − ΛΛ̄`, in the span of {1, I}.
    pub m_sq: Ring,
    /// `M / √(M²)` with the principal ring square root.
    pub m_hat: Multivector,
    /// `â = M̂ e3 M̂ = 2M/M² − e3`.
    pub a_hat: Multivector,
    /// Set when `Λ` is a nonzero zero divisor: the limiting state that is
    /// not reached by any finite boost of a physical state.
    pub limiting: bool,
}

fn big_i() -> Multivector {
    Multivector::pseudoscalar()
}

/// `M = ((Λ − Λ̄)/2) J e1 − ((Λ + Λ̄)/2) I e2 + e3`.
pub fn m_from_lambda(lambda: Ring) -> Multivector {
    let bar = lambda.conj_i();
    let odd = (lambda - bar) * 0.5;
    let even = (lambda + bar) * 0.5;
    (odd * Ring::J).to_multivector() * Multivector::e(1)
        - (even * Ring::PSEUDO).to_multivector() * Multivector::e(2)
        + Multivector::e(3)
}

/// `Λ = J α1 + I α2` where `αk` are the ring-valued `e1`, `e2` coordinates of `M`.
pub fn lambda_from_m(m: &Multivector) -> Ring {
    let a1 = Ring::project(&m.sym(&Multivector::e(1)));
    let a2 = Ring::project(&m.sym(&Multivector::e(2)));
    Ring::J * a1 + Ring::PSEUDO * a2
}

impl SphereState {
    fn build(m: Multivector, lambda: Ring) -> Result<Self> {
        let m_sq = Ring::project(&(m * m));
        let magnitude = {
            let (p, q) = m_sq.components();
            p.norm().max(q.norm())
        };
        if magnitude < NULL_STATE_THRESHOLD {
            return Err(Error::NullState(magnitude));
        }
        let root = m_sq.sqrt().map_err(|_| Error::NullState(magnitude))?;
        let m_hat = root.inverse()?.to_multivector() * m;
        let m_sq_inv = m_sq.inverse()?;
        let a_hat = (m_sq_inv * 2.0).to_multivector() * m - Multivector::e(3);
        let limiting = lambda.max_norm() > ZERO_DIVISOR_THRESHOLD && lambda.is_zero_divisor();
        Ok(SphereState { m, lambda, m_sq, m_hat, a_hat, limiting })
    }

    /// `M̂ e3 M̂`, the definition that `a_hat` must agree with.
    pub fn a_hat_from_m_hat(&self) -> Multivector {
        self.m_hat * Multivector::e(3) * self.m_hat
    }

    /// `T_E⁺ = (1 + Λ e1) E3⁺`.
    pub fn t_e_plus(&self) -> Multivector {
        (Multivector::one() + self.lambda.to_multivector() * Multivector::e(1)) * e3_plus()
    }

    /// `Â⁺ = M̂ E3⁺ M̂ = (1 + J â)/2`.
    pub fn a_plus(&self) -> Multivector {
        self.m_hat * e3_plus() * self.m_hat
    }
}

/// Sphere state of a spinor; requires `Ω0` invertible and `M² ≠ 0`.
pub fn sphere_state(d: &DiracSpinor) -> Result<SphereState> {
    let (o0, o1) = omega_pair(d);
    let lambda = o0.inverse()? * o1;
    SphereState::build(m_from_lambda(lambda), lambda)
}

/// Sphere state from a complex vector `M` with `e3 ∘ M = 1`.
pub fn sphere_state_from_m(m: &Multivector) -> Result<SphereState> {
    let lambda = lambda_from_m(m);
    SphereState::build(m_from_lambda(lambda), lambda)
}

/// `M̂ = m̂1 cosh φ + I m̂2 sinh φ = e^{φ m̂1×m̂2} m̂1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoostDecomposition {
    pub m1: Multivector,
    pub m2: Multivector,
    pub m1_hat: Multivector,
    /// Zero when the state is unboosted.
    pub m2_hat: Multivector,
    /// Rapidity-like parameter with `cosh φ = |m1|`, `sinh φ = |m2|`.
    pub phi: f64,
    /// Unit boost direction `m̂1 × m̂2` (zero when `φ = 0`).
    pub direction: Multivector,
    /// `v/c = tanh 2φ`.
    pub velocity: f64,
}

impl BoostDecomposition {
    /// `m̂1 cosh φ + I m̂2 sinh φ`.
    pub fn m_hat(&self) -> Multivector {
        self.m1_hat * self.phi.cosh() + big_i() * self.m2_hat * self.phi.sinh()
    }

    /// `e^{φ m̂1×m̂2} m̂1`.
    pub fn m_hat_exponential(&self) -> Result<Multivector> {
        Ok((self.direction * self.phi).exp()? * self.m1_hat)
    }

    /// `e^{φ n} m̂1 e3 m̂1 e^{−φ n}` with `n = m̂1 × m̂2`: the north pole
    /// flipped onto `m̂1 e3 m̂1` and then boosted.
    pub fn boosted_axis(&self) -> Result<Multivector> {
        let b = self.direction * self.phi;
        Ok(b.exp()? * self.m1_hat * Multivector::e(3) * self.m1_hat * (-b).exp()?)
    }
}

fn real_vector(v: [f64; 3]) -> Multivector {
    Multivector::pauli_vector(v)
}

fn norm3(v: [f64; 3]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Splits `M̂` into real vector parts; requires `M²` real and positive.
pub fn boost_decompose(state: &SphereState) -> Result<BoostDecomposition> {
    let sq = state.m_sq;
    let scale = sq.max_norm().max(1.0);
    if sq.imag.abs() > BOOST_TOL * scale
        || sq.imag_pseudo.abs() > BOOST_TOL * scale
        || sq.pseudo.abs() > BOOST_TOL * scale
        || sq.scalar <= 0.0
    {
        return Err(Error::NotRealPositive { re: sq.scalar, pseudo: sq.pseudo });
    }
    let mh = state.m_hat;
    let i = big_i();
    let m1: [f64; 3] = std::array::from_fn(|k| (mh * Multivector::e(k as u8 + 1)).scalar_part().re);
    let m2: [f64; 3] =
        std::array::from_fn(|k| -(mh * i * Multivector::e(k as u8 + 1)).scalar_part().re);
    let (n1, n2) = (norm3(m1), norm3(m2));
    let dot: f64 = (0..3).map(|k| m1[k] * m2[k]).sum();
    let residual = (n1 * n1 - n2 * n2 - 1.0).abs().max(dot.abs());
    if residual > BOOST_TOL * scale {
        return Err(Error::Degenerate(residual));
    }
    let phi = n2.asinh();
    let m1_hat = real_vector(m1.map(|x| x / n1));
    let (m2_hat, direction) = if n2 > 1e-15 {
        let m2_hat = real_vector(m2.map(|x| x / n2));
        (m2_hat, cross(&m1_hat, &m2_hat))
    } else {
        (Multivector::ZERO, Multivector::ZERO)
    };
    Ok(BoostDecomposition {
        m1: real_vector(m1),
        m2: real_vector(m2),
        m1_hat,
        m2_hat,
        phi,
        direction,
        velocity: (2.0 * phi).tanh(),
    })
}

/// `x1 e1 + x2 e2`.
pub fn plane_vector(x: [f64; 2]) -> Multivector {
    real_vector([x[0], x[1], 0.0])
}

/// Spinor with `Ω0 = 1`, `Ω1 = J e^{−J φx}(x1 + i x2)`, whose sphere element
/// is `M = e^{φx e3} x + e3`.
pub fn family_spinor(x: [f64; 2], phi_x: f64) -> DiracSpinor {
    let z = Complex64::new(x[0], x[1]);
    let zero = Complex64::new(0.0, 0.0);
    DiracSpinor {
        phi: [Complex64::new(1.0, 0.0), z * phi_x.cosh(), zero, -z * phi_x.sinh()],
    }
}

/// Second realization of the same family: `Ω0 = e^{J φx}`, `Ω1 = J(x1 + i x2)`.
pub fn family_spinor_boosted(x: [f64; 2], phi_x: f64) -> DiracSpinor {
    let z = Complex64::new(x[0], x[1]);
    let c = Complex64::new;
    DiracSpinor { phi: [c(phi_x.cosh(), 0.0), z, c(phi_x.sinh(), 0.0), c(0.0, 0.0)] }
}

/// `M = e^{φx e3} x + e3 = x cosh φx + e3 + I (e3 × x) sinh φx`.
pub fn family_m(x: [f64; 2], phi_x: f64) -> Multivector {
    let xv = plane_vector(x);
    let e3 = Multivector::e(3);
    xv * phi_x.cosh() + e3 + big_i() * cross(&e3, &xv) * phi_x.sinh()
}

/// `M² = x² + 1 ≥ 1`, so family states are never null.
pub fn family_state(x: [f64; 2], phi_x: f64) -> Result<SphereState> {
    sphere_state(&family_spinor(x, phi_x))
}

/// Velocity readout `sqrt(x² sinh² φx / (x² cosh² φx + 1))` for a family state.
pub fn family_velocity(x: [f64; 2], phi_x: f64) -> f64 {
    let x2 = x[0] * x[0] + x[1] * x[1];
    (x2 * phi_x.sinh().powi(2) / (x2 * phi_x.cosh().powi(2) + 1.0)).sqrt()
}

/// `M⊥ = −e^{φx e3} x / x² + e3`, whose axis is `−â`.
pub fn perp_state(x: [f64; 2], phi_x: f64) -> Result<SphereState> {
    let x2 = x[0] * x[0] + x[1] * x[1];
    if x2 == 0.0 {
        return Err(Error::ZeroVector);
    }
    let e3 = Multivector::e(3);
    let boosted = family_m(x, phi_x) - e3;
    sphere_state_from_m(&(e3 - boosted * (1.0 / x2)))
}
