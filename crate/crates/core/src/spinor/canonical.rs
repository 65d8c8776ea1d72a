//! Canonical forms of the parity-invariant part `S_E = S + S# = Ω E3⁺`.

use super::dirac::{g_spinor, omega_pair, DiracSpinor};
use super::sphere::{sphere_state, SphereState};
use crate::algebra::{Multivector, OmegaRingElement};
use crate::error::{Error, Result};
use crate::matrix::e3_plus;

type Ring = OmegaRingElement;

/// Below this `|b̂ sin z|` the rotation plane is undefined and `e1` is used.
const PLANE_THRESHOLD: f64 = 1e-12;

/// `g = cos z + I b̂ sin z = e^{I b̂ z}` for a product `g` of two complex
/// unit vectors, with `z` in the ring and `b̂` a complex unit vector.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PolarForm {
    pub z: Ring,
    pub b_hat: Multivector,
}

impl PolarForm {
    /// Splits `g` into its ring part `cos z` and its bivector part `I b̂ sin z`.
    pub fn of(g: &Multivector) -> Result<Self> {
        let c = Ring::project(g);
        let w = *g - c.to_multivector();
        let v = -(Multivector::pseudoscalar() * w);
        let v_sq = Ring::project(&(v * v));
        let (b_hat, s) = if v.max_norm() < PLANE_THRESHOLD {
            (Multivector::e(1), Ring::ZERO)
        } else {
            let s = v_sq.sqrt().map_err(|_| Error::Degenerate(v_sq.max_norm()))?;
            (s.inverse()?.to_multivector() * v, s)
        };
        let i = Ring::I_UNIT;
        let z = -(i * (c + i * s).ln()?);
        Ok(PolarForm { z, b_hat })
    }

    /// `cos z + I b̂ sin z` from the ring functions.
    pub fn closed_form(&self) -> Multivector {
        self.z.cos().to_multivector()
            + Multivector::pseudoscalar() * self.b_hat * self.z.sin().to_multivector()
    }

    /// `exp(I b̂ z)` from the series exponential.
    pub fn exponential(&self) -> Result<Multivector> {
        (Multivector::pseudoscalar() * self.b_hat * self.z.to_multivector()).exp()
    }
}

/// `S_E` and its canonical decompositions.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CanonicalSE {
    pub s_e: Multivector,
    /// `e^{ω1} = √det[Ω]`.
    pub omega1: Ring,
    /// `e^{J ω2} = Ω0 / √(Ω0 Ω̄0)`.
    pub omega2: Ring,
    pub state: SphereState,
    /// `M̂ e3 = e^{I b̂e ze}`.
    pub e_polar: PolarForm,
    /// `â M̂ = e^{I b̂a za}`.
    pub a_polar: PolarForm,
}

impl CanonicalSE {
    /// `e^ω` with `ω = ω1 + ω2 J`.
    pub fn exp_omega(&self) -> Ring {
        (self.omega1 + self.omega2 * Ring::J).exp()
    }

    /// The forms `J e^ω M̂ E3⁺`, `M̂ e3 e^{ω1 + ω2 e3} E3⁺`,
    /// `e^{ω1 + ω2 â} â M̂ E3⁺`, `J e^ω Â3⁺ M̂`,
    /// `e^{ω1} e^{I b̂e ze} e^{ω2 e3} E3⁺` and `e^{ω1} e^{ω2 â} e^{I b̂a za} E3⁺`.
    pub fn forms(&self) -> Result<[Multivector; 6]> {
        let j = Multivector::j();
        let p = e3_plus();
        let e3 = Multivector::e(3);
        let (m_hat, a_hat) = (self.state.m_hat, self.state.a_hat);
        let w = self.omega2.to_multivector();
        let e_w1 = self.omega1.exp().to_multivector();
        let e_w = self.exp_omega().to_multivector();
        let e_w2_e3 = (w * e3).exp()?;
        let e_w2_a = (w * a_hat).exp()?;
        Ok([
            j * e_w * m_hat * p,
            m_hat * e3 * e_w1 * e_w2_e3 * p,
            e_w1 * e_w2_a * a_hat * m_hat * p,
            j * e_w * self.state.a_plus() * m_hat,
            e_w1 * self.e_polar.exponential()? * e_w2_e3 * p,
            e_w1 * e_w2_a * self.a_polar.exponential()? * p,
        ])
    }

    /// Largest reconstruction error over all forms.
    pub fn max_residual(&self) -> Result<f64> {
        Ok(self.forms()?.iter().map(|f| f.dist(&self.s_e)).fold(0.0, f64::max))
    }
}

/// Canonical decomposition of `S_E` for a spinor with invertible `det[Ω]`
/// and `Ω0`.
///
/// `e^{Jω2}` is taken as `Ω0 √(M²) / e^{ω1}` rather than from an independent
/// square root of `Ω0Ω̄0`: the two agree up to the sign of the root, and this
/// choice keeps every branch consistent with `e^{ω1}`.
pub fn canonical_se(d: &DiracSpinor) -> Result<CanonicalSE> {
    let (o0, o1) = omega_pair(d);
    let det = o0 * o0.conj_i() - o1.conj_i() * o1;
    let root_det = det.sqrt()?;
    let state = sphere_state(d)?;
    let omega1 = root_det.ln()?;
    let e_j_omega2 = o0 * state.m_sq.sqrt()? * root_det.inverse()?;
    let omega2 = Ring::J * e_j_omega2.ln()?;
    let s = g_spinor(d);
    let s_e = s + s.grade_involute();
    let e_polar = PolarForm::of(&(state.m_hat * Multivector::e(3)))?;
    let a_polar = PolarForm::of(&(state.a_hat * state.m_hat))?;
    Ok(CanonicalSE { s_e, omega1, omega2, state, e_polar, a_polar })
}
