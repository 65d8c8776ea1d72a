use crate::algebra::{Multivector, OmegaRingElement};
use crate::error::Result;
use crate::spinor::{family_state, SphereState};

type Ring = OmegaRingElement;

/// Tolerance for the probability flag and the agreement of the two paths.
pub const PROBABILITY_TOL: f64 = 1e-10;

/// `½(1 + â_Φ∘â_Ω)` computed through two independent routes.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TransitionProbability {
    /// Value from the idempotent contraction `Â_Ω⁺ Â_Φ⁺ Â_Ω⁺ = ½ Â_Ω⁺ (1 + â_Φ∘â_Ω)`.
    pub value: Ring,
    /// `1 − (M_Ω − M_Φ)² / (M_Ω² M_Φ²)`.
    pub projective: Ring,
    pub residual: f64,
    /// Real, within [0, 1], and the two routes agree.
    pub is_probability: bool,
}

fn flag(value: &Ring) -> bool {
    value.imag.abs() <= PROBABILITY_TOL
        && value.imag_pseudo.abs() <= PROBABILITY_TOL
        && value.pseudo.abs() <= PROBABILITY_TOL
        && value.scalar >= -PROBABILITY_TOL
        && value.scalar <= 1.0 + PROBABILITY_TOL
}

/// `Â⁺ B̂⁺ Â⁺ − ½ Â⁺ (1 + â∘b̂)` for `Â⁺ = (1 + J â)/2`.
pub fn triple_idempotent_residual(a_hat: &Multivector, b_hat: &Multivector) -> f64 {
    let j = Multivector::j();
    let one = Multivector::one();
    let ap = (one + j * a_hat) * 0.5;
    let bp = (one + j * b_hat) * 0.5;
    let lhs = ap * bp * ap;
    let rhs = ap * (one + a_hat.sym(b_hat)) * 0.5;
    lhs.dist(&rhs)
}

/// Probability of finding state `phi` after preparing `omega`.
pub fn transition_probability(omega: &SphereState, phi: &SphereState) -> Result<TransitionProbability> {
    let (ao, ap) = (omega.a_plus(), phi.a_plus());
    // Â_Ω⁺ has ring part ½ and â_Ω has none, so the ring part of the
    // contraction is half the coefficient.
    let value = Ring::project(&(ao * ap * ao)) * 2.0;
    let diff = omega.m - phi.m;
    let num = Ring::project(&(diff * diff));
    let projective = Ring::ONE - num * (omega.m_sq * phi.m_sq).inverse()?;
    let residual = value.dist(&projective);
    Ok(TransitionProbability {
        value,
        projective,
        residual,
        is_probability: residual <= PROBABILITY_TOL && flag(&value),
    })
}

/// Closed form for two boosted family states.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FamilyProbability {
    /// Real part and `I` part of the value.
    pub value: Ring,
    pub is_probability: bool,
}

fn dot2(a: [f64; 2], b: [f64; 2]) -> f64 {
    a[0] * b[0] + a[1] * b[1]
}

/// `1 − (x² + y² − 2(cosh(φx−φy) x·y + sinh(φx−φy) e3∧x∧y)) / ((1+x²)(1+y²))`,
/// where `e3∧x∧y = (x1 y2 − x2 y1) I`.
pub fn family_probability(x: [f64; 2], phi_x: f64, y: [f64; 2], phi_y: f64) -> FamilyProbability {
    let (x2, y2, xy) = (dot2(x, x), dot2(y, y), dot2(x, y));
    let delta = phi_x - phi_y;
    let wedge = x[0] * y[1] - x[1] * y[0];
    let denom = (1.0 + x2) * (1.0 + y2);
    let re = 1.0 - (x2 + y2 - 2.0 * delta.cosh() * xy) / denom;
    let pseudo = 2.0 * delta.sinh() * wedge / denom;
    let value = Ring::pseudocomplex(re, pseudo);
    FamilyProbability { value, is_probability: flag(&value) }
}

/// `(x²y² + 2x·y + 1) / ((x²+1)(y²+1))`, the same-frame special case.
pub fn same_frame_probability(x: [f64; 2], y: [f64; 2]) -> f64 {
    let (x2, y2) = (dot2(x, x), dot2(y, y));
    (x2 * y2 + 2.0 * dot2(x, y) + 1.0) / ((x2 + 1.0) * (y2 + 1.0))
}

/// `1 + 2x²(cosh 1 − 1)/(1 + x²)²`: the `x = y`, `φx = 1`, `φy = 2` surface.
pub fn volcano(x: [f64; 2]) -> f64 {
    let x2 = dot2(x, x);
    1.0 + 2.0 * x2 * (1f64.cosh() - 1.0) / (1.0 + x2).powi(2)
}

/// [`transition_probability`] between two family states.
pub fn family_transition(
    x: [f64; 2],
    phi_x: f64,
    y: [f64; 2],
    phi_y: f64,
) -> Result<TransitionProbability> {
    transition_probability(&family_state(x, phi_x)?, &family_state(y, phi_y)?)
}
