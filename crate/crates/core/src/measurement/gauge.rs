use crate::algebra::OmegaRingElement;
use crate::error::Result;
use crate::spinor::canonical_se;

use super::ket::EKet;

type Ring = OmegaRingElement;

/// Tolerance on `det[Ω] = 1` for a physical state.
pub const PHYSICAL_STATE_TOL: f64 = 1e-9;

/// `α = I θ + J φ`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct GaugeParams {
    pub theta: f64,
    pub phi: f64,
}

impl GaugeParams {
    pub fn alpha(&self) -> Ring {
        Ring::PSEUDO * self.theta + Ring::J * self.phi
    }
}

/// `e^α |Ω⟩_E`.
pub fn gauge_transform(k: &EKet, g: GaugeParams) -> EKet {
    let e = g.alpha().exp();
    let (o0, o1) = k.omega_pair();
    EKet::new(e * o0, e * o1)
}

/// Finds `α = −I θ1 − J φ2` with `det[Ω] = ρ² e^{2Iθ1}` and `φ2` the real
/// part of `ω2`, so that the transformed determinant is real and
/// `Ω0′/√(Ω0′Ω̄0′)` is a pure `i`-phase.
pub fn gauge_normalize(k: &EKet) -> Result<(EKet, GaugeParams)> {
    let det = k.det();
    det.inverse()?;
    let theta1 = 0.5 * det.pseudo.atan2(det.scalar);
    let canonical = canonical_se(&k.spinor())?;
    let params = GaugeParams { theta: -theta1, phi: -canonical.omega2.scalar };
    Ok((gauge_transform(k, params), params))
}

/// `det[Ω] = 1` within [`PHYSICAL_STATE_TOL`].
pub fn is_physical(k: &EKet) -> bool {
    k.det().dist(&Ring::ONE) <= PHYSICAL_STATE_TOL
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spinor::DiracSpinor;
    use num_complex::Complex64;

    fn sample() -> EKet {
        let c = Complex64::new;
        EKet::from_spinor(
            &DiracSpinor::new([c(0.9, 0.2), c(-0.3, 0.5), c(0.1, -0.4), c(0.6, 0.7)]).unwrap(),
        )
    }

    #[test]
    fn normal_state_needs_no_gauge() {
        let k = EKet::from_spinor(&DiracSpinor::basis(0));
        let (n, g) = gauge_normalize(&k).unwrap();
        assert!(g.theta.abs() < 1e-15 && g.phi.abs() < 1e-15);
        assert!(n.ideal_element().approx_eq(k.ideal_element(), 1e-15));
        assert!(is_physical(&n));
    }

    #[test]
    fn determinant_picks_up_twice_the_i_phase() {
        let k = sample();
        let g = GaugeParams { theta: 0.4, phi: -0.9 };
        let t = gauge_transform(&k, g);
        let expected = Ring::PSEUDO.scale(0.8).exp() * k.det();
        assert!(t.det().dist(&expected) < 1e-12);
    }

    #[test]
    fn recovers_applied_phase() {
        let normal = EKet::from_spinor(&DiracSpinor::basis(0));
        let rotated = gauge_transform(&normal, GaugeParams { theta: 0.3, phi: 0.0 });
        assert!(rotated.det().dist(&Ring::PSEUDO.scale(0.6).exp()) < 1e-14);
        let (_, g) = gauge_normalize(&rotated).unwrap();
        assert!((g.theta + 0.3).abs() < 1e-12);
    }

    #[test]
    fn normalized_state_is_real_with_i_phase() {
        let (n, _) = gauge_normalize(&sample()).unwrap();
        let det = n.det();
        assert!(det.pseudo.abs() < 1e-10 && det.imag.abs() < 1e-10 && det.imag_pseudo.abs() < 1e-10);
        let (o0, _) = n.omega_pair();
        let phase = o0 * (o0 * o0.conj_i()).sqrt().unwrap().inverse().unwrap();
        assert!(phase.pseudo.abs() < 1e-10 && phase.imag_pseudo.abs() < 1e-10);
    }
}
