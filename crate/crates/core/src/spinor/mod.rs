//! Dirac spinors, spinor operators, the Ω-pair and the complex Riemann
//! sphere decomposition.

mod canonical;
mod dirac;
mod sphere;

pub use canonical::{canonical_se, CanonicalSE, PolarForm};
pub use dirac::{
    complex_operators, g_spinor, hermitian_split, odd_operator, omega_pair, spinor_operator,
    substitution_vars, DiracSpinor, SpinorOperator, SubstitutionVars,
};
pub use sphere::{
    boost_decompose, family_m, family_spinor, family_spinor_boosted, family_state,
    family_velocity, lambda_from_m, m_from_lambda, perp_state, plane_vector, sphere_state,
    sphere_state_from_m, BoostDecomposition, SphereState, BOOST_TOL, NULL_STATE_THRESHOLD,
};
