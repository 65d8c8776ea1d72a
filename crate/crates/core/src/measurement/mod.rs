//! Bra-ket layer: g-spinor and E-spinor inner products, gauge
//! normalization, and transition probabilities between sphere states.

mod gauge;
mod ket;
mod probability;

pub use gauge::{gauge_normalize, gauge_transform, is_physical, GaugeParams, PHYSICAL_STATE_TOL};
pub use ket::{
    bra, braket, braket_components, braket_coordinates, braket_spacetime,
    braket_spacetime_as_printed, dirac_from_e, e_inner, e_inner_canonical, e_outer,
    e_outer_canonical, simplified_inner, special_condition, spinor_from_pair, EKet, Ket,
};
pub use probability::{
    family_probability, family_transition, same_frame_probability, transition_probability,
    triple_idempotent_residual, volcano, FamilyProbability, TransitionProbability,
    PROBABILITY_TOL,
};
