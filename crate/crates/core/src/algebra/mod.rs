//! Dense arithmetic for the complexified spacetime algebra Cl(1,3) ⊗ C.

mod blade;
mod exp;
mod multivector;
mod pauli;
mod ring;

pub use blade::{blade_product, BladeIndex};
pub use multivector::{complex, ComplexScalar, Multivector};
pub(crate) use multivector::fmt_complex;
pub use pauli::{
    cross, four_conjugation_average, pauli_conjugations, pauli_dagger, pauli_embed,
    pauli_inversion, PauliParts,
};
pub use ring::{OmegaRingElement, ZERO_DIVISOR_THRESHOLD};

/// Default absolute tolerance for coefficient comparisons.
pub const DEFAULT_TOLERANCE: f64 = 1e-10;
