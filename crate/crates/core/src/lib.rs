//! Numerical engine for the complexified spacetime algebra G(1,3)(C).
//!
//! Multivectors are dense arrays of sixteen complex coefficients. On top of
//! the algebra sit the spectral-basis matrix representation, Dirac spinors
//! and their operators, the complex Riemann sphere picture of spin states,
//! transition probabilities and the Fierz identities of the bilinear
//! observables.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod fierz;
pub mod matrix;
pub mod measurement;
pub mod random;
pub mod spinor;

pub use algebra::{Multivector, OmegaRingElement};
pub use error::{Error, Result};
