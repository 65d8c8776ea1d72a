//! Seeded generators for random multivectors, spinors and family states.
//!
//! Every suite draws from a ChaCha8 stream keyed by a single `u64`, so a
//! seed reproduces the same inputs on every platform.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Multivector;
use crate::matrix::det_omega;
use crate::spinor::{DiracSpinor, SpinorOperator};

/// Random spinors with `|det[Ω]|` below this are redrawn by
/// [`SeededRng::regular_spinor`].
pub const REGULAR_DET_MIN: f64 = 0.1;

pub struct SeededRng {
    rng: ChaCha8Rng,
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Uniform on `[lo, hi]`.
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.random_range(lo..=hi)
    }

    /// Real and imaginary parts uniform on `[−1, 1]`.
    pub fn complex(&mut self) -> Complex64 {
        Complex64::new(self.uniform(-1.0, 1.0), self.uniform(-1.0, 1.0))
    }

    /// All sixteen coefficients drawn with [`SeededRng::complex`].
    pub fn multivector(&mut self) -> Multivector {
        Multivector::from_coeffs(std::array::from_fn(|_| self.complex()))
    }

    /// Sixteen real coefficients uniform on `[−1, 1]`.
    pub fn real_multivector(&mut self) -> Multivector {
        Multivector::from_coeffs(std::array::from_fn(|_| Complex64::new(self.uniform(-1.0, 1.0), 0.0)))
    }

    /// Components uniform in `[−1, 1]²`.
    pub fn spinor(&mut self) -> DiracSpinor {
        DiracSpinor { phi: std::array::from_fn(|_| self.complex()) }
    }

    /// A spinor with `|det[Ω]| ≥` [`REGULAR_DET_MIN`], by rejection.
    pub fn regular_spinor(&mut self) -> DiracSpinor {
        loop {
            let d = self.spinor();
            let det = det_omega(&SpinorOperator::from_spinor(&d));
            if det.scalar.hypot(det.pseudo) >= REGULAR_DET_MIN {
                return d;
            }
        }
    }

    /// A point `x` of the plane with coordinates uniform on `[−r, r]`.
    pub fn plane_point(&mut self, r: f64) -> [f64; 2] {
        [self.uniform(-r, r), self.uniform(-r, r)]
    }
}
