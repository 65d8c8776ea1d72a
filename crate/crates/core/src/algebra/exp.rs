//! Exponential on the full 16-dimensional algebra by scaling and squaring.

use super::multivector::Multivector;
use crate::error::{Error, Result};

/// Inputs are halved until their max-norm is at most this before the series.
const SCALING_THRESHOLD: f64 = 0.5;
const TERM_CUTOFF: f64 = 1e-16;
const OVERFLOW_LIMIT: f64 = 1e300;
const MAX_TERMS: u32 = 200;

impl Multivector {
    /// Power-series exponential.
    ///
    /// The argument is scaled by `2^-s` so its largest coefficient is at most
    /// 0.5, the Taylor series is summed until a term drops below 1e-16
    /// (relative to the partial sum), and the result is squared `s` times.
    pub fn exp(&self) -> Result<Multivector> {
        if !self.is_finite() {
            return Err(Error::NonFinite("exp argument"));
        }
        let norm = self.max_norm();
        let squarings = if norm > SCALING_THRESHOLD {
            (norm / SCALING_THRESHOLD).log2().ceil() as i32
        } else {
            0
        };
        let scaled = *self * 2f64.powi(-squarings);

        let mut sum = Multivector::one();
        let mut term = Multivector::one();
        for k in 1..=MAX_TERMS {
            term = term * scaled * (1.0 / f64::from(k));
            sum += term;
            if term.max_norm() < TERM_CUTOFF * sum.max_norm().max(1.0) {
                break;
            }
        }

        for _ in 0..squarings {
            sum = sum * sum;
            if sum.max_norm() > OVERFLOW_LIMIT || !sum.is_finite() {
                return Err(Error::Overflow);
            }
        }
        Ok(sum)
    }
}
