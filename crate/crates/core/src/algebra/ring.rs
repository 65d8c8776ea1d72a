//! The commutative ring span{1, i, I, iI} that carries the Ω-pair.
//!
//! With `J = -iI` (so `J^2 = 1`) every element is `a + bJ` for complex `a`,
//! `b`, and the idempotents `(1 ± J)/2` split the ring into C ⊕ C. Inverse,
//! square root, exp and log all act componentwise in that splitting.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::blade::BladeIndex;
use super::multivector::{fmt_sig, Multivector};
use crate::error::{Error, Result};

/// A projection smaller than this makes an element a zero divisor.
pub const ZERO_DIVISOR_THRESHOLD: f64 = 1e-12;

/// `scalar + imag·i + pseudo·I + imag_pseudo·iI` with real coordinates.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct OmegaRingElement {
    pub scalar: f64,
    pub imag: f64,
    pub pseudo: f64,
    pub imag_pseudo: f64,
}

impl OmegaRingElement {
    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Self = Self::new(1.0, 0.0, 0.0, 0.0);
    /// The imaginary unit `i`.
    pub const I_UNIT: Self = Self::new(0.0, 1.0, 0.0, 0.0);
    /// The pseudoscalar `I`.
    pub const PSEUDO: Self = Self::new(0.0, 0.0, 1.0, 0.0);
    /// `J = -iI`.
    pub const J: Self = Self::new(0.0, 0.0, 0.0, -1.0);

    pub const fn new(scalar: f64, imag: f64, pseudo: f64, imag_pseudo: f64) -> Self {
        OmegaRingElement { scalar, imag, pseudo, imag_pseudo }
    }

    pub fn real(x: f64) -> Self {
        Self::new(x, 0.0, 0.0, 0.0)
    }

    pub fn complex(c: Complex64) -> Self {
        Self::new(c.re, c.im, 0.0, 0.0)
    }

    /// `a + bI` with real `a`, `b`.
    pub fn pseudocomplex(a: f64, b: f64) -> Self {
        Self::new(a, 0.0, b, 0.0)
    }

    /// `a + bJ` for complex `a`, `b`.
    pub fn from_j_split(a: Complex64, b: Complex64) -> Self {
        // bJ = -i b I  =>  I coefficient Im(b), iI coefficient -Re(b)
        Self::new(a.re, a.im, b.im, -b.re)
    }

    /// Inverse of [`Self::from_j_split`].
    pub fn j_split(&self) -> (Complex64, Complex64) {
        (
            Complex64::new(self.scalar, self.imag),
            Complex64::new(-self.imag_pseudo, self.pseudo),
        )
    }

    /// Images under the projections `(1 + J)/2` and `(1 - J)/2`.
    pub fn components(&self) -> (Complex64, Complex64) {
        let (a, b) = self.j_split();
        (a + b, a - b)
    }

    pub fn from_components(plus: Complex64, minus: Complex64) -> Self {
        Self::from_j_split((plus + minus) * 0.5, (plus - minus) * 0.5)
    }

    fn map_components(&self, f: impl Fn(Complex64) -> Complex64) -> Self {
        let (p, m) = self.components();
        Self::from_components(f(p), f(m))
    }

    fn require_invertible(&self) -> Result<()> {
        let (p, m) = self.components();
        let magnitude = p.norm().min(m.norm());
        if magnitude < ZERO_DIVISOR_THRESHOLD {
            Err(Error::ZeroDivisor { magnitude })
        } else {
            Ok(())
        }
    }

    pub fn is_zero_divisor(&self) -> bool {
        self.require_invertible().is_err()
    }

    /// `i -> -i`.
    pub fn conj_i(&self) -> Self {
        Self::new(self.scalar, -self.imag, self.pseudo, -self.imag_pseudo)
    }

    /// `I -> -I`.
    pub fn conj_pseudo(&self) -> Self {
        Self::new(self.scalar, self.imag, -self.pseudo, -self.imag_pseudo)
    }

    pub fn inverse(&self) -> Result<Self> {
        self.require_invertible()?;
        Ok(self.map_components(|z| z.inv()))
    }

    /// Principal square root in each C ⊕ C component.
    pub fn sqrt(&self) -> Result<Self> {
        self.require_invertible()?;
        Ok(self.map_components(|z| z.sqrt()))
    }

    pub fn exp(&self) -> Self {
        self.map_components(|z| z.exp())
    }

    /// Principal logarithm in each component.
    pub fn ln(&self) -> Result<Self> {
        self.require_invertible()?;
        Ok(self.map_components(|z| z.ln()))
    }

    pub fn cos(&self) -> Self {
        self.map_components(|z| z.cos())
    }

    pub fn sin(&self) -> Self {
        self.map_components(|z| z.sin())
    }

    pub fn to_multivector(&self) -> Multivector {
        Multivector::complex_scalar(Complex64::new(self.scalar, self.imag))
            + Multivector::blade(
                BladeIndex::PSEUDOSCALAR,
                Complex64::new(self.pseudo, self.imag_pseudo),
            )
    }

    /// Reads the ring part (blades `1` and `I`) of a multivector, ignoring
    /// all other blades.
    pub fn project(m: &Multivector) -> Self {
        let s = m.scalar_part();
        let p = m.pseudoscalar_part();
        Self::new(s.re, s.im, p.re, p.im)
    }

    /// Like [`Self::project`] but `None` if other blades exceed `tol`.
    pub fn from_multivector(m: &Multivector, tol: f64) -> Option<Self> {
        let r = Self::project(m);
        (m.dist(&r.to_multivector()) <= tol).then_some(r)
    }

    /// True when the element lies in the real span of `{1, I}`.
    pub fn is_pseudocomplex(&self, tol: f64) -> bool {
        self.imag.abs() <= tol && self.imag_pseudo.abs() <= tol
    }

    pub fn max_norm(&self) -> f64 {
        [self.scalar, self.imag, self.pseudo, self.imag_pseudo]
            .iter()
            .map(|x| x.abs())
            .fold(0.0, f64::max)
    }

    pub fn dist(&self, other: &Self) -> f64 {
        (*self - *other).max_norm()
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.scalar * s, self.imag * s, self.pseudo * s, self.imag_pseudo * s)
    }
}

impl Add for OmegaRingElement {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(
            self.scalar + o.scalar,
            self.imag + o.imag,
            self.pseudo + o.pseudo,
            self.imag_pseudo + o.imag_pseudo,
        )
    }
}

impl Sub for OmegaRingElement {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Neg for OmegaRingElement {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}

impl Mul for OmegaRingElement {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let (a, b) = self.j_split();
        let (c, d) = o.j_split();
        Self::from_j_split(a * c + b * d, a * d + b * c)
    }
}

impl Mul<f64> for OmegaRingElement {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        self.scale(s)
    }
}

impl Mul<Multivector> for OmegaRingElement {
    type Output = Multivector;
    fn mul(self, m: Multivector) -> Multivector {
        self.to_multivector() * m
    }
}

impl From<OmegaRingElement> for Multivector {
    fn from(r: OmegaRingElement) -> Self {
        r.to_multivector()
    }
}

impl fmt::Display for OmegaRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = [
            (self.scalar, ""),
            (self.imag, "i"),
            (self.pseudo, "I"),
            (self.imag_pseudo, "iI"),
        ];
        let terms: Vec<String> = parts
            .iter()
            .filter(|(c, _)| c.abs() > 1e-12)
            .map(|(c, u)| if u.is_empty() { fmt_sig(*c) } else { format!("{}{u}", fmt_sig(*c)) })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&super::multivector::join_signed(&terms))
        }
    }
}
