use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_complex::Complex64;

use super::blade::{product_table, BladeIndex};
use crate::error::{Error, Result};

/// Complex coefficient field of G(1,3)(C). The imaginary unit commutes with
/// every blade.
pub type ComplexScalar = Complex64;

/// Builds a complex scalar, rejecting NaN and infinities.
pub fn complex(re: f64, im: f64) -> Result<ComplexScalar> {
    if re.is_finite() && im.is_finite() {
        Ok(Complex64::new(re, im))
    } else {
        Err(Error::NonFinite("complex scalar"))
    }
}

const ZERO_C: Complex64 = Complex64::new(0.0, 0.0);

/// Element of the complexified spacetime algebra: sixteen complex
/// coefficients indexed by [`BladeIndex`] mask.
#[derive(Clone, Copy, PartialEq)]
pub struct Multivector {
    coeffs: [Complex64; 16],
}

impl Default for Multivector {
    fn default() -> Self {
        Self::ZERO
    }
}

impl Multivector {
    pub const ZERO: Multivector = Multivector { coeffs: [ZERO_C; 16] };

    pub const fn from_coeffs(coeffs: [Complex64; 16]) -> Self {
        Multivector { coeffs }
    }

    pub fn zero() -> Self {
        Self::ZERO
    }

    pub fn one() -> Self {
        Self::scalar(1.0)
    }

    pub fn scalar(s: f64) -> Self {
        Self::complex_scalar(Complex64::new(s, 0.0))
    }

    pub fn complex_scalar(c: Complex64) -> Self {
        Self::blade(BladeIndex::SCALAR, c)
    }

    pub fn blade(b: BladeIndex, c: Complex64) -> Self {
        let mut m = Self::ZERO;
        m.coeffs[b.index()] = c;
        m
    }

    /// Spacetime generator `gamma_mu`, `mu` in `0..4`.
    pub fn gamma(mu: u8) -> Self {
        Self::blade(BladeIndex::new(1 << mu), Complex64::new(1.0, 0.0))
    }

    /// Rest-frame vector `e_k = gamma_k gamma_0`, `k` in `1..=3`.
    pub fn e(k: u8) -> Self {
        assert!((1..=3).contains(&k), "rest-frame index must be 1, 2 or 3");
        Self::gamma(k) * Self::gamma(0)
    }

    /// Pseudoscalar `I = g0123 = e1 e2 e3`.
    pub fn pseudoscalar() -> Self {
        Self::blade(BladeIndex::PSEUDOSCALAR, Complex64::new(1.0, 0.0))
    }

    /// The commuting imaginary unit `i`.
    pub fn imaginary() -> Self {
        Self::complex_scalar(Complex64::i())
    }

    /// `J = -i I`, which squares to `+1` and commutes with the even subalgebra.
    pub fn j() -> Self {
        Self::blade(BladeIndex::PSEUDOSCALAR, Complex64::new(0.0, -1.0))
    }

    /// Real G3 vector `v1 e1 + v2 e2 + v3 e3`.
    pub fn pauli_vector(v: [f64; 3]) -> Self {
        (1..=3u8).fold(Self::ZERO, |acc, k| acc + Self::e(k) * v[k as usize - 1])
    }

    /// Spacetime vector `sum v_mu gamma_mu`.
    pub fn spacetime_vector(v: [f64; 4]) -> Self {
        (0..4u8).fold(Self::ZERO, |acc, mu| acc + Self::gamma(mu) * v[mu as usize])
    }

    pub fn coeffs(&self) -> &[Complex64; 16] {
        &self.coeffs
    }

    pub fn coeff(&self, b: BladeIndex) -> Complex64 {
        self.coeffs[b.index()]
    }

    pub fn scalar_part(&self) -> Complex64 {
        self.coeffs[0]
    }

    pub fn pseudoscalar_part(&self) -> Complex64 {
        self.coeffs[15]
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.re.is_finite() && c.im.is_finite())
    }

    pub fn map(&self, mut f: impl FnMut(BladeIndex, Complex64) -> Complex64) -> Self {
        let mut out = *self;
        for (m, c) in out.coeffs.iter_mut().enumerate() {
            *c = f(BladeIndex::new(m as u8), *c);
        }
        out
    }

    pub fn geometric_product(&self, other: &Self) -> Self {
        let table = product_table();
        let mut out = [ZERO_C; 16];
        for (a, ca) in self.coeffs.iter().enumerate() {
            if ca.re == 0.0 && ca.im == 0.0 {
                continue;
            }
            for (b, cb) in other.coeffs.iter().enumerate() {
                if cb.re == 0.0 && cb.im == 0.0 {
                    continue;
                }
                let (s, r) = table[a][b];
                out[r as usize] += ca * cb * s;
            }
        }
        Multivector { coeffs: out }
    }

    /// Grade-`k` part; zero for `k > 4`.
    pub fn grade(&self, k: u32) -> Self {
        self.map(|b, c| if b.grade() == k { c } else { ZERO_C })
    }

    pub fn even(&self) -> Self {
        self.map(|b, c| if b.grade() % 2 == 0 { c } else { ZERO_C })
    }

    pub fn odd(&self) -> Self {
        self.map(|b, c| if b.grade() % 2 == 1 { c } else { ZERO_C })
    }

    pub fn is_even(&self, tol: f64) -> bool {
        self.odd().max_norm() <= tol
    }

    /// Reversion: sign `(-1)^(k(k-1)/2)` on grade `k`.
    pub fn reverse(&self) -> Self {
        self.map(|b, c| {
            let k = b.grade();
            if (k * k.saturating_sub(1) / 2) % 2 == 0 {
                c
            } else {
                -c
            }
        })
    }

    /// Parity `gamma_mu -> -gamma_mu`: negates odd grades.
    pub fn grade_involute(&self) -> Self {
        self.map(|b, c| if b.grade() % 2 == 0 { c } else { -c })
    }

    /// `i -> -i` on every coefficient.
    pub fn complex_conjugate(&self) -> Self {
        self.map(|_, c| c.conj())
    }

    /// Parity composed with complex conjugation.
    pub fn star(&self) -> Self {
        self.complex_conjugate().grade_involute()
    }

    /// Symmetric product `(ab + ba) / 2`.
    pub fn sym(&self, other: &Self) -> Self {
        (self * other + other * self) * 0.5
    }

    /// Anti-symmetric product `(ab - ba) / 2`.
    pub fn antisym(&self, other: &Self) -> Self {
        (self * other - other * self) * 0.5
    }

    fn bladewise(&self, other: &Self, keep: impl Fn(BladeIndex, BladeIndex) -> Option<u32>) -> Self {
        let table = product_table();
        let mut out = [ZERO_C; 16];
        for (a, ca) in self.coeffs.iter().enumerate() {
            for (b, cb) in other.coeffs.iter().enumerate() {
                let (ba, bb) = (BladeIndex::new(a as u8), BladeIndex::new(b as u8));
                if let Some(k) = keep(ba, bb) {
                    let (s, r) = table[a][b];
                    if r.count_ones() == k {
                        out[r as usize] += ca * cb * s;
                    }
                }
            }
        }
        Multivector { coeffs: out }
    }

    /// Outer product: grade `r + s` part of each blade pair product.
    pub fn wedge(&self, other: &Self) -> Self {
        self.bladewise(other, |a, b| Some(a.grade() + b.grade()))
    }

    /// Inner ("fat dot") product: grade `|r - s|` part of each blade pair
    /// product. For two vectors this is the metric scalar product.
    pub fn dot(&self, other: &Self) -> Self {
        self.bladewise(other, |a, b| Some(a.grade().abs_diff(b.grade())))
    }

    pub fn scale(&self, c: Complex64) -> Self {
        self.map(|_, x| x * c)
    }

    /// Largest coefficient magnitude.
    pub fn max_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn dist(&self, other: &Self) -> f64 {
        (self - other).max_norm()
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.dist(other) <= tol
    }

    /// Integer power; negative exponents go through [`Multivector::inverse`].
    pub fn powi(&self, n: i32) -> Result<Self> {
        let base = if n < 0 { self.inverse()? } else { *self };
        let mut e = n.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * sq;
            }
            sq = sq * sq;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Inverse through the 4x4 matrix representation.
    pub fn inverse(&self) -> Result<Self> {
        let m = crate::matrix::to_matrix(self);
        Ok(crate::matrix::from_matrix(&m.inverse()?))
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multivector({self})")
    }
}

/// Formats a real number with up to 12 significant digits, trimming
/// trailing zeros.
pub(crate) fn fmt_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let s = format!("{:.*e}", 11, x);
    let (mant, exp) = s.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("exponent");
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        let fixed = format!("{:.*}", decimals, x);
        trim_zeros(&fixed)
    } else {
        format!("{}e{}", trim_zeros(mant), exp)
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        let t = s.trim_end_matches('0').trim_end_matches('.');
        if t == "-0" { "0".to_string() } else { t.to_string() }
    } else {
        s.to_string()
    }
}

/// `a+bi` with both parts at 12 significant digits.
pub(crate) fn fmt_complex(c: Complex64) -> String {
    let im = fmt_sig(c.im);
    if im.starts_with('-') {
        format!("{}{}i", fmt_sig(c.re), im)
    } else {
        format!("{}+{}i", fmt_sig(c.re), im)
    }
}

/// Joins terms with ` + `, or ` - ` in place of a leading minus sign.
pub(crate) fn join_signed(terms: &[String]) -> String {
    let mut out = String::new();
    for (k, t) in terms.iter().enumerate() {
        match (k, t.strip_prefix('-')) {
            (0, _) => out.push_str(t),
            (_, Some(rest)) => {
                out.push_str(" - ");
                out.push_str(rest);
            }
            (_, None) => {
                out.push_str(" + ");
                out.push_str(t);
            }
        }
    }
    out
}

impl fmt::Display for Multivector {
    /// Nonzero blades in canonical order, e.g. `1·g0 + (0.5+2i)·g12`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tol = f.precision().map_or(1e-12, |p| 10f64.powi(-(p as i32)));
        let mut terms = Vec::new();
        for b in BladeIndex::canonical_order() {
            let c = self.coeff(b);
            if c.norm() <= tol {
                continue;
            }
            let coef = if c.im.abs() <= tol {
                fmt_sig(c.re)
            } else if c.re.abs() <= tol {
                format!("{}i", fmt_sig(c.im))
            } else {
                format!("({})", fmt_complex(c))
            };
            terms.push(if b == BladeIndex::SCALAR { coef } else { format!("{coef}·{b}") });
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&join_signed(&terms))
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<Multivector> for Multivector {
            type Output = Multivector;
            fn $method(self, rhs: Multivector) -> Multivector {
                $body(&self, &rhs)
            }
        }
        impl $tr<&Multivector> for Multivector {
            type Output = Multivector;
            fn $method(self, rhs: &Multivector) -> Multivector {
                $body(&self, rhs)
            }
        }
        impl $tr<Multivector> for &Multivector {
            type Output = Multivector;
            fn $method(self, rhs: Multivector) -> Multivector {
                $body(self, &rhs)
            }
        }
        impl $tr<&Multivector> for &Multivector {
            type Output = Multivector;
            fn $method(self, rhs: &Multivector) -> Multivector {
                $body(self, rhs)
            }
        }
    };
}

fn add_impl(a: &Multivector, b: &Multivector) -> Multivector {
    let mut out = *a;
    for (o, x) in out.coeffs.iter_mut().zip(b.coeffs.iter()) {
        *o += x;
    }
    out
}

fn sub_impl(a: &Multivector, b: &Multivector) -> Multivector {
    let mut out = *a;
    for (o, x) in out.coeffs.iter_mut().zip(b.coeffs.iter()) {
        *o -= x;
    }
    out
}

forward_binop!(Add, add, add_impl);
forward_binop!(Sub, sub, sub_impl);
forward_binop!(Mul, mul, Multivector::geometric_product);

impl AddAssign for Multivector {
    fn add_assign(&mut self, rhs: Multivector) {
        *self = add_impl(self, &rhs);
    }
}

impl SubAssign for Multivector {
    fn sub_assign(&mut self, rhs: Multivector) {
        *self = sub_impl(self, &rhs);
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.map(|_, c| -c)
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        -*self
    }
}

impl Mul<f64> for Multivector {
    type Output = Multivector;
    fn mul(self, s: f64) -> Multivector {
        self.map(|_, c| c * s)
    }
}

impl Mul<f64> for &Multivector {
    type Output = Multivector;
    fn mul(self, s: f64) -> Multivector {
        *self * s
    }
}

impl Mul<Complex64> for Multivector {
    type Output = Multivector;
    fn mul(self, s: Complex64) -> Multivector {
        self.scale(s)
    }
}

impl Mul<Multivector> for f64 {
    type Output = Multivector;
    fn mul(self, m: Multivector) -> Multivector {
        m * self
    }
}

impl Mul<Multivector> for Complex64 {
    type Output = Multivector;
    fn mul(self, m: Multivector) -> Multivector {
        m.scale(self)
    }
}

impl std::iter::Sum for Multivector {
    fn sum<I: Iterator<Item = Multivector>>(iter: I) -> Self {
        iter.fold(Multivector::ZERO, |a, b| a + b)
    }
}
