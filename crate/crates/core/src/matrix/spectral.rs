use num_complex::Complex64;

use crate::algebra::Multivector;

/// The primitive idempotents of G(1,3)(C) and the factors they split into.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IdempotentSet {
    pub u_pp: Multivector,
    pub u_pm: Multivector,
    pub u_mp: Multivector,
    pub u_mm: Multivector,
    pub gamma0_plus: Multivector,
    pub gamma0_minus: Multivector,
    pub e3_plus: Multivector,
    pub e3_minus: Multivector,
}

/// `u_{s0 s1} = (1 + s0 γ0)(1 + s1 i γ12) / 4`.
fn primitive(s0: f64, s1: f64) -> Multivector {
    let one = Multivector::one();
    let g12 = Multivector::gamma(1) * Multivector::gamma(2);
    let i = Multivector::imaginary();
    (one + Multivector::gamma(0) * s0) * (one + i * g12 * s1) * 0.25
}

impl IdempotentSet {
    pub fn new() -> Self {
        let one = Multivector::one();
        let big_e3 = e3_complex();
        IdempotentSet {
            u_pp: primitive(1.0, 1.0),
            u_pm: primitive(1.0, -1.0),
            u_mp: primitive(-1.0, 1.0),
            u_mm: primitive(-1.0, -1.0),
            gamma0_plus: (one + Multivector::gamma(0)) * 0.5,
            gamma0_minus: (one - Multivector::gamma(0)) * 0.5,
            e3_plus: (one + big_e3) * 0.5,
            e3_minus: (one - big_e3) * 0.5,
        }
    }

    pub fn primitives(&self) -> [Multivector; 4] {
        [self.u_pp, self.u_pm, self.u_mp, self.u_mm]
    }
}

impl Default for IdempotentSet {
    fn default() -> Self {
        Self::new()
    }
}

/// `E3 = J e3 = -i I e3`.
pub fn e3_complex() -> Multivector {
    Multivector::j() * Multivector::e(3)
}

pub fn u_pp() -> Multivector {
    primitive(1.0, 1.0)
}

pub fn e3_plus() -> Multivector {
    (Multivector::one() + e3_complex()) * 0.5
}

/// Left border `(1, e13, e3, e1)` of the spectral basis.
pub fn row_border() -> [Multivector; 4] {
    let (e1, e3) = (Multivector::e(1), Multivector::e(3));
    [Multivector::one(), e1 * e3, e3, e1]
}

/// Right border `(1, -e13, e3, e1)` of the spectral basis.
pub fn column_border() -> [Multivector; 4] {
    let (e1, e3) = (Multivector::e(1), Multivector::e(3));
    [Multivector::one(), -(e1 * e3), e3, e1]
}

/// The 4x4 array `row_i u_++ column_j` of spectral basis elements.
pub fn spectral_basis() -> [[Multivector; 4]; 4] {
    let (rows, cols, u) = (row_border(), column_border(), u_pp());
    std::array::from_fn(|i| std::array::from_fn(|j| rows[i] * u * cols[j]))
}

/// Matrix entry extraction: `[g]_ij = 4 <column_i g row_j u_++>_0`, using
/// `u_++ G u_++ = C u_++` and the scalar part `1/4` of `u_++`.
pub(crate) fn extract_entries(g: &Multivector) -> [[Complex64; 4]; 4] {
    let (rows, cols, u) = (row_border(), column_border(), u_pp());
    std::array::from_fn(|i| {
        std::array::from_fn(|j| (cols[i] * g * rows[j] * u).scalar_part() * 4.0)
    })
}
