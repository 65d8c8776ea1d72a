//! The spectral-basis isomorphism between G(1,3)(C) and 4x4 complex
//! matrices, plus the 2x2 Ω-matrix representation of even elements.

mod omega;
mod spectral;

use std::fmt;
use std::ops::{Add, Mul};
use std::sync::OnceLock;

use num_complex::Complex64;

use crate::algebra::{fmt_complex, BladeIndex, Multivector};
use crate::error::{Error, Result};

pub use omega::{det_omega, e_matrices, omega_matrix, pauli_representation, OmegaMatrix};
pub use spectral::{
    column_border, e3_complex, e3_plus, row_border, spectral_basis, u_pp, IdempotentSet,
};

/// Pivots smaller than this are treated as zero during elimination.
pub const PIVOT_THRESHOLD: f64 = 1e-14;
/// A matrix with `|det|` below this has no inverse.
pub const SINGULAR_THRESHOLD: f64 = 1e-12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Dense 4x4 complex matrix, the image `[g]` of a multivector.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MatrixRep {
    pub entries: [[Complex64; 4]; 4],
}

impl MatrixRep {
    pub const fn new(entries: [[Complex64; 4]; 4]) -> Self {
        MatrixRep { entries }
    }

    pub fn zero() -> Self {
        MatrixRep { entries: [[ZERO; 4]; 4] }
    }

    pub fn identity() -> Self {
        Self::diagonal([ONE; 4])
    }

    pub fn diagonal(d: [Complex64; 4]) -> Self {
        let mut m = Self::zero();
        for (k, v) in d.into_iter().enumerate() {
            m.entries[k][k] = v;
        }
        m
    }

    /// Builds a matrix from real parts only.
    pub fn from_real(rows: [[f64; 4]; 4]) -> Self {
        MatrixRep {
            entries: rows.map(|r| r.map(|x| Complex64::new(x, 0.0))),
        }
    }

    pub fn column(&self, j: usize) -> [Complex64; 4] {
        std::array::from_fn(|i| self.entries[i][j])
    }

    pub fn scale(&self, s: Complex64) -> Self {
        MatrixRep { entries: self.entries.map(|r| r.map(|x| x * s)) }
    }

    pub fn max_norm(&self) -> f64 {
        self.entries.iter().flatten().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn dist(&self, other: &Self) -> f64 {
        let mut d: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                d = d.max((self.entries[i][j] - other.entries[i][j]).norm());
            }
        }
        d
    }

    /// Determinant by LU factorisation with partial pivoting.
    pub fn det(&self) -> Complex64 {
        let mut a = self.entries;
        let mut det = ONE;
        for col in 0..4 {
            let pivot = (col..4)
                .max_by(|&x, &y| a[x][col].norm().total_cmp(&a[y][col].norm()))
                .expect("non-empty range");
            if a[pivot][col].norm() < PIVOT_THRESHOLD {
                return ZERO;
            }
            if pivot != col {
                a.swap(pivot, col);
                det = -det;
            }
            let p = a[col][col];
            det *= p;
            for row in col + 1..4 {
                let f = a[row][col] / p;
                for k in col..4 {
                    let v = a[col][k];
                    a[row][k] -= f * v;
                }
            }
        }
        det
    }

    /// Gauss-Jordan inverse; fails when `|det| < 1e-12`.
    pub fn inverse(&self) -> Result<Self> {
        let det = self.det();
        if det.norm() < SINGULAR_THRESHOLD {
            return Err(Error::Singular { det: det.norm() });
        }
        let mut a = self.entries;
        let mut inv = Self::identity().entries;
        for col in 0..4 {
            let pivot = (col..4)
                .max_by(|&x, &y| a[x][col].norm().total_cmp(&a[y][col].norm()))
                .expect("non-empty range");
            a.swap(pivot, col);
            inv.swap(pivot, col);
            let p = a[col][col].inv();
            for k in 0..4 {
                a[col][k] *= p;
                inv[col][k] *= p;
            }
            for row in 0..4 {
                if row == col {
                    continue;
                }
                let f = a[row][col];
                if f == ZERO {
                    continue;
                }
                for k in 0..4 {
                    let (va, vi) = (a[col][k], inv[col][k]);
                    a[row][k] -= f * va;
                    inv[row][k] -= f * vi;
                }
            }
        }
        Ok(MatrixRep { entries: inv })
    }
}

impl Mul for MatrixRep {
    type Output = MatrixRep;
    fn mul(self, rhs: MatrixRep) -> MatrixRep {
        let mut out = MatrixRep::zero();
        for i in 0..4 {
            for j in 0..4 {
                out.entries[i][j] = (0..4).map(|k| self.entries[i][k] * rhs.entries[k][j]).sum();
            }
        }
        out
    }
}

impl Add for MatrixRep {
    type Output = MatrixRep;
    fn add(self, rhs: MatrixRep) -> MatrixRep {
        let mut out = self;
        for i in 0..4 {
            for j in 0..4 {
                out.entries[i][j] += rhs.entries[i][j];
            }
        }
        out
    }
}

impl fmt::Display for MatrixRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.entries.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|c| fmt_complex(*c)).collect();
            write!(f, "[{}]", cells.join(", "))?;
            if i < 3 {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

fn blade_matrices() -> &'static [MatrixRep; 16] {
    static CACHE: OnceLock<[MatrixRep; 16]> = OnceLock::new();
    CACHE.get_or_init(|| {
        std::array::from_fn(|m| {
            let b = Multivector::blade(BladeIndex::new(m as u8), ONE);
            MatrixRep::new(spectral::extract_entries(&b))
        })
    })
}

fn basis_cache() -> &'static [[Multivector; 4]; 4] {
    static CACHE: OnceLock<[[Multivector; 4]; 4]> = OnceLock::new();
    CACHE.get_or_init(spectral_basis)
}

/// `[g]`: the complex Dirac matrix of `g` in the spectral basis.
///
/// Entries are linear in `g`, so the matrices of the sixteen blades are
/// extracted once and combined.
pub fn to_matrix(g: &Multivector) -> MatrixRep {
    let mats = blade_matrices();
    let mut out = MatrixRep::zero();
    for (c, m) in g.coeffs().iter().zip(mats.iter()) {
        if *c != ZERO {
            out = out + m.scale(*c);
        }
    }
    out
}

/// Inverse of [`to_matrix`]: `g = sum_ij [g]_ij row_i u_++ column_j`.
pub fn from_matrix(m: &MatrixRep) -> Multivector {
    let basis = basis_cache();
    let mut g = Multivector::ZERO;
    for i in 0..4 {
        for j in 0..4 {
            if m.entries[i][j] != ZERO {
                g += basis[i][j] * m.entries[i][j];
            }
        }
    }
    g
}

/// `det [m]` for a matrix representation.
pub fn det4(m: &MatrixRep) -> Complex64 {
    m.det()
}
