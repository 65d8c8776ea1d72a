//! The seeded identity suite behind `sta identities`.

use std::fmt;

use num_complex::Complex64;

use crate::algebra::Multivector;
use crate::fierz::{fierz_check, observables};
use crate::matrix::{det4, det_omega, from_matrix, to_matrix, IdempotentSet};
use crate::measurement::{
    braket, braket_components, braket_coordinates, dirac_from_e, family_probability, family_transition,
    transition_probability, triple_idempotent_residual, EKet, Ket,
};
use crate::random::SeededRng;
use crate::spinor::{
    complex_operators, odd_operator, sphere_state, spinor_operator, substitution_vars, DiracSpinor,
};

/// Largest residual seen for one family of identities.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilyResult {
    pub name: &'static str,
    pub max_residual: f64,
    /// Samples skipped because an intermediate quantity was undefined.
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityReport {
    pub seed: u64,
    pub n: usize,
    pub tol: f64,
    pub families: Vec<FamilyResult>,
}

impl IdentityReport {
    pub fn first_failure(&self) -> Option<&FamilyResult> {
        self.families.iter().find(|f| !(f.max_residual < self.tol))
    }

    pub fn passed(&self) -> bool {
        self.first_failure().is_none()
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "identity suite: seed {} n {} tol {:e}", self.seed, self.n, self.tol)?;
        for fam in &self.families {
            let status = if fam.max_residual < self.tol { "ok" } else { "FAIL" };
            write!(f, "{:<28} {:>12.3e}  {status}", fam.name, fam.max_residual)?;
            if fam.skipped > 0 {
                write!(f, "  ({} skipped)", fam.skipped)?;
            }
            writeln!(f)?;
        }
        match self.first_failure() {
            None => write!(f, "all {} families passed", self.families.len()),
            Some(fam) => write!(f, "first failing identity: {}", fam.name),
        }
    }
}

#[derive(Default)]
struct Max {
    value: f64,
    skipped: usize,
}

impl Max {
    fn push(&mut self, r: f64) {
        // NaN must register as a failure.
        if r.is_nan() || r > self.value {
            self.value = if r.is_nan() { f64::INFINITY } else { r };
        }
    }

    fn finish(self, name: &'static str) -> FamilyResult {
        FamilyResult { name, max_residual: self.value, skipped: self.skipped }
    }
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1.0)
}

fn algebra_axioms(rng: &mut SeededRng, n: usize) -> FamilyResult {
    let mut m = Max::default();
    for _ in 0..n {
        let (a, b, c) = (rng.multivector(), rng.multivector(), rng.multivector());
        m.push(((a * b) * c).dist(&(a * (b * c))));
        m.push((a * (b + c)).dist(&(a * b + a * c)));
        m.push(((a + b) * c).dist(&(a * c + b * c)));
    }
    let big_i = Multivector::pseudoscalar();
    for mu in 0..4u8 {
        let g = Multivector::gamma(mu);
        let metric = if mu == 0 { 1.0 } else { -1.0 };
        m.push((g * g).dist(&Multivector::scalar(metric)));
        m.push((big_i * g + g * big_i).max_norm());
    }
    m.finish("algebra axioms")
}

fn spectral_round_trip(rng: &mut SeededRng, n: usize) -> FamilyResult {
    let mut m = Max::default();
    for _ in 0..n {
        let (a, b) = (rng.multivector(), rng.multivector());
        m.push(from_matrix(&to_matrix(&a)).dist(&a));
        m.push(to_matrix(&(a * b)).dist(&(to_matrix(&a) * to_matrix(&b))));
    }
    m.finish("spectral round trip")
}

fn idempotent_shifts() -> FamilyResult {
    let mut m = Max::default();
    let set = IdempotentSet::new();
    let (e1, e3) = (Multivector::e(1), Multivector::e(3));
    let e13 = e1 * e3;
    m.push((e13 * set.u_pp).dist(&(set.u_pm * e13)));
    m.push((e3 * set.u_pp).dist(&(set.u_mp * e3)));
    m.push((e1 * set.u_pp).dist(&(set.u_mm * e1)));
    m.finish("idempotent shifts")
}

fn idempotent_partition() -> FamilyResult {
    let mut m = Max::default();
    let us = IdempotentSet::new().primitives();
    for (a, ua) in us.iter().enumerate() {
        m.push((ua * ua).dist(ua));
        for (b, ub) in us.iter().enumerate() {
            if a != b {
                m.push((ua * ub).max_norm());
            }
        }
    }
    let total: Multivector = us.iter().copied().sum();
    m.push(total.dist(&Multivector::one()));
    m.finish("idempotent partition")
}

fn determinant_laws(spinors: &[DiracSpinor]) -> FamilyResult {
    let mut m = Max::default();
    for d in spinors {
        let op = spinor_operator(d);
        let det = det4(&to_matrix(op.psi()));
        let p = d.phi;
        let r = p[0].norm_sqr() + p[1].norm_sqr() - p[2].norm_sqr() - p[3].norm_sqr();
        let a = (p[0].conj() * p[2] + p[1].conj() * p[3]).im;
        let v = substitution_vars(d);
        let mink = |u: [f64; 4], w: [f64; 4]| u[0] * w[0] - u[1] * w[1] - u[2] * w[2] - u[3] * w[3];
        let (x2, y2, xy) = (mink(v.x, v.x), mink(v.y, v.y), mink(v.x, v.y));
        let dom = det_omega(&op);
        m.push(det.im.abs() / det.norm().max(1.0));
        m.push(rel(det.re, r * r + 4.0 * a * a));
        m.push(rel(det.re, (x2 - y2).powi(2) + 4.0 * xy * xy));
        m.push(rel(det.re, dom.scalar.powi(2) + dom.pseudo.powi(2)));
        m.push(rel(dom.scalar, r) + rel(dom.pseudo, 2.0 * a));
        let (zp, zm) = complex_operators(d);
        for other in [odd_operator(d), zp, zm] {
            m.push((det4(&to_matrix(&other)) - det).norm() / det.norm().max(1.0));
        }
    }
    m.finish("determinant laws")
}

fn inner_products(spinors: &[DiracSpinor]) -> FamilyResult {
    let mut m = Max::default();
    for pair in spinors.windows(2) {
        let (a, b) = (&pair[0], &pair[1]);
        let reference: Complex64 = braket_components(a, b);
        m.push((braket(&Ket::new(a), &Ket::new(b)) - reference).norm());
        m.push((braket_coordinates(a, b) - reference).norm());
        m.push((dirac_from_e(&EKet::from_spinor(a), &EKet::from_spinor(b)) - reference).norm());
    }
    m.finish("inner products")
}

fn idempotent_lemma(spinors: &[DiracSpinor]) -> FamilyResult {
    let mut m = Max::default();
    let states: Vec<_> = spinors.iter().map(sphere_state).collect();
    for pair in states.windows(2) {
        match (&pair[0], &pair[1]) {
            (Ok(a), Ok(b)) if !a.limiting && !b.limiting => {
                m.push(triple_idempotent_residual(&a.a_hat, &b.a_hat));
            }
            _ => m.skipped += 1,
        }
    }
    m.finish("triple idempotent lemma")
}

fn probability_paths(rng: &mut SeededRng, spinors: &[DiracSpinor], n: usize) -> FamilyResult {
    let mut m = Max::default();
    let states: Vec<_> = spinors.iter().map(sphere_state).collect();
    for pair in states.windows(2) {
        match (&pair[0], &pair[1]) {
            (Ok(a), Ok(b)) if !a.limiting && !b.limiting => match transition_probability(a, b) {
                Ok(t) => m.push(t.residual / t.value.max_norm().max(1.0)),
                Err(_) => m.skipped += 1,
            },
            _ => m.skipped += 1,
        }
    }
    for _ in 0..n {
        let (x, y) = (rng.plane_point(3.0), rng.plane_point(3.0));
        let (px, py) = (rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
        let closed = family_probability(x, px, y, py).value;
        match family_transition(x, px, y, py) {
            Ok(t) => {
                m.push(t.residual);
                m.push(t.value.dist(&closed));
            }
            Err(_) => m.skipped += 1,
        }
    }
    m.finish("probability paths")
}

fn fierz(spinors: &[DiracSpinor]) -> FamilyResult {
    let mut m = Max::default();
    for d in spinors {
        m.push(fierz_check(&observables(&spinor_operator(d))).max_residual());
    }
    m.finish("fierz identities")
}

/// Runs every family on `n` spinors drawn from `seed`.
pub fn run_identities(seed: u64, n: usize, tol: f64) -> IdentityReport {
    let mut rng = SeededRng::new(seed);
    let spinors: Vec<DiracSpinor> = (0..n).map(|_| rng.regular_spinor()).collect();
    let mut families = vec![
        algebra_axioms(&mut rng, n),
        spectral_round_trip(&mut rng, n),
        idempotent_shifts(),
        idempotent_partition(),
        determinant_laws(&spinors),
        inner_products(&spinors),
        idempotent_lemma(&spinors),
    ];
    families.push(probability_paths(&mut rng, &spinors, n));
    families.push(fierz(&spinors));
    IdentityReport { seed, n, tol, families }
}
