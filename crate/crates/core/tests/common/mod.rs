#![allow(dead_code)]

use num_complex::Complex64;
use proptest::prelude::*;
use sta::algebra::Multivector;
use sta::matrix::det_omega;
use sta::spinor::{DiracSpinor, SpinorOperator};

pub fn coeff() -> impl Strategy<Value = f64> {
    -1.0..1.0f64
}

pub fn complex() -> impl Strategy<Value = Complex64> {
    (coeff(), coeff()).prop_map(|(re, im)| Complex64::new(re, im))
}

pub fn multivector() -> impl Strategy<Value = Multivector> {
    prop::array::uniform16(complex()).prop_map(Multivector::from_coeffs)
}

pub fn real_even() -> impl Strategy<Value = Multivector> {
    prop::array::uniform16(coeff()).prop_map(|c| {
        Multivector::from_coeffs(c.map(|x| Complex64::new(x, 0.0))).even()
    })
}

pub fn spinor() -> impl Strategy<Value = DiracSpinor> {
    prop::array::uniform4(complex()).prop_map(|phi| DiracSpinor { phi })
}

/// Spinors with `|det[Ω]| ≥ 0.1`.
pub fn regular_spinor() -> impl Strategy<Value = DiracSpinor> {
    spinor().prop_filter("singular spinor", |d| {
        let det = det_omega(&SpinorOperator::from_spinor(d));
        det.scalar.hypot(det.pseudo) >= 0.1
    })
}

pub fn plane_point() -> impl Strategy<Value = [f64; 2]> {
    prop::array::uniform2(-3.0..3.0f64)
}

pub fn rapidity() -> impl Strategy<Value = f64> {
    -2.0..2.0f64
}
