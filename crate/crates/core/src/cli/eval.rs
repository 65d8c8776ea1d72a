//! Evaluation of parsed expressions.

use std::fmt;

use super::expr::{BinaryOp, Expr, Function, Symbol, UnaryOp};
use crate::algebra::Multivector;
use crate::error::Error;
use crate::matrix::{det4, from_matrix, to_matrix, MatrixRep};

/// Result of an expression: a multivector, or its matrix when the outermost
/// call is `matrix(...)`. Matrices used as operands are mapped back to the
/// algebra.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Value {
    Multivector(Multivector),
    Matrix(MatrixRep),
}

impl Value {
    pub fn multivector(&self) -> Multivector {
        match self {
            Value::Multivector(m) => *m,
            Value::Matrix(m) => from_matrix(m),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EvalError(pub Error);

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Error::Singular { det } => {
                write!(f, "zero divisor: element has no inverse (|det| = {det:.3e})")
            }
            other => write!(f, "{other}"),
        }
    }
}

impl std::error::Error for EvalError {}

impl From<Error> for EvalError {
    fn from(e: Error) -> Self {
        EvalError(e)
    }
}

fn symbol(s: Symbol) -> Multivector {
    match s {
        Symbol::Gamma(k) => Multivector::gamma(k),
        Symbol::E(k) => Multivector::e(k),
        Symbol::BigI => Multivector::pseudoscalar(),
        Symbol::BigJ => Multivector::j(),
        Symbol::Imag => Multivector::imaginary(),
    }
}

fn check(m: Multivector) -> Result<Multivector, EvalError> {
    if m.is_finite() {
        Ok(m)
    } else {
        Err(Error::NonFinite("expression value").into())
    }
}

/// Evaluates `e`.
pub fn eval(e: &Expr) -> Result<Value, EvalError> {
    if let Expr::Call(Function::Matrix, arg) = e {
        return Ok(Value::Matrix(to_matrix(&eval_mv(arg)?)));
    }
    Ok(Value::Multivector(eval_mv(e)?))
}

fn eval_mv(e: &Expr) -> Result<Multivector, EvalError> {
    let m = match e {
        Expr::Literal(c) => Multivector::complex_scalar(*c),
        Expr::Symbol(s) => symbol(*s),
        Expr::Unary(op, a) => {
            let a = eval_mv(a)?;
            match op {
                UnaryOp::Reverse => a.reverse(),
                UnaryOp::GradeInvolute => a.grade_involute(),
                UnaryOp::Conjugate => a.complex_conjugate(),
                UnaryOp::Negate => -a,
                UnaryOp::Grade(k) => a.grade(*k),
            }
        }
        Expr::Binary(op, a, b) => {
            let (a, b) = (eval_mv(a)?, eval_mv(b)?);
            match op {
                BinaryOp::Add => a + b,
                BinaryOp::Sub => a - b,
                BinaryOp::Geometric => a * b,
                BinaryOp::Symmetric => a.sym(&b),
                BinaryOp::Antisymmetric => a.antisym(&b),
                BinaryOp::Wedge => a.wedge(&b),
                BinaryOp::Dot => a.dot(&b),
            }
        }
        Expr::Power(a, n) => eval_mv(a)?.powi(*n)?,
        Expr::Call(func, a) => {
            let a = eval_mv(a)?;
            match func {
                Function::Exp => a.exp()?,
                Function::Inv => a.inverse()?,
                Function::Matrix => a,
                Function::Det => Multivector::complex_scalar(det4(&to_matrix(&a))),
            }
        }
    };
    check(m)
}

/// Parses and evaluates in one step, for tests and examples.
pub fn eval_str(src: &str) -> Result<Multivector, Box<dyn std::error::Error>> {
    Ok(eval(&super::expr::parse(src)?)?.multivector())
}
