//! Command implementations behind the `sta` binary. Each command writes its
//! report to the given writer and returns a [`CliError`] carrying the exit
//! code on failure.

pub mod eval;
pub mod expr;
pub mod grid;
pub mod identities;

use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use crate::algebra::Multivector;
use crate::fierz::{fierz_check, observables, regularity};
use crate::measurement::{family_probability, family_transition};
use crate::spinor::{spinor_operator, DiracSpinor};

pub use eval::{eval, EvalError, Value};
pub use expr::{parse, Expr, ParseError};
pub use grid::{grid_rows, GridMode, GridRow, GridSpec};
pub use identities::{run_identities, IdentityReport};

/// Exit status of the binary.
pub mod exit {
    pub const OK: i32 = 0;
    pub const IDENTITY_FAILURE: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const EVALUATION: i32 = 3;
    pub const IO: i32 = 4;
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse(ParseError),
    Eval(EvalError),
    IdentityFailure(String),
    Io(io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => exit::USAGE,
            CliError::Eval(_) => exit::EVALUATION,
            CliError::IdentityFailure(_) => exit::IDENTITY_FAILURE,
            CliError::Io(_) => exit::IO,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Parse(e) => write!(f, "{e}"),
            CliError::Eval(e) => write!(f, "evaluation error: {e}"),
            CliError::IdentityFailure(name) => write!(f, "identity failed: {name}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.into())
    }
}

pub type CliResult = std::result::Result<(), CliError>;

/// Twelve decimals, without a sign on zero.
fn fixed12(v: f64) -> String {
    let s = format!("{v:.12}");
    match s.strip_prefix('-') {
        Some(rest) if rest.bytes().all(|b| b == b'0' || b == b'.') => rest.to_string(),
        _ => s,
    }
}

/// `a + b I` at twelve decimals.
fn pseudocomplex12(a: f64, b: f64) -> String {
    let b = fixed12(b);
    match b.strip_prefix('-') {
        Some(rest) => format!("{} - {rest} I", fixed12(a)),
        None => format!("{} + {b} I", fixed12(a)),
    }
}

/// `sta eval`: prints the nonzero blades, and the 4×4 matrix with `--matrix`.
pub fn cmd_eval(src: &str, matrix: bool, out: &mut dyn Write) -> CliResult {
    let e = parse(src).map_err(CliError::Parse)?;
    let v = eval(&e).map_err(CliError::Eval)?;
    writeln!(out, "{}", v.multivector())?;
    let show = match v {
        Value::Matrix(m) => Some(m),
        Value::Multivector(m) if matrix => Some(crate::matrix::to_matrix(&m)),
        Value::Multivector(_) => None,
    };
    if let Some(m) = show {
        writeln!(out, "{m}")?;
    }
    Ok(())
}

/// `sta identities`: exits with [`exit::IDENTITY_FAILURE`] naming the first
/// family above `tol`.
pub fn cmd_identities(seed: u64, n: usize, tol: f64, out: &mut dyn Write) -> CliResult {
    if n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    if !(tol >= 0.0) {
        return Err(CliError::Usage(format!("--tol must be non-negative, got {tol}")));
    }
    let report = run_identities(seed, n, tol);
    writeln!(out, "{report}")?;
    match report.first_failure() {
        None => Ok(()),
        Some(f) => Err(CliError::IdentityFailure(f.name.to_string())),
    }
}

/// `sta prob`: the closed-form value for two family states, its flag, and
/// the two algebraic paths it is checked against.
pub fn cmd_prob(x: [f64; 2], y: [f64; 2], phi_x: f64, phi_y: f64, out: &mut dyn Write) -> CliResult {
    if !x.iter().chain(&y).chain(&[phi_x, phi_y]).all(|v| v.is_finite()) {
        return Err(CliError::Usage("all six numbers must be finite".into()));
    }
    let closed = family_probability(x, phi_x, y, phi_y);
    writeln!(out, "value        {}", fixed12(closed.value.scalar))?;
    writeln!(out, "value_I      {}", fixed12(closed.value.pseudo))?;
    let flag = if closed.is_probability { "probability" } else { "NOT a probability" };
    writeln!(out, "flag         {flag}")?;
    match family_transition(x, phi_x, y, phi_y) {
        Ok(t) => {
            writeln!(out, "idempotent   {}", pseudocomplex12(t.value.scalar, t.value.pseudo))?;
            writeln!(out, "projective   {}", pseudocomplex12(t.projective.scalar, t.projective.pseudo))?;
            let spread = t.residual.max(t.value.dist(&closed.value));
            let verdict = if spread <= crate::measurement::PROBABILITY_TOL { "agree" } else { "DISAGREE" };
            writeln!(out, "paths        {verdict} (max deviation {spread:.3e})")?;
        }
        Err(e) => writeln!(out, "paths        unavailable: {e}")?,
    }
    Ok(())
}

/// `sta grid`: writes CSV or JSON rows to `out_path`, or to `out` if none.
pub fn cmd_grid(spec: &GridSpec, json: bool, out_path: Option<&Path>, out: &mut dyn Write) -> CliResult {
    spec.validate().map_err(CliError::Usage)?;
    let rows = grid_rows(spec);
    match out_path {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            write_rows(&rows, json, &mut w)?;
            w.flush()?;
        }
        None => write_rows(&rows, json, out)?,
    }
    Ok(())
}

fn write_rows(rows: &[GridRow], json: bool, w: &mut dyn Write) -> CliResult {
    if json {
        grid::write_json(rows, w)?;
    } else {
        grid::write_csv(rows, w)?;
    }
    Ok(())
}

/// `sta observables`: `J`, `S`, `K`, `R`, the regularity class and the
/// Fierz report for the spinor `(re φ1, im φ1, …, re φ4, im φ4)`.
pub fn cmd_observables(reals: [f64; 8], out: &mut dyn Write) -> CliResult {
    let d = DiracSpinor::from_reals(reals).map_err(|e| CliError::Usage(e.to_string()))?;
    let op = spinor_operator(&d);
    let obs = observables(&op);
    let reg = regularity(&op);
    let show = |m: &Multivector| format!("{m:.12}");
    writeln!(out, "spinor       {d}")?;
    writeln!(out, "J            {}", show(&obs.j))?;
    writeln!(out, "S            {}", show(&obs.s))?;
    writeln!(out, "K            {}", show(&obs.k))?;
    writeln!(out, "R            {}", pseudocomplex12(obs.r.scalar, obs.r.pseudo))?;
    writeln!(out, "theta        {}", fixed12(obs.theta))?;
    writeln!(out, "phi a        {}", show(&obs.phi_a))?;
    writeln!(out, "class        {} (|det| = {:.6e})", reg.class, reg.det_magnitude)?;
    writeln!(out, "vanishing    {}", reg.vanishing)?;
    write!(out, "{}", fierz_check(&obs))?;
    Ok(())
}
