use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite value: {0}")]
    NonFinite(&'static str),

    #[error("singular element: |det| = {det:.3e} below threshold")]
    Singular { det: f64 },

    #[error("zero divisor: ring projection magnitude {magnitude:.3e} below threshold")]
    ZeroDivisor { magnitude: f64 },

    #[error("exponential overflow: coefficient magnitude exceeded 1e300")]
    Overflow,

    #[error("element is not even: odd-grade magnitude {0:.3e}")]
    NotEven(f64),

    #[error("element is not real: imaginary coefficient magnitude {0:.3e}")]
    NotReal(f64),

    #[error("null state: |M^2| = {0:.3e}, unit sphere element undefined")]
    NullState(f64),

    #[error("boost decomposition requires real positive M^2, got {re} + {pseudo} I")]
    NotRealPositive { re: f64, pseudo: f64 },

    #[error("degenerate decomposition: residual {0:.3e}")]
    Degenerate(f64),

    #[error("zero vector where a nonzero vector is required")]
    ZeroVector,
}

pub type Result<T> = std::result::Result<T, Error>;
