use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Exact division was requested but the divisor does not divide the
    /// dividend. When raised from determinant or magnitude pipelines this
    /// signals a broken upstream invariant, never an expected condition.
    #[error("exact division failed: {0}")]
    NotDivisible(&'static str),

    /// A determinant was requested of a non-square matrix.
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    /// The weighting linear system had an identically-zero determinant.
    #[error("weighting system is singular at p = {p}")]
    SingularSystem { p: u32 },

    /// Series evaluation argument exceeds the configured bound.
    #[error("argument {value} exceeds the configured bound {max}")]
    ArgumentTooLarge { value: f64, max: f64 },

    /// A positive argument was required.
    #[error("argument must be positive, got {0}")]
    NonPositiveArgument(f64),

    /// Asymptotic expansion was asked for more terms than the exact long
    /// division supports.
    #[error("asked for {requested} terms, at most {max} available")]
    TooManyTerms { requested: usize, max: usize },

    /// Log-concavity is only defined here for positive-coefficient polynomials.
    #[error("polynomial has a non-positive coefficient at index {0}")]
    NonPositiveCoefficient(usize),

    /// Root finder did not converge within the iteration budget.
    #[error("root finding did not converge after {iterations} iterations")]
    NoConvergence { iterations: usize },

    /// Enumeration size exceeds the configured collection bound.
    #[error("k = {k} exceeds the configured maximum {max}")]
    TooLarge { k: i64, max: i64 },

    /// Continued fraction truncated too early for the requested series length.
    #[error("depth {depth} insufficient for {terms} series terms")]
    InsufficientDepth { depth: usize, terms: usize },

    /// Quadrature node-doubling disagreement above tolerance.
    #[error("quadrature precision not reached: estimated error {estimate:e} > {tolerance:e}")]
    PrecisionNotReached { estimate: f64, tolerance: f64 },

    /// Dense kernel solve failed or its residual was above tolerance.
    #[error("kernel system ill-conditioned: {0}")]
    IllConditioned(String),

    /// Invalid configuration or argument combination.
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
