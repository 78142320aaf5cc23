//! Crate-wide error type.
//!
//! One enum covers all modules: scalar arithmetic, normal ordering, series
//! manipulation, the oracle representation, and the verification front end.
//! Everything is cheap to clone and comparable, so tests can assert on the
//! exact failure.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Division of a scalar by zero (includes `recip(0)`).
    #[error("division by zero")]
    DivisionByZero,

    /// A parameter had no binding in the supplied environment.
    #[error("missing binding for parameter `{0}`")]
    MissingBinding(String),

    /// A denominator vanished at the supplied parameter values.
    #[error("denominator vanishes at the given parameter values")]
    PoleAtEnv,

    /// Quadratic with no rational root pair.
    #[error("quadratic has no rational roots")]
    IrrationalRoots,

    /// Leading coefficient of a quadratic is zero.
    #[error("degree error: leading coefficient is zero")]
    DegreeError,

    /// An exponent violates the kind discipline of the active relation
    /// (e.g. a fractional exponent where integers are required).
    #[error("exponent kind violation: {0}")]
    ExponentKind(String),

    /// The bivariate grade solver found no normal form at `grade`.
    #[error("no normal form exists at grade {grade} (witness {witness})")]
    NoNormalForm { grade: usize, witness: String },

    /// A series operation required a specific constant term.
    #[error("series constant term must be {expected}, found {found}")]
    ConstantTerm { expected: String, found: String },

    /// Operands were built over different algebras or truncation orders.
    #[error("context mismatch: {0}")]
    ContextMismatch(String),

    /// The oracle's polynomial degree cap was exceeded.
    #[error("polynomial degree cap {cap} exceeded")]
    DegreeCapExceeded { cap: usize },

    /// A check cannot be carried through the requested transform.
    #[error("check `{0}` is not transformable")]
    NotTransformable(String),

    /// No catalog entry under that name.
    #[error("unknown check `{0}`")]
    UnknownCheck(String),

    /// Expression syntax error, with 1-based position.
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    /// Anything explicitly out of scope.
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
