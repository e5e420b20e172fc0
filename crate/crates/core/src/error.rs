//! Error type shared by every module of the crate.

use thiserror::Error;

/// Everything that can go wrong in this crate, short of an internal
/// invariant violation (those panic).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The requested characteristic is not a prime number.
    #[error("{0} is not prime")]
    NonPrime(u64),
    /// A parameter is outside the domain the crate supports.
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
    /// Two operands belong to different fields.
    #[error("operands belong to different fields")]
    SpecMismatch,
    /// Division by the zero element.
    #[error("division by zero")]
    DivisionByZero,
    /// Enumeration of a field larger than the supported bound.
    #[error("field has {order} elements, enumeration is capped at {cap}")]
    TooLarge { order: u128, cap: u128 },
    /// gcd of two zero polynomials is undefined.
    #[error("gcd(0, 0) is undefined")]
    BothZero,
    /// The zero polynomial was passed where it has no meaning.
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    /// Resultant of inputs for which no Sylvester matrix exists.
    #[error("resultant undefined: {0}")]
    DegenerateInput(&'static str),
    /// Discriminant of a polynomial of degree below two.
    #[error("discriminant requires degree >= 2")]
    DegreeTooSmall,
    /// An exhaustive search was asked to exceed its cost cap.
    #[error("budget exceeded: {0}")]
    BudgetExceeded(&'static str),
    /// Operands have different variable counts.
    #[error("arity mismatch: expected {expected} variables, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    /// Symbolic computation outside the supported degree window.
    #[error("degree {0} is outside the supported symbolic budget")]
    OutOfBudget(usize),
    /// A division that is exact by theory left a remainder; an
    /// implementation bug, surfaced instead of silently truncated.
    #[error("inexact division in a computation that must divide exactly")]
    InexactDivision,
    /// Square root requested of a polynomial that is not a square.
    #[error("polynomial is not a square")]
    NotASquare,
    /// An operation requiring a homogeneous polynomial got a mixed one.
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    /// A coefficient box too large to scan.
    #[error("box holds {size} tuples, search is capped at {cap}")]
    BoxTooLarge { size: u128, cap: u128 },
    /// No sign assignment makes the closed-form identity match.
    #[error("no sign assignment matches the closed-form identity")]
    NoSignMatch,
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
