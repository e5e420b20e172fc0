//! Exact computational algebra over small finite fields.
//!
//! The crate builds up, layer by layer, everything needed to hunt for
//! squarefree univariate polynomials whose coefficients are constrained to
//! small per-coefficient sets ("coefficient boxes"):
//!
//! - [`field`]: arithmetic in GF(p^k) with canonical moduli and a total
//!   enumeration order, so experiments are reproducible across runs.
//! - [`unipoly`]: dense univariate polynomials, Euclidean gcd, resultants
//!   and discriminants, plus a brute-force squarefreeness oracle used to
//!   cross-check the fast path.
//! - [`multipoly`]: multivariate polynomials over the integers, the
//!   carrier for generic (symbolic) discriminants.
//! - [`discriminant`]: symbolic resultants and discriminants of a generic
//!   degree-n polynomial, with the coefficient extractions and identities
//!   the experiments assert.
//! - [`nullstellensatz`]: coefficient boxes, the combinatorial guarantees
//!   under which a squarefree member must exist, and the witness search.
//!
//! All arithmetic is exact: prime fields and their extensions on the one
//! hand, arbitrary-precision integers on the other. Nothing here touches
//! floating point.

pub mod discriminant;
pub mod error;
pub mod field;
pub mod multipoly;
pub mod nullstellensatz;
pub mod unipoly;

pub use error::{Error, Result};
pub use field::{Field, FieldElement, FieldSpec};
pub use multipoly::{Monomial, MultiPoly};
pub use unipoly::{Degree, UniPoly};

/// Re-export of the integer type used by the symbolic layer.
pub use num_bigint::BigInt;
