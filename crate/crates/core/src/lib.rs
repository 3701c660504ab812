//! Exact major index statistics on standard Young tableaux.
//!
//! The polynomial and moment code is generic over its coefficient ring and
//! the reference-law CDFs over the float type; the aliases below fix the
//! types used by the shape-level operations.

pub mod error;
pub mod fakedeg;
pub mod limits;
pub mod moments;
pub mod qpoly;
pub mod rotation;
pub mod scan;
pub mod scalar;
pub mod ser;
pub mod shapes;
pub mod tableaux;

pub use error::{Error, Result};
pub use qpoly::{CoefficientShape, QPoly};
pub use shapes::{BlockDiagonalShape, Cell, Partition, Shape};
pub use tableaux::{DescentData, ReverseStandardTableau, StandardTableau};

/// Polynomials in `q` with arbitrary precision integer coefficients.
pub type QPolynomial = QPoly<num_bigint::BigInt>;

/// Reduced fractions of arbitrary precision integers.
pub type ExactRational = num_rational::BigRational;
