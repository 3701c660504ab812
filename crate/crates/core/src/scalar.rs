//! Scalar traits the generic code is written against.

use std::fmt::Debug;

use num_traits::{Float, FromPrimitive, Num};

/// Coefficient ring for polynomials and moment recurrences.
pub trait Coefficient: Num + Clone + Debug {}

impl<T> Coefficient for T where T: Num + Clone + Debug {}

/// Floating point type used by the reference-law machinery: `f32` or `f64`.
pub trait Real: Float + FromPrimitive + Debug {}

impl<T> Real for T where T: Float + FromPrimitive + Debug {}

/// Converts a small constant into `F`.
pub(crate) fn real<F: Real>(x: f64) -> F {
    F::from_f64(x).expect("constant representable in the float type")
}
