//! JSON helpers: exact numbers are written as decimal strings, rationals as
//! `"p/q"` with the denominator always present.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serializer;

pub fn rational_string(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn int<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(x)
}

pub fn rational<S: Serializer>(x: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&rational_string(x))
}

pub fn rationals<S: Serializer>(xs: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(rational_string))
}
