//! Closed forms for the major index generating function and its support.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qpoly::QPoly;
use crate::shapes::{BlockDiagonalShape, Partition, Shape};

/// `q^{b(λ)} [n]_q! / Π_c [h_c]_q`.
pub fn maj_gf_hook_formula(lambda: &Partition) -> QPoly<BigInt> {
    let n = lambda.size();
    // [1..n] and the hooks share many factors; cancel them before expanding.
    let mut count = vec![1i64; n + 1];
    count[0] = 0;
    if n >= 1 {
        count[1] = 0;
    }
    for h in lambda.hook_lengths() {
        count[h] -= 1;
    }
    let mut p = QPoly::one();
    for (j, &c) in count.iter().enumerate() {
        for _ in 0..c.max(0) {
            p = p.mul_q_integer(j);
        }
    }
    for (h, &c) in count.iter().enumerate().rev() {
        for _ in 0..(-c).max(0) {
            p = p
                .div_q_integer(h)
                .expect("hook formula quotient is a polynomial");
        }
    }
    p.shift(lambda.b_stat())
}

/// Generating function of any supported shape: the hook formula for straight
/// shapes and the block formula with `m = 1` otherwise.
pub fn maj_gf(shape: &Shape) -> QPoly<BigInt> {
    match shape {
        Shape::Straight(p) => maj_gf_hook_formula(p),
        Shape::Block(b) => maj_gf_block_diagonal(b, 1).expect("m = 1 is valid"),
    }
}

/// `[n; |λ^(1)|, ..., |λ^(r)|]_q · Π_i f_{λ^(i)}(q^m)`.
pub fn maj_gf_block_diagonal(shape: &BlockDiagonalShape, m: usize) -> Result<QPoly<BigInt>> {
    if m == 0 {
        return Err(Error::Unsupported("m must be positive".into()));
    }
    let mut p = QPoly::q_multinomial(shape.size(), &shape.composition())?;
    for block in shape.blocks() {
        p = &p * &maj_gf_hook_formula(block).substitute_power(m);
    }
    Ok(p)
}

/// The wreath product specialization: only `d = 1` is defined here.
pub fn maj_gf_wreath(shape: &BlockDiagonalShape, m: usize, d: usize) -> Result<QPoly<BigInt>> {
    if d != 1 {
        return Err(Error::Unsupported(format!(
            "d = {d}: the deformed multinomial is only available for d = 1"
        )));
    }
    maj_gf_block_diagonal(shape, m)
}

/// Where the coefficients of the generating function are nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportClassification {
    pub min_maj: usize,
    pub max_maj: usize,
    pub gaps: Vec<usize>,
    pub is_rectangle_exception: bool,
}

impl SupportClassification {
    /// Reads the support off a polynomial: extreme degrees and internal zeros.
    pub fn observed(p: &QPoly<BigInt>) -> Result<Self> {
        let min_maj = p.min_degree().ok_or(Error::ZeroPolynomial)?;
        let max_maj = p.degree().ok_or(Error::ZeroPolynomial)?;
        let gaps: Vec<usize> = (min_maj..=max_maj).filter(|&k| p.coeff(k) == BigInt::ZERO).collect();
        let is_rectangle_exception = !gaps.is_empty();
        Ok(SupportClassification { min_maj, max_maj, gaps, is_rectangle_exception })
    }

    pub fn contains(&self, k: usize) -> bool {
        self.min_maj <= k && k <= self.max_maj && !self.gaps.contains(&k)
    }
}

/// Predicted support: `[b(λ), C(n,2) - b(λ')]` with gaps at `b(λ)+1` and
/// `C(n,2) - b(λ') - 1` for rectangles with at least two rows and columns.
pub fn support_classification(lambda: &Partition) -> Result<SupportClassification> {
    if lambda.is_empty() {
        return Err(Error::InvalidShape("empty partition has no support".into()));
    }
    let n = lambda.size();
    let min_maj = lambda.b_stat();
    let max_maj = n * (n - 1) / 2 - lambda.conjugate().b_stat();
    let is_rectangle_exception = lambda.is_proper_rectangle();
    let mut gaps = Vec::new();
    if is_rectangle_exception {
        gaps.push(min_maj + 1);
        if max_maj - 1 != min_maj + 1 {
            gaps.push(max_maj - 1);
        }
    }
    Ok(SupportClassification { min_maj, max_maj, gaps, is_rectangle_exception })
}

/// Whether some tableau of shape `λ` has major index `k`, without enumerating.
pub fn fake_degree_positive(lambda: &Partition, k: usize) -> bool {
    support_classification(lambda).is_ok_and(|s| s.contains(k))
}
