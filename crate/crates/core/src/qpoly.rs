//! Dense polynomials in `q` and the q-analog constructors.
//!
//! Coefficients are stored from degree 0 with trailing zeros trimmed, so the
//! zero polynomial has no coefficients at all.

use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_traits::Zero;
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Coefficient;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QPoly<C> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> QPoly<C> {
    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly { coeffs: vec![C::one()] }
    }

    /// `c q^degree`.
    pub fn monomial(degree: usize, c: C) -> Self {
        let mut coeffs = vec![C::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    /// Degree of the leading term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree of the lowest nonzero term; `None` for the zero polynomial.
    pub fn min_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> C {
        self.coeffs.iter().cloned().fold(C::zero(), |a, b| a + b)
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    /// `p(q^m)`.
    pub fn substitute_power(&self, m: usize) -> Self {
        assert!(m >= 1, "substitute_power needs m >= 1");
        if self.is_zero() || m == 1 {
            return self.clone();
        }
        let deg = self.coeffs.len() - 1;
        let mut coeffs = vec![C::zero(); deg * m + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k * m] = c.clone();
        }
        QPoly { coeffs }
    }

    /// `q^deg p(1/q)`: the coefficient sequence read backwards.
    pub fn reverse(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::from_coeffs(coeffs)
    }

    /// The coefficient sequence from the lowest to the highest nonzero degree.
    pub fn support_slice(&self) -> &[C] {
        match self.min_degree() {
            Some(lo) => &self.coeffs[lo..],
            None => &[],
        }
    }

    /// Multiplies by the q-integer `[j]_q = 1 + q + ... + q^{j-1}`.
    pub fn mul_q_integer(&self, j: usize) -> Self {
        if j == 0 || self.is_zero() {
            return Self::zero();
        }
        let d = self.coeffs.len() - 1;
        let mut out = Vec::with_capacity(d + j);
        let mut window = C::zero();
        for k in 0..d + j {
            if k <= d {
                window = window + self.coeffs[k].clone();
            }
            if k >= j {
                window = window - self.coeffs[k - j].clone();
            }
            out.push(window.clone());
        }
        Self::from_coeffs(out)
    }

    /// Exact division by `[h]_q`; fails when `[h]_q` does not divide.
    pub fn div_q_integer(&self, h: usize) -> Result<Self> {
        if h == 0 {
            return Err(Error::DivisionByZero);
        }
        if h == 1 || self.is_zero() {
            return Ok(self.clone());
        }
        let d = self.coeffs.len() - 1;
        if d + 1 < h {
            return Err(Error::InexactDivision);
        }
        // p / [h] = p (1 - q) / (1 - q^h)
        let qdeg = d + 1 - h;
        let mut quot: Vec<C> = Vec::with_capacity(qdeg + 1);
        for k in 0..=d + 1 {
            let mut s = self.coeff(k);
            if k >= 1 {
                s = s - self.coeff(k - 1);
            }
            if k >= h {
                s = s + quot[k - h].clone();
            }
            if k <= qdeg {
                quot.push(s);
            } else if !s.is_zero() {
                return Err(Error::InexactDivision);
            }
        }
        Ok(Self::from_coeffs(quot))
    }

    /// Evaluates at an arbitrary ring element by Horner's rule.
    pub fn eval(&self, q: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc * q.clone() + c.clone())
    }
}

impl<C: Coefficient + Integer> QPoly<C> {
    /// Exact long division; errors on a nonzero remainder.
    pub fn exact_divide(&self, den: &Self) -> Result<Self> {
        let dd = den.degree().ok_or(Error::DivisionByZero)?;
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let nd = self.coeffs.len() - 1;
        if nd < dd {
            return Err(Error::InexactDivision);
        }
        let lead = &den.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![C::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for (t, dc) in den.coeffs.iter().enumerate() {
                rem[k + t] = rem[k + t].clone() - q.clone() * dc.clone();
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(Self::from_coeffs(quot))
    }
}

impl<C: Coefficient> QPoly<C> {
    /// `[n]_q`.
    pub fn q_integer(n: usize) -> Self {
        Self::from_coeffs(vec![C::one(); n])
    }

    /// `[n]_q! = [1]_q [2]_q ... [n]_q`.
    pub fn q_factorial(n: usize) -> Self {
        (1..=n).fold(Self::one(), |acc, j| acc.mul_q_integer(j))
    }

    /// The q-multinomial coefficient `[n]_q! / Π [α_i]_q!`.
    pub fn q_multinomial(n: usize, composition: &[usize]) -> Result<Self> {
        let total: usize = composition.iter().sum();
        if total != n {
            return Err(Error::CompositionMismatch { expected: n, got: total });
        }
        let mut p = Self::q_factorial(n);
        for &part in composition {
            for j in 2..=part {
                p = p.div_q_integer(j)?;
            }
        }
        Ok(p)
    }
}

impl<C: Coefficient> Add for &QPoly<C> {
    type Output = QPoly<C>;
    fn add(self, rhs: Self) -> QPoly<C> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::from_coeffs((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<C: Coefficient> Sub for &QPoly<C> {
    type Output = QPoly<C>;
    fn sub(self, rhs: Self) -> QPoly<C> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::from_coeffs((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<C: Coefficient> Mul for &QPoly<C> {
    type Output = QPoly<C>;
    fn mul(self, rhs: Self) -> QPoly<C> {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        QPoly::from_coeffs(out)
    }
}

impl<C: Coefficient> Add for QPoly<C> {
    type Output = QPoly<C>;
    fn add(self, rhs: Self) -> QPoly<C> {
        &self + &rhs
    }
}

impl<C: Coefficient> Mul for QPoly<C> {
    type Output = QPoly<C>;
    fn mul(self, rhs: Self) -> QPoly<C> {
        &self * &rhs
    }
}

impl<C: Coefficient + fmt::Display> fmt::Display for QPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (k, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{c}q")?,
                (_, true) => write!(f, "q^{k}")?,
                (_, false) => write!(f, "{c}q^{k}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct QPolyJson {
    min_degree: usize,
    coeffs: Vec<String>,
}

impl<C: Coefficient + fmt::Display> Serialize for QPoly<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let min_degree = self.min_degree().unwrap_or(0);
        let coeffs = self.support_slice().iter().map(ToString::to_string).collect();
        QPolyJson { min_degree, coeffs }.serialize(s)
    }
}

impl<'de, C: Coefficient + FromStr> Deserialize<'de> for QPoly<C> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = QPolyJson::deserialize(d)?;
        let mut coeffs = vec![C::zero(); raw.min_degree];
        for s in &raw.coeffs {
            let c = s
                .parse::<C>()
                .map_err(|_| de::Error::custom(format!("bad coefficient {s:?}")))?;
            coeffs.push(c);
        }
        Ok(QPoly::from_coeffs(coeffs))
    }
}

/// Shape predicates of a coefficient sequence, evaluated on the interval
/// between the lowest and highest nonzero degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientShape {
    pub unimodal: bool,
    pub parity_unimodal: bool,
    pub log_concave: bool,
    pub symmetric: bool,
    /// Degrees with a zero coefficient strictly inside the support interval.
    pub internal_zeros: Vec<usize>,
}

/// Weakly increasing then weakly decreasing.
pub fn is_unimodal<C: PartialOrd>(seq: &[C]) -> bool {
    let mut i = 1;
    while i < seq.len() && seq[i - 1] <= seq[i] {
        i += 1;
    }
    while i < seq.len() && seq[i - 1] >= seq[i] {
        i += 1;
    }
    i >= seq.len()
}

/// `a_k^2 >= a_{k-1} a_{k+1}` at every interior index.
pub fn is_log_concave<C: Coefficient + PartialOrd>(seq: &[C]) -> bool {
    seq.windows(3)
        .all(|w| w[1].clone() * w[1].clone() >= w[0].clone() * w[2].clone())
}

/// Even-indexed and odd-indexed subsequences are each unimodal.
pub fn is_parity_unimodal<C: Coefficient + PartialOrd>(seq: &[C]) -> bool {
    let evens: Vec<C> = seq.iter().step_by(2).cloned().collect();
    let odds: Vec<C> = seq.iter().skip(1).step_by(2).cloned().collect();
    is_unimodal(&evens) && is_unimodal(&odds)
}

impl<C: Coefficient + PartialOrd> QPoly<C> {
    pub fn coefficient_shape(&self) -> Result<CoefficientShape> {
        let lo = self.min_degree().ok_or(Error::ZeroPolynomial)?;
        let seq = self.support_slice();
        let internal_zeros = seq
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_zero())
            .map(|(t, _)| lo + t)
            .collect();
        let symmetric = seq.iter().eq(seq.iter().rev());
        Ok(CoefficientShape {
            unimodal: is_unimodal(seq),
            parity_unimodal: is_parity_unimodal(seq),
            log_concave: is_log_concave(seq),
            symmetric,
            internal_zeros,
        })
    }
}
