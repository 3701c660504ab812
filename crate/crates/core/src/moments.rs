//! Exact moments and cumulants of the major index.

use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::qpoly::QPoly;
use crate::scalar::Coefficient;
use crate::ser;
use crate::shapes::Shape;

/// Raw moments, central moments and cumulants of orders `1..=D`. Index 0 of
/// each sequence holds order 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentTable<C> {
    pub mean: C,
    pub variance: C,
    pub cumulants: Vec<C>,
    pub central_moments: Vec<C>,
    pub raw_moments: Vec<C>,
}

impl<C: Coefficient> MomentTable<C> {
    pub fn order(&self) -> usize {
        self.raw_moments.len()
    }

    /// Cumulant `κ_d`, 1-based.
    pub fn cumulant(&self, d: usize) -> &C {
        &self.cumulants[d - 1]
    }
}

#[derive(Serialize)]
struct MomentTableJson<'a> {
    #[serde(serialize_with = "ser::rational")]
    mean: &'a BigRational,
    #[serde(serialize_with = "ser::rational")]
    variance: &'a BigRational,
    #[serde(serialize_with = "ser::rationals")]
    cumulants: &'a [BigRational],
    #[serde(serialize_with = "ser::rationals")]
    central_moments: &'a [BigRational],
    #[serde(serialize_with = "ser::rationals")]
    raw_moments: &'a [BigRational],
}

impl Serialize for MomentTable<BigRational> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MomentTableJson {
            mean: &self.mean,
            variance: &self.variance,
            cumulants: &self.cumulants,
            central_moments: &self.central_moments,
            raw_moments: &self.raw_moments,
        }
        .serialize(s)
    }
}

fn bernoulli_table() -> &'static Mutex<Vec<BigRational>> {
    static TABLE: OnceLock<Mutex<Vec<BigRational>>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(vec![BigRational::one()]))
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut out = BigInt::one();
    for t in 0..k {
        out = out * BigInt::from(n - t) / BigInt::from(t + 1);
    }
    out
}

/// Bernoulli number `B_d` with `B_1 = +1/2`.
pub fn bernoulli(d: usize) -> BigRational {
    let mut table = bernoulli_table().lock().unwrap_or_else(|e| e.into_inner());
    // The table holds the B_1 = -1/2 convention; Σ_{k<=m} C(m+1,k) B_k = 0.
    while table.len() <= d {
        let m = table.len();
        let s: BigRational = table
            .iter()
            .enumerate()
            .map(|(k, b)| BigRational::from_integer(binomial(m + 1, k)) * b)
            .sum();
        table.push(-s / BigRational::from_integer(BigInt::from(m + 1)));
    }
    let b = table[d].clone();
    if d == 1 {
        -b
    } else {
        b
    }
}

/// `Σ_{j=1}^n j^d - Σ_c h_c^d` over the hook lengths of the shape.
pub fn hook_power_bracket(shape: &Shape, d: u32) -> BigInt {
    let js: BigInt = (1..=shape.size()).map(|j| BigInt::from(j).pow(d)).sum();
    let hs: BigInt = shape.hook_lengths().into_iter().map(|h| BigInt::from(h).pow(d)).sum();
    js - hs
}

/// `κ_d = (B_d / d) [Σ j^d - Σ h_c^d]` for `d >= 2`.
pub fn cumulant_formula(shape: &Shape, d: usize) -> Result<BigRational> {
    if d < 2 {
        return Err(Error::CumulantOrder(d));
    }
    let bracket = hook_power_bracket(shape, d as u32);
    Ok(bernoulli(d) / BigRational::from_integer(BigInt::from(d)) * BigRational::from_integer(bracket))
}

/// `min maj + (1/2) [Σ j - Σ h_c]`.
pub fn mean_formula(shape: &Shape) -> BigRational {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    BigRational::from_integer(BigInt::from(shape.min_maj()))
        + half * BigRational::from_integer(hook_power_bracket(shape, 1))
}

/// Cumulants `κ_1..κ_D` from the closed forms.
pub fn cumulants_from_formula(shape: &Shape, max_d: usize) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(max_d);
    if max_d >= 1 {
        out.push(mean_formula(shape));
    }
    for d in 2..=max_d {
        out.push(cumulant_formula(shape, d).expect("d >= 2"));
    }
    out
}

/// Pascal rows in the coefficient ring, `rows[d][m] = C(d, m)`.
fn pascal<C: Coefficient>(max: usize) -> Vec<Vec<C>> {
    let mut rows: Vec<Vec<C>> = vec![vec![C::one()]];
    for d in 1..=max {
        let prev = &rows[d - 1];
        let mut row = Vec::with_capacity(d + 1);
        row.push(C::one());
        for m in 1..d {
            row.push(prev[m - 1].clone() + prev[m].clone());
        }
        row.push(C::one());
        rows.push(row);
    }
    rows
}

/// `μ_d = κ_d + Σ_{m=1}^{d-1} C(d-1, m-1) κ_m μ_{d-m}`.
fn raw_from_cumulants<C: Coefficient>(kappa: &[C], binom: &[Vec<C>]) -> Vec<C> {
    let mut mu: Vec<C> = Vec::with_capacity(kappa.len());
    for d in 1..=kappa.len() {
        let mut acc = kappa[d - 1].clone();
        for m in 1..d {
            acc = acc + binom[d - 1][m - 1].clone() * kappa[m - 1].clone() * mu[d - m - 1].clone();
        }
        mu.push(acc);
    }
    mu
}

/// Inverse of the recurrence above.
fn cumulants_from_raw<C: Coefficient>(mu: &[C], binom: &[Vec<C>]) -> Vec<C> {
    let mut kappa: Vec<C> = Vec::with_capacity(mu.len());
    for d in 1..=mu.len() {
        let mut acc = mu[d - 1].clone();
        for m in 1..d {
            acc = acc - binom[d - 1][m - 1].clone() * kappa[m - 1].clone() * mu[d - m - 1].clone();
        }
        kappa.push(acc);
    }
    kappa
}

/// Builds the moment table from `κ_1..κ_D`. Central moments come from the
/// same recurrence with `κ_1` replaced by zero.
pub fn cumulants_to_moments<C: Coefficient>(kappa: &[C], max_d: usize) -> Result<MomentTable<C>> {
    if kappa.len() < max_d || max_d < 2 {
        return Err(Error::CumulantOrder(max_d.min(kappa.len())));
    }
    let kappa = &kappa[..max_d];
    let binom = pascal::<C>(max_d);
    let raw = raw_from_cumulants(kappa, &binom);
    let mut centred = kappa.to_vec();
    centred[0] = C::zero();
    let central = raw_from_cumulants(&centred, &binom);
    Ok(MomentTable {
        mean: kappa[0].clone(),
        variance: kappa[1].clone(),
        cumulants: kappa.to_vec(),
        central_moments: central,
        raw_moments: raw,
    })
}

/// Inverse direction: cumulants from raw moments `μ_1..μ_D`.
pub fn moments_to_cumulants<C: Coefficient>(mu: &[C]) -> Vec<C> {
    cumulants_from_raw(mu, &pascal::<C>(mu.len()))
}

/// Exact moments of `P[X = k] = c_k / p(1)` computed directly from the
/// coefficients.
pub fn moments_from_gf(p: &QPoly<BigInt>, max_d: usize) -> Result<MomentTable<BigRational>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if let Some(k) = p.coeffs().iter().position(|c| c.is_negative()) {
        return Err(Error::NegativeCoefficient(k));
    }
    let max_d = max_d.max(2);
    let total = BigRational::from_integer(p.eval_at_one());
    let weighted = |f: &dyn Fn(&BigRational) -> BigRational| -> BigRational {
        p.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| f(&BigRational::from_integer(BigInt::from(k))) * BigRational::from_integer(c.clone()))
            .sum::<BigRational>()
            / &total
    };
    let raw: Vec<BigRational> = (1..=max_d).map(|d| weighted(&|x| pow(x, d))).collect();
    let mean = raw[0].clone();
    let central: Vec<BigRational> = (1..=max_d).map(|d| weighted(&|x| pow(&(x - &mean), d))).collect();
    let cumulants = moments_to_cumulants(&raw);
    Ok(MomentTable {
        mean,
        variance: central[1].clone(),
        cumulants,
        central_moments: central,
        raw_moments: raw,
    })
}

fn pow(x: &BigRational, d: usize) -> BigRational {
    num_traits::pow(x.clone(), d)
}

/// `κ_d / κ_2^{d/2}` for even `d`; zero for odd `d >= 3`.
pub fn normalized_cumulant(shape: &Shape, d: usize) -> Result<BigRational> {
    if d < 2 {
        return Err(Error::CumulantOrder(d));
    }
    let var = cumulant_formula(shape, 2)?;
    if var.is_zero() {
        return Err(Error::ZeroVariance);
    }
    if d % 2 == 1 {
        return Ok(BigRational::zero());
    }
    Ok(cumulant_formula(shape, d)? / pow(&var, d / 2))
}
