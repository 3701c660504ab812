//! Limit laws of the standardized major index: classification, reference
//! CDFs, Kolmogorov distance and the hook power sum bounds.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fakedeg::maj_gf;
use crate::moments::{hook_power_bracket, moments_from_gf, normalized_cumulant};
use crate::qpoly::QPoly;
use crate::scalar::{real, Real};
use crate::ser;
use crate::shapes::Shape;

/// Declared limiting behavior of a statistic along a family of shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Limit {
    Finite(usize),
    Infinite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LimitLaw {
    Normal,
    IrwinHallStar(usize),
    Discrete,
    Divergent,
}

impl LimitLaw {
    /// Roman numeral of the convergent case, `None` when divergent.
    pub fn case(&self) -> Option<&'static str> {
        match self {
            LimitLaw::Normal => Some("i"),
            LimitLaw::IrwinHallStar(_) => Some("ii"),
            LimitLaw::Discrete => Some("iii"),
            LimitLaw::Divergent => None,
        }
    }

    pub fn reference_law(&self) -> Option<ReferenceLaw> {
        match *self {
            LimitLaw::Normal => Some(ReferenceLaw::Normal),
            LimitLaw::IrwinHallStar(m) => Some(ReferenceLaw::IrwinHallStar(m)),
            LimitLaw::Discrete => Some(ReferenceLaw::Discrete),
            LimitLaw::Divergent => None,
        }
    }
}

/// Decides the limit law from declared limits of `aft`, of the size, and
/// whether the normalized distributions are eventually constant. The cases
/// are tried in order: `aft → ∞`, then size `→ ∞` with `aft → M`, then
/// eventually constant.
pub fn classify_limit(aft: Limit, size: Limit, eventually_constant: bool) -> Result<LimitLaw> {
    match (aft, size) {
        (Limit::Infinite, Limit::Finite(_)) => Err(Error::ContradictoryLimits(
            "aft cannot grow without bound on shapes of bounded size".into(),
        )),
        (Limit::Finite(a), Limit::Finite(s)) if a > s => {
            Err(Error::ContradictoryLimits(format!("aft {a} exceeds size {s}")))
        }
        (Limit::Infinite, Limit::Infinite) => Ok(LimitLaw::Normal),
        (Limit::Finite(0), Limit::Infinite) => Err(Error::ContradictoryLimits(
            "aft 0 means a single tableau; the standardization is undefined".into(),
        )),
        (Limit::Finite(m), Limit::Infinite) => Ok(LimitLaw::IrwinHallStar(m)),
        (Limit::Finite(_), Limit::Finite(_)) if eventually_constant => Ok(LimitLaw::Discrete),
        (Limit::Finite(_), Limit::Finite(_)) => Ok(LimitLaw::Divergent),
    }
}

/// Reference distributions, all standardized to mean 0 and variance 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReferenceLaw {
    Normal,
    IrwinHallStar(usize),
    Discrete,
}

impl ReferenceLaw {
    /// CDF at `t`; `None` for the discrete placeholder.
    pub fn cdf<F: Real>(&self, t: F) -> Option<F> {
        match *self {
            ReferenceLaw::Normal => Some(normal_cdf(t)),
            ReferenceLaw::IrwinHallStar(m) => Some(irwin_hall_star_cdf(m, t)),
            ReferenceLaw::Discrete => None,
        }
    }
}

impl fmt::Display for ReferenceLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReferenceLaw::Normal => f.write_str("normal"),
            ReferenceLaw::IrwinHallStar(m) => write!(f, "ih:{m}"),
            ReferenceLaw::Discrete => f.write_str("discrete"),
        }
    }
}

impl FromStr for ReferenceLaw {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "normal" {
            return Ok(ReferenceLaw::Normal);
        }
        if let Some(m) = s.strip_prefix("ih:") {
            return match m.parse::<usize>() {
                Ok(m) if m >= 1 => Ok(ReferenceLaw::IrwinHallStar(m)),
                _ => Err(Error::Unsupported(format!("bad Irwin-Hall order {m:?}"))),
            };
        }
        Err(Error::Unsupported(format!("unknown law {s:?}; expected normal or ih:M")))
    }
}

/// `erfc(x)` for `x >= 0`.
fn erfc_nonneg<F: Real>(x: F) -> F {
    let two: F = real(2.0);
    let sqrt_pi = real::<F>(std::f64::consts::PI).sqrt();
    if x < real(3.0) {
        // erf(x) = 2/√π e^{-x²} Σ 2^n x^{2n+1} / (2n+1)!!
        let x2 = x * x;
        let mut term = x;
        let mut sum = x;
        let mut n = 0u32;
        loop {
            n += 1;
            term = term * two * x2 / real(f64::from(2 * n + 1));
            sum = sum + term;
            if term <= sum * F::epsilon() {
                break;
            }
        }
        F::one() - two / sqrt_pi * (-x2).exp() * sum
    } else {
        // erfc(x) = e^{-x²}/√π · 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
        let mut f = x;
        for n in (1..=80).rev() {
            f = x + real::<F>(f64::from(n) / 2.0) / f;
        }
        (-x * x).exp() / sqrt_pi / f
    }
}

/// Standard normal CDF.
pub fn normal_cdf<F: Real>(t: F) -> F {
    let x = t.abs() / real::<F>(2.0).sqrt();
    let half = erfc_nonneg(x) / real(2.0);
    if t >= F::zero() {
        F::one() - half
    } else {
        half
    }
}

/// Standard normal density.
pub fn normal_pdf<F: Real>(t: F) -> F {
    let two_pi: F = real(2.0 * std::f64::consts::PI);
    (-(t * t) / real(2.0)).exp() / two_pi.sqrt()
}

fn factorial(m: usize) -> BigInt {
    (1..=m).map(BigInt::from).product()
}

fn binomial(n: usize, k: usize) -> BigInt {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// CDF of the sum of `m` independent uniforms at the exact point `x`.
pub fn irwin_hall_cdf_exact(m: usize, x: &BigRational) -> BigRational {
    let zero = BigRational::zero();
    let top = BigRational::from_integer(BigInt::from(m));
    if *x <= zero {
        return zero;
    }
    if *x >= top {
        return BigRational::one();
    }
    let floor = x.floor().to_integer().to_usize().unwrap_or(0);
    let mut sum = BigRational::zero();
    for k in 0..=floor {
        let term = BigRational::from_integer(binomial(m, k))
            * num_traits::pow(x - BigRational::from_integer(BigInt::from(k)), m);
        if k.is_odd() {
            sum -= term;
        } else {
            sum += term;
        }
    }
    sum / BigRational::from_integer(factorial(m))
}

/// CDF of `(IH_m - m/2) / √(m/12)` at `t`. The point is mapped back to the
/// unstandardized scale in floating point and then evaluated exactly.
pub fn irwin_hall_star_cdf<F: Real>(m: usize, t: F) -> F {
    if m == 0 {
        return if t < F::zero() { F::zero() } else { F::one() };
    }
    let t = t.to_f64().unwrap_or(f64::NAN);
    if t.is_nan() {
        return F::nan();
    }
    let mf = m as f64;
    let x = mf / 2.0 + t * (mf / 12.0).sqrt();
    let value = if x <= 0.0 {
        0.0
    } else if x >= mf {
        1.0
    } else {
        let exact = BigRational::from_float(x).expect("finite point");
        irwin_hall_cdf_exact(m, &exact).to_f64().unwrap_or(f64::NAN)
    };
    real(value)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Atom {
    pub k: usize,
    /// `k - μ`, exact.
    #[serde(serialize_with = "ser::rational")]
    pub offset: BigRational,
    #[serde(serialize_with = "ser::rational")]
    pub mass: BigRational,
    /// `(k - μ) / σ` in floating point.
    pub point: f64,
}

/// The exact distribution of a generating function, standardized.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NormalizedDistribution {
    #[serde(serialize_with = "ser::rational")]
    pub mean: BigRational,
    #[serde(serialize_with = "ser::rational")]
    pub variance: BigRational,
    pub sigma: f64,
    pub atoms: Vec<Atom>,
}

impl NormalizedDistribution {
    pub fn from_gf(p: &QPoly<BigInt>) -> Result<Self> {
        let table = moments_from_gf(p, 2)?;
        if table.variance.is_zero() {
            return Err(Error::ZeroVariance);
        }
        let sigma = table.variance.to_f64().expect("finite variance").sqrt();
        let total = BigRational::from_integer(p.eval_at_one());
        let atoms = p
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let offset = BigRational::from_integer(BigInt::from(k)) - &table.mean;
                let point = offset.to_f64().expect("finite offset") / sigma;
                Atom { k, offset, mass: BigRational::from_integer(c.clone()) / &total, point }
            })
            .collect();
        Ok(NormalizedDistribution { mean: table.mean, variance: table.variance, sigma, atoms })
    }

    /// Equality of the standardized laws decided in exact arithmetic:
    /// `a/√u = b/√v` iff the signs agree and `a² v = b² u`.
    pub fn exact_eq(&self, other: &Self) -> bool {
        self.atoms.len() == other.atoms.len()
            && self.atoms.iter().zip(&other.atoms).all(|(a, b)| {
                a.mass == b.mass
                    && a.offset.signum() == b.offset.signum()
                    && &a.offset * &a.offset * &other.variance == &b.offset * &b.offset * &self.variance
            })
    }

    /// `(Σ p x, Σ p x² - 1)` of the floating point atoms.
    pub fn standardization_error(&self) -> (f64, f64) {
        let mut m1 = 0.0;
        let mut m2 = 0.0;
        for a in &self.atoms {
            let p = a.mass.to_f64().unwrap_or(f64::NAN);
            m1 += p * a.point;
            m2 += p * a.point * a.point;
        }
        (m1, m2 - 1.0)
    }
}

pub fn normalized_distribution(shape: &Shape) -> Result<NormalizedDistribution> {
    NormalizedDistribution::from_gf(&maj_gf(shape))
}

/// `sup_t |F(t) - L(t)|` for atoms `(point, mass)` sorted by point.
pub fn ks_distance_atoms(atoms: &[(f64, BigRational)], law: ReferenceLaw) -> Result<f64> {
    if law == ReferenceLaw::Discrete {
        return Err(Error::Unsupported("Kolmogorov distance needs a continuous reference law".into()));
    }
    let mut cum = BigRational::zero();
    let mut worst = 0.0f64;
    for (x, mass) in atoms {
        let l = law.cdf(*x).expect("continuous law");
        let before = cum.to_f64().unwrap_or(f64::NAN);
        cum += mass;
        let after = cum.to_f64().unwrap_or(f64::NAN);
        worst = worst.max((before - l).abs()).max((after - l).abs());
    }
    Ok(worst)
}

pub fn ks_distance(dist: &NormalizedDistribution, law: ReferenceLaw) -> Result<f64> {
    let atoms: Vec<(f64, BigRational)> = dist.atoms.iter().map(|a| (a.point, a.mass.clone())).collect();
    ks_distance_atoms(&atoms, law)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HookRegime {
    /// `max h_c < 0.8 n`
    Small,
    /// `max h_c >= 0.8 n`
    Large,
}

/// Evaluation of the two-sided bound on `Σ j^d - Σ h_c^d` that applies to
/// the shape's largest hook.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HookBoundReport {
    pub shape: String,
    pub n: usize,
    pub d: u32,
    pub aft: usize,
    pub max_hook: usize,
    pub regime: HookRegime,
    #[serde(serialize_with = "ser::int")]
    pub bracket: BigInt,
    #[serde(serialize_with = "ser::rational")]
    pub lower: BigRational,
    #[serde(serialize_with = "ser::rational")]
    pub upper: BigRational,
    /// False only in the large-hook regime with `n < 10`.
    pub precondition_met: bool,
    pub holds: bool,
    /// `bracket / (aft n^d)`, absent when `aft = 0`.
    pub theta_ratio: Option<f64>,
}

impl HookBoundReport {
    /// The bound holds wherever it is claimed to.
    pub fn passes(&self) -> bool {
        self.holds || !self.precondition_met
    }
}

pub fn check_hook_bounds(shape: &Shape, d: u32) -> Result<HookBoundReport> {
    if d == 0 {
        return Err(Error::Unsupported("d must be positive".into()));
    }
    let n = shape.size();
    let aft = shape.aft();
    let max_hook = shape.hook_lengths().first().copied().unwrap_or(0);
    let bracket = hook_power_bracket(shape, d);
    let int = |x: BigInt| BigRational::from_integer(x);
    let nb = BigInt::from(n);
    let b = int(bracket.clone());
    let (regime, lower, upper, precondition_met, holds) = if 5 * max_hook < 4 * n {
        let lower = int(nb.pow(d + 1)) / int(BigInt::from(26 * (d + 1)))
            - int(BigInt::from(2)) * num_traits::pow(BigRational::new(4.into(), 5.into()), d as usize) * int(nb.pow(d));
        let upper = int(nb.pow(d + 1)) / int(BigInt::from(d + 1)) + int(nb.pow(d));
        let holds = lower < b && b < upper;
        (HookRegime::Small, lower, upper, true, holds)
    } else {
        let tenth = BigInt::from(n / 10);
        let aftb = int(BigInt::from(aft));
        let lower = &aftb * int(tenth.pow(d)) / int(BigInt::from(d));
        let upper = int(BigInt::from(2)) * &aftb * int(nb.pow(d) + BigInt::from(d) * nb.pow(d - 1));
        let holds = lower <= b && b <= upper;
        (HookRegime::Large, lower, upper, n >= 10, holds)
    };
    let theta_ratio = (aft > 0).then(|| {
        (b / int(BigInt::from(aft) * nb.pow(d))).to_f64().unwrap_or(f64::NAN)
    });
    Ok(HookBoundReport {
        shape: shape.to_string(),
        n,
        d,
        aft,
        max_hook,
        regime,
        bracket,
        lower,
        upper,
        precondition_met,
        holds,
        theta_ratio,
    })
}

/// `|κ_d*| · aft^{d/2 - 1}` for even `d >= 4`.
pub fn normalized_cumulant_scaling(shape: &Shape, d: usize) -> Result<f64> {
    if d < 4 || d % 2 == 1 {
        return Err(Error::Unsupported(format!("scaling is stated for even d >= 4, got {d}")));
    }
    let k = normalized_cumulant(shape, d)?;
    let scale = num_traits::pow(BigRational::from_integer(BigInt::from(shape.aft())), d / 2 - 1);
    Ok((k.abs() * scale).to_f64().unwrap_or(f64::NAN))
}

/// Largest gap between the exact point probabilities and the normal density
/// with the same mean and variance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LocalLimitReport {
    pub shape: String,
    pub n: usize,
    pub aft: usize,
    #[serde(serialize_with = "ser::rational")]
    pub mean: BigRational,
    #[serde(serialize_with = "ser::rational")]
    pub variance: BigRational,
    pub sigma: f64,
    pub max_deviation: f64,
    pub argmax: usize,
    /// `max_deviation · σ · aft`.
    pub ratio: f64,
}

pub fn local_limit_deviation(shape: &Shape) -> Result<LocalLimitReport> {
    let p = maj_gf(shape);
    let table = moments_from_gf(&p, 2)?;
    if table.variance.is_zero() {
        return Err(Error::ZeroVariance);
    }
    let sigma = table.variance.to_f64().expect("finite variance").sqrt();
    let total = BigRational::from_integer(p.eval_at_one());
    let lo = p.min_degree().unwrap_or(0).saturating_sub(1);
    let hi = p.degree().unwrap_or(0) + 1;
    let mut best = (0.0f64, lo);
    for k in lo..=hi {
        let mass = (BigRational::from_integer(p.coeff(k)) / &total).to_f64().unwrap_or(f64::NAN);
        let z = (BigRational::from_integer(BigInt::from(k)) - &table.mean).to_f64().unwrap_or(f64::NAN) / sigma;
        let dev = (mass - normal_pdf(z) / sigma).abs();
        if dev > best.0 {
            best = (dev, k);
        }
    }
    let aft = shape.aft();
    Ok(LocalLimitReport {
        shape: shape.to_string(),
        n: shape.size(),
        aft,
        mean: table.mean,
        variance: table.variance,
        sigma,
        max_deviation: best.0,
        argmax: best.1,
        ratio: best.0 * sigma * aft as f64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::partitions;

    fn shape(s: &str) -> Shape {
        s.parse().unwrap()
    }

    #[test]
    fn classification_of_all_coherent_declarations() {
        use Limit::*;
        assert_eq!(classify_limit(Infinite, Infinite, false), Ok(LimitLaw::Normal));
        assert_eq!(classify_limit(Infinite, Infinite, true), Ok(LimitLaw::Normal));
        assert_eq!(classify_limit(Finite(2), Infinite, false), Ok(LimitLaw::IrwinHallStar(2)));
        assert_eq!(classify_limit(Finite(2), Infinite, true), Ok(LimitLaw::IrwinHallStar(2)));
        assert_eq!(classify_limit(Finite(2), Finite(40), true), Ok(LimitLaw::Discrete));
        assert_eq!(classify_limit(Finite(2), Finite(40), false), Ok(LimitLaw::Divergent));
        assert!(classify_limit(Infinite, Finite(9), false).is_err());
        assert!(classify_limit(Infinite, Finite(9), true).is_err());
        assert!(classify_limit(Finite(0), Infinite, false).is_err());
        assert!(classify_limit(Finite(5), Finite(3), true).is_err());
    }

    #[test]
    fn normal_cdf_values() {
        assert_eq!(normal_cdf(0.0f64), 0.5);
        assert!((normal_cdf(1.96f64) - 0.9750021048517795).abs() < 1e-15);
        for t in [0.3, 1.0, 2.5, 4.2, 6.0, 9.0] {
            assert!((normal_cdf(t) + normal_cdf(-t) - 1.0).abs() < 1e-15, "{t}");
        }
        let single: f32 = normal_cdf(1.0f32);
        assert!((single - 0.841_344_7).abs() < 1e-6);
    }

    #[test]
    fn normal_cdf_against_independent_erf() {
        use statrs::distribution::{ContinuousCDF, Normal};
        let reference = Normal::standard();
        let mut t = -9.0;
        while t <= 9.0 {
            // statrs is itself only good to a few parts in 1e11
            assert!((normal_cdf(t) - reference.cdf(t)).abs() < 5e-11, "{t}");
            t += 0.0625;
        }
        // tabulated to 20 digits
        let table = [
            (-8.0, 6.220960574271784e-16),
            (-5.0, 2.866515718791939e-7),
            (-3.0, 1.3498980316300946e-3),
            (-2.0, 2.2750131948179208e-2),
            (-1.0, 1.5865525393145707e-1),
            (0.5, 6.914624612740131e-1),
        ];
        for (t, want) in table {
            assert!((normal_cdf(t) - want).abs() < 1e-15, "{t}");
        }
        assert!((normal_pdf(0.0f64) - 0.3989422804014327).abs() < 1e-15);
    }

    #[test]
    fn irwin_hall_values() {
        assert_eq!(irwin_hall_star_cdf(1, 0.0f64), 0.5);
        assert_eq!(irwin_hall_star_cdf(2, 0.0f64), 0.5);
        assert_eq!(irwin_hall_star_cdf(3, 50.0f64), 1.0);
        for m in 1..=5 {
            let edge = (3.0 * m as f64).sqrt();
            assert!(irwin_hall_star_cdf(m, -edge) < 1e-12);
            assert!((irwin_hall_star_cdf(m, edge) - 1.0).abs() < 1e-12);
            let mut prev = 0.0;
            let mut t = -edge;
            while t <= edge {
                let v = irwin_hall_star_cdf(m, t);
                assert!(v >= prev - 1e-15);
                prev = v;
                t += 0.01;
            }
        }
        // triangular law: F(1/2) on the unscaled variable is 1/8
        let x = BigRational::new(1.into(), 2.into());
        assert_eq!(irwin_hall_cdf_exact(2, &x), BigRational::new(1.into(), 8.into()));
    }

    #[test]
    fn irwin_hall_against_uniform_sum_oracle() {
        // convolution density of three uniforms integrated numerically
        let density = |x: f64| match x {
            x if (0.0..1.0).contains(&x) => x * x / 2.0,
            x if (1.0..2.0).contains(&x) => (-2.0 * x * x + 6.0 * x - 3.0) / 2.0,
            x if (2.0..3.0).contains(&x) => (3.0 - x) * (3.0 - x) / 2.0,
            _ => 0.0,
        };
        let steps = 30000;
        let h = 3.0 / steps as f64;
        let mut acc = 0.0;
        for i in 0..steps {
            let x = (i as f64 + 0.5) * h;
            acc += density(x) * h;
            if (i + 1) % 3000 == 0 {
                let x_end = (i + 1) as f64 * h;
                let t = (x_end - 1.5) / 0.25f64.sqrt();
                assert!((irwin_hall_star_cdf(3, t) - acc).abs() < 1e-7, "{x_end}");
            }
        }
    }

    #[test]
    fn normalized_examples() {
        for s in ["2,1", "2,2"] {
            let d = normalized_distribution(&shape(s)).unwrap();
            let pts: Vec<f64> = d.atoms.iter().map(|a| a.point).collect();
            assert_eq!(pts, vec![-1.0, 1.0]);
            assert!(d.atoms.iter().all(|a| a.mass == BigRational::new(1.into(), 2.into())));
        }
        let a = normalized_distribution(&shape("2,1")).unwrap();
        let b = normalized_distribution(&shape("2,2")).unwrap();
        assert!(a.exact_eq(&b));
        assert!(!a.exact_eq(&normalized_distribution(&shape("3,1")).unwrap()));
        assert_eq!(normalized_distribution(&shape("5")), Err(Error::ZeroVariance));
    }

    #[test]
    fn standardization_is_tight() {
        for lam in partitions(11) {
            let s = Shape::Straight(lam);
            if let Ok(d) = normalized_distribution(&s) {
                let (m1, m2) = d.standardization_error();
                assert!(m1.abs() < 1e-12 && m2.abs() < 1e-12, "{s}");
            }
        }
    }

    #[test]
    fn ks_examples() {
        let unit = [(0.0, BigRational::one())];
        assert_eq!(ks_distance_atoms(&unit, ReferenceLaw::Normal).unwrap(), 0.5);
        let d = normalized_distribution(&shape("4,2")).unwrap();
        assert!(ks_distance(&d, ReferenceLaw::Normal).unwrap() > 0.0);
        assert!(ks_distance(&d, ReferenceLaw::Discrete).is_err());
    }

    #[test]
    fn law_parsing() {
        assert_eq!("normal".parse::<ReferenceLaw>().unwrap(), ReferenceLaw::Normal);
        assert_eq!("ih:3".parse::<ReferenceLaw>().unwrap(), ReferenceLaw::IrwinHallStar(3));
        assert!("ih:0".parse::<ReferenceLaw>().is_err());
        assert!("cauchy".parse::<ReferenceLaw>().is_err());
        assert_eq!(ReferenceLaw::IrwinHallStar(2).to_string(), "ih:2");
    }

    #[test]
    fn hook_bound_examples() {
        let r = check_hook_bounds(&shape("12"), 3).unwrap();
        assert_eq!((r.bracket.clone(), r.aft, r.regime), (BigInt::zero(), 0, HookRegime::Large));
        assert!(r.holds && r.passes());
        let r = check_hook_bounds(&shape("12,2"), 2).unwrap();
        assert_eq!((r.max_hook, r.regime), (13, HookRegime::Large));
        assert!(r.holds);
        let r = check_hook_bounds(&shape("4,4,4"), 2).unwrap();
        assert_eq!((r.max_hook, r.regime), (6, HookRegime::Small));
        assert!(r.holds);
        let r = check_hook_bounds(&shape("3,1"), 2).unwrap();
        assert!(!r.precondition_met);
        assert!(r.passes());
    }

    #[test]
    fn scaling_examples() {
        assert_eq!(normalized_cumulant_scaling(&shape("2,1"), 4).unwrap(), 2.0);
        assert_eq!(normalized_cumulant_scaling(&shape("7"), 4), Err(Error::ZeroVariance));
        assert!(normalized_cumulant_scaling(&shape("2,1"), 3).is_err());
    }

    #[test]
    fn local_limit_examples() {
        for s in ["50,2", "10,10"] {
            let r = local_limit_deviation(&shape(s)).unwrap();
            assert!(r.ratio.is_finite() && r.ratio > 0.0, "{s}");
        }
        assert_eq!(local_limit_deviation(&shape("9")), Err(Error::ZeroVariance));
    }
}
