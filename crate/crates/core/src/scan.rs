//! Sweeps over all partitions up to a size, run in parallel.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::fakedeg::{maj_gf_hook_formula, support_classification, SupportClassification};
use crate::limits::check_hook_bounds;
use crate::moments::{cumulants_from_formula, moments_from_gf};
use crate::qpoly::QPoly;
use crate::shapes::{partitions_in_range, Partition, Shape};
use crate::tableaux::brute_force_maj_gf;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub shape: String,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub scope: String,
    pub checked: usize,
    pub violations: Vec<Violation>,
    #[serde(serialize_with = "millis")]
    pub elapsed: Duration,
}

fn millis<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u128(d.as_millis())
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Runs `check` on every shape, in parallel; violations come back sorted.
fn sweep<I, F>(scope: String, shapes: I, check: F) -> SweepReport
where
    I: IntoIterator<Item = Partition>,
    F: Fn(&Partition) -> Vec<String> + Sync,
{
    let start = Instant::now();
    let shapes: Vec<Partition> = shapes.into_iter().collect();
    let mut violations: Vec<Violation> = shapes
        .par_iter()
        .flat_map_iter(|lam| {
            check(lam)
                .into_iter()
                .map(move |detail| Violation { shape: lam.to_string(), detail })
        })
        .collect();
    violations.sort();
    SweepReport { scope, checked: shapes.len(), violations, elapsed: start.elapsed() }
}

/// Zero pattern of the hook formula against the predicted support.
pub fn sweep_zeros_theorem(n_max: usize) -> SweepReport {
    sweep(format!("partitions of 1..={n_max}"), partitions_in_range(1, n_max), |lam| {
        let predicted = support_classification(lam).expect("nonempty");
        match SupportClassification::observed(&maj_gf_hook_formula(lam)) {
            Ok(observed) if observed == predicted => vec![],
            Ok(observed) => vec![format!("predicted {predicted:?}, observed {observed:?}")],
            Err(e) => vec![e.to_string()],
        }
    })
}

/// Unimodality for every shape with at least four corners. A violation is a
/// counterexample to the conjecture, not an engine failure.
pub fn sweep_unimodality_conjecture(n_max: usize) -> SweepReport {
    let shapes = partitions_in_range(1, n_max).filter(|lam| lam.corner_count() >= 4);
    sweep(format!("partitions of 1..={n_max} with at least 4 corners"), shapes, |lam| {
        match maj_gf_hook_formula(lam).coefficient_shape() {
            Ok(s) if s.unimodal => vec![],
            Ok(_) => vec!["coefficients are not unimodal".into()],
            Err(e) => vec![e.to_string()],
        }
    })
}

fn parity_check(p: &QPoly<num_bigint::BigInt>) -> Vec<String> {
    match p.coefficient_shape() {
        Ok(s) if s.parity_unimodal => vec![],
        Ok(_) => vec!["coefficients are not parity-unimodal".into()],
        Err(e) => vec![e.to_string()],
    }
}

/// Parity-unimodality of every shape up to `n_max` and of the two-row
/// rectangles `(n, n)` up to `catalan_n_max`.
pub fn sweep_parity_unimodality(n_max: usize, catalan_n_max: usize) -> SweepReport {
    let start = Instant::now();
    let mut report = sweep(String::new(), partitions_in_range(1, n_max), |lam| parity_check(&maj_gf_hook_formula(lam)));
    let rects: Vec<Partition> = (1..=catalan_n_max)
        .filter(|&n| n > n_max / 2)
        .map(|n| Partition::new(vec![n, n]).expect("valid"))
        .collect();
    let extra = sweep(String::new(), rects, |lam| parity_check(&maj_gf_hook_formula(lam)));
    report.checked += extra.checked;
    report.violations.extend(extra.violations);
    report.violations.sort();
    report.scope = format!("partitions of 1..={n_max} and (n,n) for n <= {catalan_n_max}");
    report.elapsed = start.elapsed();
    report
}

/// Hook formula against enumeration, and the cumulant formula against the
/// exact distribution for orders up to 6.
pub fn sweep_formula_vs_oracle(n_max: usize) -> SweepReport {
    sweep(format!("partitions of 1..={n_max}"), partitions_in_range(1, n_max), |lam| {
        let shape = Shape::Straight(lam.clone());
        let formula = maj_gf_hook_formula(lam);
        let mut out = Vec::new();
        match brute_force_maj_gf(&shape) {
            Ok(brute) if brute == formula => {}
            Ok(brute) => out.push(format!("hook formula {formula} != enumeration {brute}")),
            Err(e) => out.push(e.to_string()),
        }
        match moments_from_gf(&formula, 6) {
            Ok(table) => {
                let closed = cumulants_from_formula(&shape, 6);
                for (d, (a, b)) in table.cumulants.iter().zip(&closed).enumerate() {
                    if a != b {
                        out.push(format!("cumulant {}: distribution {a} != formula {b}", d + 1));
                    }
                }
            }
            Err(e) => out.push(e.to_string()),
        }
        out
    })
}

/// The two hook power sum lemmas for every shape with `n_lo <= n <= n_hi` and
/// every `d` in `degrees`.
pub fn sweep_hook_bounds(n_lo: usize, n_hi: usize, degrees: &[u32]) -> SweepReport {
    sweep(
        format!("partitions of {n_lo}..={n_hi}, d in {degrees:?}"),
        partitions_in_range(n_lo, n_hi),
        |lam| {
            let shape = Shape::Straight(lam.clone());
            degrees
                .iter()
                .filter_map(|&d| match check_hook_bounds(&shape, d) {
                    Ok(r) if r.passes() => None,
                    Ok(r) => Some(format!(
                        "d={d} {:?}: {} not within ({}, {})",
                        r.regime, r.bracket, r.lower, r.upper
                    )),
                    Err(e) => Some(e.to_string()),
                })
                .collect()
        },
    )
}
