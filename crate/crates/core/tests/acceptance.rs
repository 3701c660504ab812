//! Acceptance suite. One line per criterion; run with `--nocapture` to see them.

use std::time::{Duration, Instant};

use serde::Deserialize;

use sytmaj::fakedeg::{maj_gf_block_diagonal, maj_gf_hook_formula, support_classification, SupportClassification};
use sytmaj::limits::{ks_distance, normalized_distribution, ReferenceLaw};
use sytmaj::moments::{cumulant_formula, moments_from_gf};
use sytmaj::qpoly::is_unimodal;
use sytmaj::rotation::{rotation_fixed_points, verify_ranked_increment};
use sytmaj::scan::{sweep_hook_bounds, sweep_parity_unimodality};
use sytmaj::shapes::{partitions, partitions_in_range};
use sytmaj::tableaux::{brute_force_maj_gf, syt_count};
use sytmaj::{BlockDiagonalShape, ExactRational, Partition, QPolynomial, Shape, StandardTableau};

/// Largest |engine - golden| accepted for a Kolmogorov distance.
const KS_TOLERANCE: f64 = 1e-12;
/// Smallest decrease counted as strict in the Irwin-Hall trend.
const TREND_MARGIN: f64 = 1e-9;
const ORACLE_BUDGET: Duration = Duration::from_secs(10 * 60);
const ROTATION_BUDGET: Duration = Duration::from_secs(15 * 60);

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn lam(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn straight(parts: &[usize]) -> Shape {
    Shape::Straight(lam(parts))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn formula_vs_oracle() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for p in partitions_in_range(1, 12) {
        let brute = brute_force_maj_gf(&Shape::Straight(p.clone())).map_err(|e| e.to_string())?;
        ensure(brute == maj_gf_hook_formula(&p), || format!("{p}: hook formula differs from enumeration"))?;
        checked += 1;
    }
    let t = start.elapsed();
    ensure(t < ORACLE_BUDGET, || format!("took {t:?}"))?;
    Ok(format!("{checked} shapes, n <= 12, single thread, {:.1}s", t.as_secs_f64()))
}

fn zeros_theorem() -> Outcome {
    let mut checked = 0;
    for p in partitions_in_range(1, 12) {
        let predicted = support_classification(&p).map_err(|e| e.to_string())?;
        let observed = SupportClassification::observed(&maj_gf_hook_formula(&p)).map_err(|e| e.to_string())?;
        ensure(predicted == observed, || format!("{p}: predicted {predicted:?}, observed {observed:?}"))?;
        let n = p.size();
        let expected_gaps = if p.is_proper_rectangle() {
            let top = n * (n - 1) / 2 - p.conjugate().b_stat();
            let mut g = vec![p.b_stat() + 1, top - 1];
            g.dedup();
            g
        } else {
            vec![]
        };
        ensure(observed.gaps == expected_gaps, || format!("{p}: gaps {:?}", observed.gaps))?;
        checked += 1;
    }
    Ok(format!("{checked} shapes, n <= 12"))
}

fn cumulant_formula_check() -> Outcome {
    let mut checked = 0;
    for p in partitions_in_range(1, 10) {
        let shape = Shape::Straight(p.clone());
        let table = moments_from_gf(&maj_gf_hook_formula(&p), 6).map_err(|e| e.to_string())?;
        for d in 2..=6 {
            let closed = cumulant_formula(&shape, d).map_err(|e| e.to_string())?;
            ensure(table.cumulant(d) == &closed, || format!("{p} d={d}: {} vs {closed}", table.cumulant(d)))?;
        }
        checked += 1;
    }
    let s = straight(&[2, 1]);
    let k2 = cumulant_formula(&s, 2).unwrap();
    let k4 = cumulant_formula(&s, 4).unwrap();
    ensure(k2 == ExactRational::new(1.into(), 4.into()), || format!("kappa2(2,1) = {k2}"))?;
    ensure(k4 == ExactRational::new((-1).into(), 8.into()), || format!("kappa4(2,1) = {k4}"))?;
    Ok(format!("{checked} shapes, n <= 10, d in 2..=6; kappa2(2,1) = {k2}, kappa4(2,1) = {k4}"))
}

fn rotation_map() -> Outcome {
    let start = Instant::now();
    let mut tableaux = 0;
    for p in partitions_in_range(1, 10) {
        let r = verify_ranked_increment(&p).map_err(|e| e.to_string())?;
        ensure(r.increments_valid(), || format!("{p}: {:?}", r.increment_violations))?;
        tableaux += r.tableaux;
    }
    let p = lam(&[5, 4, 4, 2]);
    let count = syt_count(&p);
    ensure(count == 81081.into(), || format!("#SYT(5,4,4,2) = {count}"))?;
    let fixed = rotation_fixed_points(&p).map_err(|e| e.to_string())?;
    ensure(fixed.len() == 24, || format!("{} fixed points on (5,4,4,2)", fixed.len()))?;
    let reading = StandardTableau::row_reading(Shape::Straight(p));
    ensure(fixed.iter().any(|f| f.tableau == reading), || "row reading tableau is not fixed".into())?;
    let t = start.elapsed();
    ensure(t < ROTATION_BUDGET, || format!("took {t:?}"))?;
    Ok(format!(
        "{tableaux} tableaux, n <= 10; #SYT(5,4,4,2) = {count}, 24 fixed points incl. row reading; {:.1}s",
        t.as_secs_f64()
    ))
}

fn non_unimodal_42() -> Outcome {
    let p = lam(&[4, 2]);
    let formula = maj_gf_hook_formula(&p);
    let brute = brute_force_maj_gf(&Shape::Straight(p)).map_err(|e| e.to_string())?;
    for (name, gf) in [("formula", &formula), ("enumeration", &brute)] {
        let s = gf.coefficient_shape().map_err(|e| e.to_string())?;
        ensure(!s.unimodal && !is_unimodal(gf.coeffs()), || format!("{name} reports unimodal"))?;
    }
    Ok(format!("coefficients {formula} not unimodal from both sources"))
}

fn parity_unimodality() -> Outcome {
    let r = sweep_parity_unimodality(12, 25);
    ensure(r.passed(), || format!("{:?}", r.violations))?;
    Ok(format!("{} shapes: n <= 12 and (n,n) for n <= 25", r.checked))
}

fn hook_multiset_pair() -> Outcome {
    let a = straight(&[12, 12, 3, 3, 3, 2, 2, 1, 1]);
    let b = straight(&[15, 6, 6, 6, 4, 2]);
    ensure(a.size() == b.size(), || "sizes differ".into())?;
    ensure(a.hook_lengths() == b.hook_lengths(), || "hook multisets differ".into())?;
    let da = normalized_distribution(&a).map_err(|e| e.to_string())?;
    let db = normalized_distribution(&b).map_err(|e| e.to_string())?;
    ensure(da.exact_eq(&db), || "normalized distributions differ".into())?;
    ensure(da.mean != db.mean, || "means coincide, the pair is not a shifted copy".into())?;
    Ok(format!("equal hook multisets; {} atoms equal exactly after standardization", da.atoms.len()))
}

fn bound_lemmas() -> Outcome {
    let r = sweep_hook_bounds(10, 22, &[1, 2, 3, 4]);
    ensure(r.passed(), || format!("{:?}", r.violations))?;
    Ok(format!("{} shapes, 10 <= n <= 22, d in 1..=4", r.checked))
}

#[derive(Deserialize)]
struct GoldenKs {
    shape: String,
    law: String,
    aft: usize,
    ks: String,
}

fn golden() -> Vec<GoldenKs> {
    serde_json::from_str(include_str!("golden/ks.json")).unwrap()
}

/// Engine distance for a golden row, checked against the stored value.
fn ks_checked(row: &GoldenKs) -> Result<f64, String> {
    let shape: Shape = row.shape.parse().map_err(|e: sytmaj::Error| e.to_string())?;
    let law: ReferenceLaw = row.law.parse().map_err(|e: sytmaj::Error| e.to_string())?;
    ensure(shape.aft() == row.aft, || format!("{}: aft {}", row.shape, shape.aft()))?;
    let dist = normalized_distribution(&shape).map_err(|e| e.to_string())?;
    let ks = ks_distance(&dist, law).map_err(|e| e.to_string())?;
    let want: f64 = row.ks.parse().unwrap();
    ensure((ks - want).abs() <= KS_TOLERANCE, || format!("{} vs {}: {ks} != golden {want}", row.shape, row.law))?;
    Ok(ks)
}

fn irwin_hall_trend() -> Outcome {
    let rows = golden();
    let mut summary = Vec::new();
    for m in 1..=3 {
        let law = format!("ih:{m}");
        let ks: Vec<f64> = [10, 20, 40]
            .iter()
            .map(|n| {
                let row = rows.iter().find(|r| r.law == law && r.shape == format!("{},{m}", n + m)).unwrap();
                ks_checked(row)
            })
            .collect::<Result<_, _>>()?;
        ensure(ks[0] - ks[1] > TREND_MARGIN && ks[1] - ks[2] > TREND_MARGIN, || format!("M={m}: {ks:?}"))?;
        summary.push(format!("M={m}: {:.4} > {:.4} > {:.4}", ks[0], ks[1], ks[2]));
    }
    Ok(summary.join("; "))
}

fn normality_trend() -> Outcome {
    let rows: Vec<GoldenKs> = golden().into_iter().filter(|r| r.law == "normal").collect();
    let mut ks = Vec::new();
    for row in &rows {
        ks.push((row.shape.clone(), row.aft, ks_checked(row)?));
    }
    let get = |s: &str| ks.iter().find(|r| r.0 == s).unwrap().2;
    let (low, high) = (get("50,2"), get("8,8,7,6,5,5,5,2,2"));
    ensure(high < low, || format!("aft 39: {high} not below aft 2: {low}"))?;
    Ok(ks.iter().map(|(s, a, d)| format!("({s}) aft {a}: {d:.6}")).collect::<Vec<_>>().join("; "))
}

fn block_shapes(max_blocks: usize, max_cells: usize) -> Vec<BlockDiagonalShape> {
    fn extend(prefix: &mut Vec<Partition>, room: usize, left: usize, out: &mut Vec<BlockDiagonalShape>) {
        if !prefix.is_empty() {
            out.push(BlockDiagonalShape::new(prefix.clone()).unwrap());
        }
        if left == 0 {
            return;
        }
        for n in 1..=room {
            for p in partitions(n) {
                prefix.push(p);
                extend(prefix, room - n, left - 1, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), max_cells, max_blocks, &mut out);
    out
}

fn block_diagonal() -> Outcome {
    let shapes = block_shapes(3, 10);
    for s in &shapes {
        let formula = maj_gf_block_diagonal(s, 1).map_err(|e| e.to_string())?;
        let brute = brute_force_maj_gf(&Shape::Block(s.clone())).map_err(|e| e.to_string())?;
        ensure(formula == brute, || format!("{s}: {formula} != {brute}"))?;
    }
    for n in 1..=10 {
        let singletons = BlockDiagonalShape::new(vec![lam(&[1]); n]).unwrap();
        let gf = maj_gf_block_diagonal(&singletons, 1).map_err(|e| e.to_string())?;
        ensure(gf == QPolynomial::q_factorial(n), || format!("{n} singletons: {gf}"))?;
    }
    Ok(format!("{} shapes with <= 3 blocks and <= 10 cells; singletons give [n]! for n <= 10", shapes.len()))
}

fn aft_values() -> Outcome {
    let cases: [(&[usize], usize); 3] = [(&[50, 2], 2), (&[50, 3, 1], 4), (&[8, 8, 7, 6, 5, 5, 5, 2, 2], 39)];
    for (parts, want) in cases {
        let got = lam(parts).aft();
        ensure(got == want, || format!("{parts:?}: {got}"))?;
    }
    Ok("(50,2) -> 2, (50,3,1) -> 4, (8,8,7,6,5,5,5,2,2) -> 39".into())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 12] = [
        ("formula vs enumeration", formula_vs_oracle),
        ("zeros theorem", zeros_theorem),
        ("cumulant formula", cumulant_formula_check),
        ("rotation map", rotation_map),
        ("(4,2) not unimodal", non_unimodal_42),
        ("parity-unimodality", parity_unimodality),
        ("hook multiset pair", hook_multiset_pair),
        ("hook bound lemmas", bound_lemmas),
        ("Irwin-Hall trend", irwin_hall_trend),
        ("normality trend", normality_trend),
        ("block diagonal formula", block_diagonal),
        ("aft values", aft_values),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                println!("FAIL {:>2} {name}: {detail}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
