//! The rotation map `φ`, which raises the major index of a tableau by one.
//!
//! A positive rotation applies the cycle `i → i+1 → ... → k → i` to the
//! entries of `T`, a negative rotation the inverse cycle. The rotation is
//! admissible when the result is again standard and its descent set is
//! `Des(T)` with `j - 1` replaced by `j`; the major index then goes up by one.
//! Positive rotations with `i = j` must also leave the largest entry alone
//! (`k < n`). `φ` takes the lexicographically least admissible positive
//! triple `(i, j, k)`, else the least negative one.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::shapes::{Partition, Shape};
use crate::tableaux::{check_cap, enumerate_syt, StandardTableau, DEFAULT_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RotationKind {
    Positive,
    Negative,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationWitness {
    pub kind: RotationKind,
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub result: StandardTableau,
}

/// Why a tableau admits no rotation, as far as the known exceptional cases go.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FixedPointHint {
    MaxMaj,
    RectangleMin,
    RectangleSubmax,
    Unclassified,
}

impl FixedPointHint {
    pub fn as_str(self) -> &'static str {
        match self {
            FixedPointHint::MaxMaj => "max-maj",
            FixedPointHint::RectangleMin => "rectangle-min",
            FixedPointHint::RectangleSubmax => "rectangle-submax",
            FixedPointHint::Unclassified => "unclassified",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PhiOutcome {
    Rotated(RotationWitness),
    FixedPoint(FixedPointHint),
}

/// Position data of a tableau, indexed by value.
struct Frame<'a> {
    rows: &'a [Vec<usize>],
    offsets: Vec<usize>,
    /// `(row, index in row)` of value `v` at `v - 1`.
    pos: Vec<(usize, usize)>,
    n: usize,
}

impl<'a> Frame<'a> {
    fn new(t: &'a StandardTableau) -> Self {
        let offsets = t.shape().layout().rows.iter().map(|r| r.0).collect();
        let mut pos = vec![(0, 0); t.size()];
        for (r, row) in t.rows().iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                pos[v - 1] = (r, c);
            }
        }
        Frame { rows: t.rows(), offsets, pos, n: t.size() }
    }

    fn row(&self, v: usize) -> usize {
        self.pos[v - 1].0
    }

    /// Entry at absolute column `col` of row `r`, if that cell exists.
    fn at(&self, r: usize, col: usize) -> Option<usize> {
        let off = *self.offsets.get(r)?;
        col.checked_sub(off).and_then(|c| self.rows[r].get(c).copied())
    }

    /// The descent index `j` if the cycle on `i..=k` is admissible.
    fn admissible(&self, kind: RotationKind, i: usize, k: usize) -> Option<usize> {
        let sig = |v: usize| cycle(kind, i, k, v);
        for v in i..=k {
            let w = sig(v);
            let (r, c) = self.pos[v - 1];
            let col = self.offsets[r] + c;
            if c > 0 && sig(self.rows[r][c - 1]) > w {
                return None;
            }
            if let Some(&u) = self.rows[r].get(c + 1) {
                if sig(u) < w {
                    return None;
                }
            }
            if r > 0 {
                if let Some(u) = self.at(r - 1, col) {
                    if sig(u) > w {
                        return None;
                    }
                }
            }
            if let Some(u) = self.at(r + 1, col) {
                if sig(u) < w {
                    return None;
                }
            }
        }
        // new row of value x is the old row of σ⁻¹(x)
        let new_row = |x: usize| self.row(cycle_inverse(kind, i, k, x));
        let mut added = None;
        let mut removed = None;
        for p in i.saturating_sub(1).max(1)..=k.min(self.n - 1) {
            let before = self.row(p + 1) > self.row(p);
            let after = new_row(p + 1) > new_row(p);
            match (before, after) {
                (false, true) if added.is_none() => added = Some(p),
                (true, false) if removed.is_none() => removed = Some(p),
                (false, false) | (true, true) => {}
                _ => return None,
            }
        }
        match (added, removed) {
            (Some(j), Some(r)) if r + 1 == j => Some(j),
            _ => None,
        }
    }

    fn triples(&self, kind: RotationKind) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let n = self.n;
        (1..=n).flat_map(move |i| {
            (i + 1..=n).filter_map(move |k| {
                let j = self.admissible(kind, i, k)?;
                if kind == RotationKind::Positive && i == j && k == n {
                    return None;
                }
                Some((i, j, k))
            })
        })
    }
}

fn cycle(kind: RotationKind, i: usize, k: usize, v: usize) -> usize {
    if v < i || v > k {
        return v;
    }
    match kind {
        RotationKind::Positive if v == k => i,
        RotationKind::Positive => v + 1,
        RotationKind::Negative if v == i => k,
        RotationKind::Negative => v - 1,
    }
}

fn cycle_inverse(kind: RotationKind, i: usize, k: usize, v: usize) -> usize {
    match kind {
        RotationKind::Positive => cycle(RotationKind::Negative, i, k, v),
        RotationKind::Negative => cycle(RotationKind::Positive, i, k, v),
    }
}

fn apply(t: &StandardTableau, kind: RotationKind, i: usize, k: usize) -> StandardTableau {
    let rows = t
        .rows()
        .iter()
        .map(|r| r.iter().map(|&v| cycle(kind, i, k, v)).collect())
        .collect();
    StandardTableau::new_unchecked(t.shape().clone(), rows)
}

fn witnesses(t: &StandardTableau, kind: RotationKind) -> Vec<RotationWitness> {
    let frame = Frame::new(t);
    let mut out: Vec<RotationWitness> = frame
        .triples(kind)
        .map(|(i, j, k)| RotationWitness { kind, i, j, k, result: apply(t, kind, i, k) })
        .collect();
    out.sort_by_key(|w| (w.i, w.j, w.k));
    out
}

/// All admissible positive rotations, sorted by `(i, j, k)`.
pub fn positive_rotations(t: &StandardTableau) -> Vec<RotationWitness> {
    witnesses(t, RotationKind::Positive)
}

/// All admissible negative rotations, sorted by `(i, j, k)`.
pub fn negative_rotations(t: &StandardTableau) -> Vec<RotationWitness> {
    witnesses(t, RotationKind::Negative)
}

fn least_triple(t: &StandardTableau) -> Option<(RotationKind, usize, usize, usize)> {
    let frame = Frame::new(t);
    [RotationKind::Positive, RotationKind::Negative]
        .into_iter()
        .find_map(|kind| frame.triples(kind).min_by_key(|&(i, j, k)| (i, j, k)).map(|(i, j, k)| (kind, i, j, k)))
}

/// Classifies a tableau with no admissible rotation.
pub fn fixed_point_hint(shape: &Shape, maj: usize) -> FixedPointHint {
    let Some(lambda) = shape.as_partition() else {
        return FixedPointHint::Unclassified;
    };
    let n = lambda.size();
    let max = n * n.saturating_sub(1) / 2 - lambda.conjugate().b_stat();
    if maj == max {
        FixedPointHint::MaxMaj
    } else if lambda.is_rectangle() && maj == lambda.b_stat() {
        FixedPointHint::RectangleMin
    } else if lambda.is_proper_rectangle() && maj + 2 == max {
        FixedPointHint::RectangleSubmax
    } else {
        FixedPointHint::Unclassified
    }
}

pub fn phi(t: &StandardTableau) -> PhiOutcome {
    match least_triple(t) {
        Some((kind, i, j, k)) => PhiOutcome::Rotated(RotationWitness { kind, i, j, k, result: apply(t, kind, i, k) }),
        None => PhiOutcome::FixedPoint(fixed_point_hint(t.shape(), t.maj())),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPoint {
    pub tableau: StandardTableau,
    pub maj: usize,
    pub hint: FixedPointHint,
}

/// Tableaux of shape `λ` that admit no rotation, in enumeration order.
pub fn rotation_fixed_points(lambda: &Partition) -> Result<Vec<FixedPoint>> {
    rotation_fixed_points_with_cap(lambda, DEFAULT_CAP)
}

pub fn rotation_fixed_points_with_cap(lambda: &Partition, cap: usize) -> Result<Vec<FixedPoint>> {
    let shape = Shape::Straight(lambda.clone());
    check_cap(&shape, cap)?;
    let all: Vec<StandardTableau> = enumerate_syt(&shape).collect();
    Ok(all
        .into_par_iter()
        .filter(|t| least_triple(t).is_none())
        .map(|t| {
            let maj = t.maj();
            FixedPoint { hint: fixed_point_hint(&shape, maj), maj, tableau: t }
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelReport {
    pub maj: usize,
    pub tableaux: usize,
    pub fixed: usize,
    /// Distinct tableaux on this level hit by `φ` from the level below.
    pub images: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankedReport {
    pub shape: String,
    pub tableaux: usize,
    pub fixed_points: usize,
    /// Tableaux whose image is not a standard tableau one level up.
    pub increment_violations: Vec<StandardTableau>,
    pub levels: Vec<LevelReport>,
    /// Levels below the top on which every tableau is fixed.
    pub levels_without_exit: Vec<usize>,
    /// Nonempty levels above the bottom that receive no image.
    pub unreached_levels: Vec<usize>,
    pub hints: BTreeMap<String, usize>,
}

impl RankedReport {
    pub fn increments_valid(&self) -> bool {
        self.increment_violations.is_empty()
    }
}

/// Applies `φ` to every tableau of `λ` and tabulates the result per level.
pub fn verify_ranked_increment(lambda: &Partition) -> Result<RankedReport> {
    let shape = Shape::Straight(lambda.clone());
    check_cap(&shape, DEFAULT_CAP)?;
    let all: Vec<StandardTableau> = enumerate_syt(&shape).collect();
    let outcomes: Vec<(usize, PhiOutcome)> = all.par_iter().map(|t| (t.maj(), phi(t))).collect();

    let mut levels: BTreeMap<usize, LevelReport> = BTreeMap::new();
    let mut images: HashMap<&StandardTableau, usize> = HashMap::new();
    let mut violations = Vec::new();
    let mut hints = BTreeMap::new();
    for (t, (maj, outcome)) in all.iter().zip(&outcomes) {
        let level = levels.entry(*maj).or_insert(LevelReport { maj: *maj, tableaux: 0, fixed: 0, images: 0 });
        level.tableaux += 1;
        match outcome {
            PhiOutcome::FixedPoint(h) => {
                level.fixed += 1;
                *hints.entry(h.as_str().to_string()).or_insert(0) += 1;
            }
            PhiOutcome::Rotated(w) => {
                let valid = StandardTableau::new(w.result.shape().clone(), w.result.rows().to_vec()).is_ok();
                if !valid || w.result.maj() != maj + 1 {
                    violations.push(t.clone());
                }
                images.insert(&w.result, w.result.maj());
            }
        }
    }
    for maj in images.values() {
        if let Some(level) = levels.get_mut(maj) {
            level.images += 1;
        }
    }
    let top = levels.keys().next_back().copied().unwrap_or(0);
    let bottom = levels.keys().next().copied().unwrap_or(0);
    let levels: Vec<LevelReport> = levels.into_values().collect();
    let levels_without_exit = levels
        .iter()
        .filter(|l| l.maj < top && l.fixed == l.tableaux)
        .map(|l| l.maj)
        .collect();
    let unreached_levels = levels
        .iter()
        .filter(|l| l.maj > bottom && l.images == 0)
        .map(|l| l.maj)
        .collect();
    Ok(RankedReport {
        shape: lambda.to_string(),
        tableaux: all.len(),
        fixed_points: outcomes.iter().filter(|(_, o)| matches!(o, PhiOutcome::FixedPoint(_))).count(),
        increment_violations: violations,
        levels,
        levels_without_exit,
        unreached_levels,
        hints,
    })
}

fn dot_label(t: &StandardTableau) -> String {
    let rows: Vec<String> = t
        .rows()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
        .collect();
    format!("{}\\nmaj {}", rows.join("\\n"), t.maj())
}

/// The functional graph of `φ` on `SYT(λ)` in Graphviz DOT syntax.
pub fn phi_graph_dot(lambda: &Partition) -> Result<String> {
    let shape = Shape::Straight(lambda.clone());
    check_cap(&shape, DEFAULT_CAP)?;
    let all: Vec<StandardTableau> = enumerate_syt(&shape).collect();
    let index: HashMap<&StandardTableau, usize> = all.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut out = String::new();
    writeln!(out, "digraph phi {{").unwrap();
    writeln!(out, "  label=\"{lambda}\";").unwrap();
    writeln!(out, "  node [shape=box, fontname=monospace];").unwrap();
    let mut edges = Vec::new();
    for (idx, t) in all.iter().enumerate() {
        match phi(t) {
            PhiOutcome::FixedPoint(_) => {
                writeln!(out, "  t{idx} [label=\"{}\", peripheries=2];", dot_label(t)).unwrap();
            }
            PhiOutcome::Rotated(w) => {
                writeln!(out, "  t{idx} [label=\"{}\"];", dot_label(t)).unwrap();
                let sign = if w.kind == RotationKind::Positive { '+' } else { '-' };
                edges.push((idx, index[&w.result], format!("{sign}({},{},{})", w.i, w.j, w.k)));
            }
        }
    }
    for (a, b, label) in edges {
        writeln!(out, "  t{a} -> t{b} [label=\"{label}\"];").unwrap();
    }
    writeln!(out, "}}").unwrap();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::partitions;

    fn tab(shape: &str, rows: &[&[usize]]) -> StandardTableau {
        StandardTableau::new(shape.parse().unwrap(), rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Brute-force admissibility straight from the definition.
    fn naive(t: &StandardTableau, kind: RotationKind) -> Vec<(usize, usize, usize)> {
        let n = t.size();
        let des = t.descent_data().descents;
        let mut out = Vec::new();
        for i in 1..=n {
            for k in i + 1..=n {
                let rows: Vec<Vec<usize>> =
                    t.rows().iter().map(|r| r.iter().map(|&v| cycle(kind, i, k, v)).collect()).collect();
                let Ok(t2) = StandardTableau::new(t.shape().clone(), rows) else { continue };
                let des2 = t2.descent_data().descents;
                let added: Vec<_> = des2.difference(&des).copied().collect();
                let removed: Vec<_> = des.difference(&des2).copied().collect();
                if added.len() == 1 && removed.len() == 1 && removed[0] + 1 == added[0] {
                    let j = added[0];
                    if kind == RotationKind::Positive && i == j && k == n {
                        continue;
                    }
                    out.push((i, j, k));
                }
            }
        }
        out
    }

    #[test]
    fn fast_admissibility_matches_definition() {
        for s in ["4,2", "3,2,1", "3,3", "2,2,1,1", "4,3,1"] {
            for t in enumerate_syt(&s.parse().unwrap()) {
                for kind in [RotationKind::Positive, RotationKind::Negative] {
                    let fast: Vec<_> = witnesses(&t, kind).iter().map(|w| (w.i, w.j, w.k)).collect();
                    assert_eq!(fast, naive(&t, kind), "{t:?}");
                }
            }
        }
    }

    #[test]
    fn small_examples() {
        let top = tab("2,1", &[&[1, 2], &[3]]);
        assert!(positive_rotations(&top).is_empty());
        assert!(negative_rotations(&top).is_empty());
        let low = tab("2,1", &[&[1, 3], &[2]]);
        match phi(&low) {
            PhiOutcome::Rotated(w) => assert_eq!(w.result, top),
            other => panic!("{other:?}"),
        }
        let row = StandardTableau::row_reading("5".parse().unwrap());
        assert!(positive_rotations(&row).is_empty() && negative_rotations(&row).is_empty());
        assert_eq!(phi(&row), PhiOutcome::FixedPoint(FixedPointHint::MaxMaj));
    }

    #[test]
    fn rectangle_fixed_points() {
        let row = tab("2,2", &[&[1, 2], &[3, 4]]);
        assert_eq!(phi(&row), PhiOutcome::FixedPoint(FixedPointHint::RectangleMin));
        let fixed = rotation_fixed_points(&p("3,3")).unwrap();
        let levels: Vec<_> = fixed.iter().map(|f| (f.maj, f.hint)).collect();
        assert_eq!(
            levels,
            vec![
                (3, FixedPointHint::RectangleMin),
                (7, FixedPointHint::RectangleSubmax),
                (9, FixedPointHint::MaxMaj)
            ]
        );
    }

    #[test]
    fn increments_on_small_shapes() {
        for n in 1..=7 {
            for lam in partitions(n) {
                let report = verify_ranked_increment(&lam).unwrap();
                assert!(report.increments_valid(), "{lam}");
                let shape = Shape::Straight(lam.clone());
                for t in enumerate_syt(&shape) {
                    for w in positive_rotations(&t).into_iter().chain(negative_rotations(&t)) {
                        assert_eq!(w.result.maj(), t.maj() + 1);
                        assert!(w.i <= w.j && w.j <= w.k);
                    }
                }
            }
        }
        let r = verify_ranked_increment(&p("2,1")).unwrap();
        assert_eq!(r.fixed_points, 1);
        let r = verify_ranked_increment(&p("4,2")).unwrap();
        assert!(r.increments_valid());
        assert_eq!(r.tableaux, 9);
    }

    #[test]
    fn single_row_has_one_fixed_point() {
        assert_eq!(rotation_fixed_points(&p("6")).unwrap().len(), 1);
    }

    #[test]
    fn dot_export() {
        let dot = phi_graph_dot(&p("2,1")).unwrap();
        assert!(dot.starts_with("digraph phi {"));
        assert!(dot.contains("t1 -> t0"));
        assert!(dot.contains("peripheries=2"));
    }

    #[test]
    fn witness_json() {
        let low = tab("2,1", &[&[1, 3], &[2]]);
        let json = serde_json::to_value(phi(&low)).unwrap();
        assert!(json.get("rotated").is_some());
        let json = serde_json::to_value(phi(&tab("2,1", &[&[1, 2], &[3]]))).unwrap();
        assert_eq!(json, serde_json::json!({"fixed_point": "max-maj"}));
    }
}
