//! Standard and reverse standard Young tableaux, descents and the
//! enumeration oracle for the major index generating function.
//!
//! A tableau stores its entries row by row in the stacked diagram of its
//! shape (see [`Shape::layout`]), so a block diagonal tableau has one row per
//! row of each block, blocks listed top to bottom.
//!
//! Enumeration order: tableaux are produced in lexicographic order of their
//! row words, where the row word lists, for `v = 1..n`, the row holding `v`.
//! The first tableau is the row reading, the last the column reading.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qpoly::QPoly;
use crate::shapes::{Partition, RowLayout, Shape};

/// Default ceiling on the number of cells for exhaustive enumeration.
pub const DEFAULT_CAP: usize = 16;

#[derive(Debug, Clone, Serialize, Deserialize)]
struct TableauJson {
    shape: Shape,
    rows: Vec<Vec<usize>>,
}

/// A bijective filling by `1..n`, increasing along rows and columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TableauJson", into = "TableauJson")]
pub struct StandardTableau {
    shape: Shape,
    rows: Vec<Vec<usize>>,
}

/// A bijective filling by `1..n`, decreasing along rows and columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TableauJson", into = "TableauJson")]
pub struct ReverseStandardTableau {
    shape: Shape,
    rows: Vec<Vec<usize>>,
}

/// Descent set and major index of a tableau.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescentData {
    pub descents: BTreeSet<usize>,
    pub maj: usize,
}

fn check_filling(shape: &Shape, rows: &[Vec<usize>], increasing: bool) -> Result<()> {
    let layout = shape.layout();
    if rows.len() != layout.rows.len()
        || rows.iter().zip(&layout.rows).any(|(r, &(_, len))| r.len() != len)
    {
        return Err(Error::InvalidTableau(format!("rows do not match shape {shape}")));
    }
    let n = layout.size();
    let mut seen = vec![false; n + 1];
    for &v in rows.iter().flatten() {
        if v == 0 || v > n || seen[v] {
            return Err(Error::InvalidTableau(format!("entries are not a permutation of 1..{n}")));
        }
        seen[v] = true;
    }
    let ordered = |a: usize, b: usize| if increasing { a < b } else { a > b };
    for (r, row) in rows.iter().enumerate() {
        let off = layout.rows[r].0;
        for (t, &v) in row.iter().enumerate() {
            if t > 0 && !ordered(row[t - 1], v) {
                return Err(Error::InvalidTableau(format!("row {} out of order", r + 1)));
            }
            let col = off + t;
            if r > 0 && layout.contains(r - 1, col) {
                let above = rows[r - 1][col - layout.rows[r - 1].0];
                if !ordered(above, v) {
                    return Err(Error::InvalidTableau(format!("column {} out of order", col + 1)));
                }
            }
        }
    }
    Ok(())
}

impl TryFrom<TableauJson> for StandardTableau {
    type Error = Error;
    fn try_from(j: TableauJson) -> Result<Self> {
        StandardTableau::new(j.shape, j.rows)
    }
}

impl From<StandardTableau> for TableauJson {
    fn from(t: StandardTableau) -> Self {
        TableauJson { shape: t.shape, rows: t.rows }
    }
}

impl TryFrom<TableauJson> for ReverseStandardTableau {
    type Error = Error;
    fn try_from(j: TableauJson) -> Result<Self> {
        ReverseStandardTableau::new(j.shape, j.rows)
    }
}

impl From<ReverseStandardTableau> for TableauJson {
    fn from(t: ReverseStandardTableau) -> Self {
        TableauJson { shape: t.shape, rows: t.rows }
    }
}

impl StandardTableau {
    pub fn new(shape: Shape, rows: Vec<Vec<usize>>) -> Result<Self> {
        check_filling(&shape, &rows, true)?;
        Ok(StandardTableau { shape, rows })
    }

    pub(crate) fn new_unchecked(shape: Shape, rows: Vec<Vec<usize>>) -> Self {
        debug_assert!(check_filling(&shape, &rows, true).is_ok());
        StandardTableau { shape, rows }
    }

    /// Fills the stacked diagram row by row with `1..n`.
    pub fn row_reading(shape: Shape) -> Self {
        let mut next = 1;
        let rows = shape
            .layout()
            .rows
            .iter()
            .map(|&(_, len)| {
                let row: Vec<usize> = (next..next + len).collect();
                next += len;
                row
            })
            .collect();
        StandardTableau::new_unchecked(shape, rows)
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Row index (0-based, stacked diagram) of each value; entry `v - 1`
    /// belongs to value `v`.
    pub fn row_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.size()];
        for (r, row) in self.rows.iter().enumerate() {
            for &v in row {
                out[v - 1] = r;
            }
        }
        out
    }

    pub fn descent_data(&self) -> DescentData {
        let rows = self.row_of();
        let descents: BTreeSet<usize> = (1..rows.len()).filter(|&i| rows[i] > rows[i - 1]).collect();
        let maj = descents.iter().sum();
        DescentData { descents, maj }
    }

    pub fn maj(&self) -> usize {
        self.descent_data().maj
    }

    /// Value complementation `v ↦ n + 1 - v`.
    pub fn complement(&self) -> ReverseStandardTableau {
        let n = self.size();
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&v| n + 1 - v).collect())
            .collect();
        ReverseStandardTableau { shape: self.shape.clone(), rows }
    }
}

impl ReverseStandardTableau {
    pub fn new(shape: Shape, rows: Vec<Vec<usize>>) -> Result<Self> {
        check_filling(&shape, &rows, false)?;
        Ok(ReverseStandardTableau { shape, rows })
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn complement(&self) -> StandardTableau {
        let n = self.size();
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&v| n + 1 - v).collect())
            .collect();
        StandardTableau::new_unchecked(self.shape.clone(), rows)
    }
}

/// Depth-first walk over row words of a layout.
#[derive(Debug, Clone)]
struct RowWords {
    rows: Vec<(usize, usize)>,
    filled: Vec<usize>,
    word: Vec<usize>,
    n: usize,
    fresh: bool,
    done: bool,
}

impl RowWords {
    fn new(layout: &RowLayout) -> Self {
        let mut w = RowWords {
            rows: layout.rows.clone(),
            filled: vec![0; layout.rows.len()],
            word: Vec::with_capacity(layout.size()),
            n: layout.size(),
            fresh: true,
            done: false,
        };
        w.complete();
        w
    }

    fn addable(&self, r: usize) -> bool {
        let (off, len) = self.rows[r];
        if self.filled[r] >= len {
            return false;
        }
        if r == 0 {
            return true;
        }
        let col = off + self.filled[r];
        let (up_off, up_len) = self.rows[r - 1];
        col < up_off || col >= up_off + up_len || col < up_off + self.filled[r - 1]
    }

    fn push_from(&mut self, start: usize) -> bool {
        match (start..self.rows.len()).find(|&r| self.addable(r)) {
            Some(r) => {
                self.filled[r] += 1;
                self.word.push(r);
                true
            }
            None => false,
        }
    }

    fn complete(&mut self) {
        while self.word.len() < self.n {
            let ok = self.push_from(0);
            debug_assert!(ok, "a partial filling of an order ideal always extends");
        }
    }

    /// Advances to the lexicographically next word; false when exhausted.
    fn advance(&mut self) -> bool {
        while let Some(r) = self.word.pop() {
            self.filled[r] -= 1;
            if self.push_from(r + 1) {
                self.complete();
                return true;
            }
        }
        false
    }

    fn step(&mut self) -> bool {
        if self.done {
            return false;
        }
        if self.fresh {
            self.fresh = false;
        } else if !self.advance() {
            self.done = true;
            return false;
        }
        true
    }
}

/// Stream of the standard tableaux of a shape.
#[derive(Debug, Clone)]
pub struct SytIter {
    shape: Shape,
    words: RowWords,
}

impl Iterator for SytIter {
    type Item = StandardTableau;

    fn next(&mut self) -> Option<StandardTableau> {
        if !self.words.step() {
            return None;
        }
        let mut rows: Vec<Vec<usize>> = self.words.rows.iter().map(|&(_, l)| Vec::with_capacity(l)).collect();
        for (v, &r) in self.words.word.iter().enumerate() {
            rows[r].push(v + 1);
        }
        Some(StandardTableau::new_unchecked(self.shape.clone(), rows))
    }
}

pub fn enumerate_syt(shape: &Shape) -> SytIter {
    SytIter { shape: shape.clone(), words: RowWords::new(&shape.layout()) }
}

/// Stream of the reverse standard tableaux, the complements of
/// [`enumerate_syt`] in the same order.
pub fn enumerate_rsyt(shape: &Shape) -> impl Iterator<Item = ReverseStandardTableau> {
    enumerate_syt(shape).map(|t| t.complement())
}

pub(crate) fn check_cap(shape: &Shape, cap: usize) -> Result<()> {
    let cells = shape.size();
    if cells > cap {
        return Err(Error::CapExceeded { cells, cap });
    }
    Ok(())
}

/// Number of standard tableaux of a straight shape by the hook length formula.
pub fn syt_count(lambda: &Partition) -> BigInt {
    let mut num: BigInt = (1..=lambda.size()).map(BigInt::from).product();
    for h in lambda.hook_lengths() {
        num /= BigInt::from(h);
    }
    num
}

/// `Σ_T q^{maj(T)}` by enumeration against the default cap.
pub fn brute_force_maj_gf(shape: &Shape) -> Result<QPoly<BigInt>> {
    brute_force_maj_gf_with_cap(shape, DEFAULT_CAP)
}

pub fn brute_force_maj_gf_with_cap(shape: &Shape, cap: usize) -> Result<QPoly<BigInt>> {
    check_cap(shape, cap)?;
    let n = shape.size();
    let mut counts = vec![0u64; n * n.saturating_sub(1) / 2 + 1];
    let mut words = RowWords::new(&shape.layout());
    while words.step() {
        let word = &words.word;
        let maj: usize = (1..word.len()).filter(|&i| word[i] > word[i - 1]).sum();
        counts[maj] += 1;
    }
    Ok(QPoly::from_coeffs(counts.into_iter().map(BigInt::from).collect()))
}

/// Hook length of every cell of the stacked diagram, computed inside the
/// cell's block; laid out like the tableau rows.
pub fn cell_hooks(shape: &Shape) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for block in shape.blocks() {
        let conj = block.conjugate();
        for (i, &len) in block.parts().iter().enumerate() {
            out.push((0..len).map(|j| len + conj.part(j) - i - j - 1).collect());
        }
    }
    out
}

/// Outcome of the reverse tableau hook checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RsytHookReport {
    pub shape: String,
    pub tableaux_checked: usize,
    pub holds: bool,
    /// First reverse tableau and degree that broke a check, if any.
    pub counterexample: Option<(ReverseStandardTableau, Option<u32>)>,
}

/// `h_{d-1}(x, y) = Σ_{a+b=d-1} x^a y^b`.
fn complete_homogeneous_2(d_minus_1: u32, x: &BigInt, y: &BigInt) -> BigInt {
    (0..=d_minus_1).map(|a| x.pow(a) * y.pow(d_minus_1 - a)).sum()
}

/// Checks `T_c >= h_c` on every reverse tableau and cell, and for each `d`
/// that `Σ j^d - Σ h_c^d = Σ (T_c^d - h_c^d) = Σ (T_c - h_c) h_{d-1}(T_c, h_c)`.
pub fn verify_rsyt_hook_bound(
    shape: &Shape,
    degrees: std::ops::RangeInclusive<u32>,
    cap: usize,
) -> Result<RsytHookReport> {
    check_cap(shape, cap)?;
    let hooks = cell_hooks(shape);
    let n = shape.size();
    let degrees: Vec<u32> = degrees.filter(|&d| d >= 1).collect();
    let brackets: Vec<BigInt> = degrees
        .iter()
        .map(|&d| {
            let js: BigInt = (1..=n).map(|j| BigInt::from(j).pow(d)).sum();
            let hs: BigInt = hooks.iter().flatten().map(|&h| BigInt::from(h).pow(d)).sum();
            js - hs
        })
        .collect();
    let mut checked = 0;
    for t in enumerate_rsyt(shape) {
        checked += 1;
        let pairs: Vec<(BigInt, BigInt)> = t
            .rows()
            .iter()
            .zip(&hooks)
            .flat_map(|(tr, hr)| tr.iter().zip(hr).map(|(&a, &b)| (BigInt::from(a), BigInt::from(b))))
            .collect();
        let fail = |d| RsytHookReport {
            shape: shape.to_string(),
            tableaux_checked: checked,
            holds: false,
            counterexample: Some((t.clone(), d)),
        };
        if pairs.iter().any(|(tc, hc)| tc < hc) {
            return Ok(fail(None));
        }
        for (&d, bracket) in degrees.iter().zip(&brackets) {
            let middle: BigInt = pairs.iter().map(|(tc, hc)| tc.pow(d) - hc.pow(d)).sum();
            let right: BigInt = pairs
                .iter()
                .map(|(tc, hc)| (tc - hc) * complete_homogeneous_2(d - 1, tc, hc))
                .sum();
            if &middle != bracket || right != middle {
                return Ok(fail(Some(d)));
            }
        }
    }
    Ok(RsytHookReport { shape: shape.to_string(), tableaux_checked: checked, holds: true, counterexample: None })
}
