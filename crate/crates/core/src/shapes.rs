//! Partitions, block diagonal shapes and their scalar statistics.
//!
//! Text form: a partition is written as comma-separated parts in weakly
//! decreasing order (`5,4,4,2`); a block diagonal shape joins its blocks
//! with `/` (`3,1/2/1,1`). JSON form: a partition is an array of integers,
//! a block diagonal shape an array of such arrays.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition, stored as its weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidShape(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// The partition `(n)` with a single row.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Partition { parts: vec![] }
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The partition `(1^n)` with a single column.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    pub fn num_cols(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `i` (0-based), zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.num_cols();
        let parts = (1..=cols)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Every row of the same length.
    pub fn is_rectangle(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }

    /// A rectangle with at least two rows and two columns.
    pub fn is_proper_rectangle(&self) -> bool {
        !self.is_empty() && self.is_rectangle() && self.num_rows() >= 2 && self.num_cols() >= 2
    }

    /// Cells in English notation, row by row, 1-based.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| Cell { row: i + 1, col: j }))
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.part(cell.row - 1)
    }

    /// Hook length `λ_i + λ'_j - i - j + 1` of a cell of the diagram.
    pub fn hook_length(&self, cell: Cell) -> Option<usize> {
        if !self.contains(cell) {
            return None;
        }
        let arm = self.part(cell.row - 1) - cell.col;
        let leg = self.parts[cell.row..]
            .iter()
            .take_while(|&&p| p >= cell.col)
            .count();
        Some(arm + leg + 1)
    }

    /// The hook multiset, sorted in decreasing order.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut hooks: Vec<usize> = self
            .cells()
            .map(|c| self.part(c.row - 1) + conj.part(c.col - 1) + 1 - c.row - c.col)
            .collect();
        hooks.sort_unstable_by(|a, b| b.cmp(a));
        hooks
    }

    /// `b(λ) = Σ (i-1) λ_i`, the least major index attained on `SYT(λ)`.
    pub fn b_stat(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// Cells outside the longest first row or first column.
    pub fn aft(&self) -> usize {
        self.size() - self.num_cols().max(self.num_rows())
    }

    /// Number of removable corners, i.e. distinct part values.
    pub fn corner_count(&self) -> usize {
        let mut count = 0;
        let mut prev = None;
        for &p in &self.parts {
            if prev != Some(p) {
                count += 1;
                prev = Some(p);
            }
        }
        count
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition { parts: vec![] });
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidShape(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// A 1-based cell `(row, col)` of a diagram in English notation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

/// Straight shapes placed corner to corner, each block strictly below and
/// strictly left of the one before it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Partition>", into = "Vec<Partition>")]
pub struct BlockDiagonalShape {
    blocks: Vec<Partition>,
}

impl BlockDiagonalShape {
    pub fn new(blocks: Vec<Partition>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidShape("block diagonal shape needs at least one block".into()));
        }
        if blocks.iter().any(Partition::is_empty) {
            return Err(Error::InvalidShape("block diagonal shape has an empty block".into()));
        }
        Ok(BlockDiagonalShape { blocks })
    }

    pub fn blocks(&self) -> &[Partition] {
        &self.blocks
    }

    pub fn size(&self) -> usize {
        self.blocks.iter().map(Partition::size).sum()
    }

    /// Union of the blocks' hook multisets, sorted decreasing.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let mut hooks: Vec<usize> = self.blocks.iter().flat_map(|b| b.hook_lengths()).collect();
        hooks.sort_unstable_by(|a, b| b.cmp(a));
        hooks
    }

    /// Total size minus the longest first row or first column over all blocks.
    pub fn aft(&self) -> usize {
        let longest = self
            .blocks
            .iter()
            .map(|b| b.num_cols().max(b.num_rows()))
            .max()
            .unwrap_or(0);
        self.size() - longest
    }

    /// Sizes of the blocks, the composition `α(λ̲)`.
    pub fn composition(&self) -> Vec<usize> {
        self.blocks.iter().map(Partition::size).collect()
    }
}

impl TryFrom<Vec<Partition>> for BlockDiagonalShape {
    type Error = Error;
    fn try_from(blocks: Vec<Partition>) -> Result<Self> {
        BlockDiagonalShape::new(blocks)
    }
}

impl From<BlockDiagonalShape> for Vec<Partition> {
    fn from(s: BlockDiagonalShape) -> Self {
        s.blocks
    }
}

impl fmt::Display for BlockDiagonalShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl FromStr for BlockDiagonalShape {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let blocks = s.split('/').map(str::parse).collect::<Result<Vec<Partition>>>()?;
        BlockDiagonalShape::new(blocks)
    }
}

/// Either a straight shape or a block diagonal one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Shape {
    Straight(Partition),
    Block(BlockDiagonalShape),
}

/// Row layout of a shape: for each row (top to bottom) the column offset of
/// its first cell and its length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowLayout {
    pub rows: Vec<(usize, usize)>,
}

impl RowLayout {
    /// True when the cell `(row, col)` (0-based) belongs to the diagram.
    pub fn contains(&self, row: usize, col: usize) -> bool {
        self.rows
            .get(row)
            .is_some_and(|&(off, len)| col >= off && col < off + len)
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.1).sum()
    }
}

impl Shape {
    pub fn size(&self) -> usize {
        match self {
            Shape::Straight(p) => p.size(),
            Shape::Block(b) => b.size(),
        }
    }

    pub fn hook_lengths(&self) -> Vec<usize> {
        match self {
            Shape::Straight(p) => p.hook_lengths(),
            Shape::Block(b) => b.hook_lengths(),
        }
    }

    pub fn aft(&self) -> usize {
        match self {
            Shape::Straight(p) => p.aft(),
            Shape::Block(b) => b.aft(),
        }
    }

    /// Least major index over the tableaux of the shape: `b(λ)` for a
    /// straight shape and the sum of the blocks' `b` values otherwise.
    pub fn min_maj(&self) -> usize {
        match self {
            Shape::Straight(p) => p.b_stat(),
            Shape::Block(b) => b.blocks().iter().map(Partition::b_stat).sum(),
        }
    }

    pub fn blocks(&self) -> &[Partition] {
        match self {
            Shape::Straight(p) => std::slice::from_ref(p),
            Shape::Block(b) => b.blocks(),
        }
    }

    pub fn as_partition(&self) -> Option<&Partition> {
        match self {
            Shape::Straight(p) => Some(p),
            Shape::Block(_) => None,
        }
    }

    /// The stacked diagram. Later blocks sit strictly below and strictly left
    /// of earlier ones.
    pub fn layout(&self) -> RowLayout {
        let blocks = self.blocks();
        let mut rows = Vec::new();
        for (idx, block) in blocks.iter().enumerate() {
            let offset: usize = blocks[idx + 1..].iter().map(Partition::num_cols).sum();
            rows.extend(block.parts().iter().map(|&len| (offset, len)));
        }
        RowLayout { rows }
    }
}

impl From<Partition> for Shape {
    fn from(p: Partition) -> Self {
        Shape::Straight(p)
    }
}

impl From<BlockDiagonalShape> for Shape {
    fn from(b: BlockDiagonalShape) -> Self {
        Shape::Block(b)
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Straight(p) => p.fmt(f),
            Shape::Block(b) => b.fmt(f),
        }
    }
}

impl FromStr for Shape {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s.contains('/') {
            s.parse().map(Shape::Block)
        } else {
            s.parse().map(Shape::Straight)
        }
    }
}

/// Iterator over all partitions of `n` in reverse lexicographic order,
/// starting from `(n)` and ending at `(1^n)`.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<usize>>,
}

pub fn partitions(n: usize) -> Partitions {
    Partitions {
        current: Some(if n == 0 { vec![] } else { vec![n] }),
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        let out = Partition { parts: cur.clone() };
        // Next in reverse lex order: strip trailing 1s, decrement the last
        // part > 1, then refill greedily with the freed amount.
        let mut parts = cur;
        let mut freed = 0;
        while parts.last() == Some(&1) {
            parts.pop();
            freed += 1;
        }
        if let Some(last) = parts.last_mut() {
            *last -= 1;
            let cap = *last;
            freed += 1;
            while freed > 0 {
                let take = freed.min(cap);
                parts.push(take);
                freed -= take;
            }
            self.current = Some(parts);
        }
        Some(out)
    }
}

/// All partitions with `lo <= |λ| <= hi`, grouped by size.
pub fn partitions_in_range(lo: usize, hi: usize) -> impl Iterator<Item = Partition> {
    (lo..=hi).flat_map(partitions)
}
