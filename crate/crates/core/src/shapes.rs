//! Partitions and skew shapes in French notation.
//!
//! Rows are numbered bottom-up from 1 and columns left-to-right from 1, so
//! the cell `(r, c)` of `λ/μ` exists iff `μ_r < c ≤ λ_r`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. No zeros are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Length of row `r` (1-based); zero beyond the last part.
    pub fn row(&self, r: usize) -> usize {
        if r == 0 {
            return usize::MAX;
        }
        self.0.get(r - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// The transpose: `λᵗ` has `λ_i` cells in column `i`.
    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=width)
                .map(|c| self.0.iter().take_while(|&&p| p >= c).count())
                .collect(),
        )
    }

    /// All partitions of `n` in lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in 1..=rem.min(max) {
                cur.push(p);
                go(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// All partitions `ν ⊇ self` with `|ν| = |self| + extra`, lexicographic.
    pub fn supersets(&self, extra: usize) -> Vec<Partition> {
        fn go(
            base: &Partition,
            r: usize,
            rem: usize,
            cap: usize,
            cur: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            let floor = base.row(r);
            if floor == 0 && rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if floor > cap {
                return;
            }
            let hi = cap.min(floor + rem);
            for len in floor.max(1)..=hi {
                cur.push(len);
                go(base, r + 1, rem - (len - floor), len, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(self, 1, extra, usize::MAX, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// All partitions `ν ⊆ self` with `|ν| = |self| - remove`, lexicographic.
    pub fn subsets(&self, remove: usize) -> Vec<Partition> {
        if remove > self.size() {
            return Vec::new();
        }
        let target = self.size() - remove;
        fn go(
            base: &Partition,
            r: usize,
            rem: usize,
            cap: usize,
            cur: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            let ceil = base.row(r).min(cap).min(rem);
            for len in 1..=ceil {
                cur.push(len);
                go(base, r + 1, rem - len, len, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(self, 1, target, usize::MAX, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        write_parts(f, &self.0)
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `3,2,2`, the compact all-single-digit form `322`, and `∅` or
    /// the empty string for the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() || t == "∅" {
            return Ok(Partition::empty());
        }
        let bad = |reason: &str| Error::Parse {
            token: s.to_string(),
            reason: reason.to_string(),
        };
        let parts: Vec<usize> = if t.contains(',') {
            t.split(',')
                .map(|p| p.trim().parse::<usize>().map_err(|_| bad("expected a positive integer part")))
                .collect::<Result<_>>()?
        } else if t.chars().all(|c| c.is_ascii_digit()) {
            t.chars().map(|c| c as usize - '0' as usize).collect()
        } else {
            return Err(bad("expected digits, commas, or ∅"));
        };
        if parts.contains(&0) {
            return Err(bad("parts must be positive"));
        }
        Partition::new(parts).map_err(|_| bad("parts must be weakly decreasing"))
    }
}

/// Row/column coordinates of a cell; both start at 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl FromStr for Cell {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            token: s.to_string(),
            reason: "expected a cell `row,col`".to_string(),
        };
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (r, c) = t.split_once(',').ok_or_else(bad)?;
        let row: usize = r.trim().parse().map_err(|_| bad())?;
        let col: usize = c.trim().parse().map_err(|_| bad())?;
        if row == 0 || col == 0 {
            return Err(bad());
        }
        Ok(Cell { row, col })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StripKind {
    /// No two cells in the same column.
    Horizontal,
    /// No two cells in the same row.
    Vertical,
}

impl StripKind {
    pub fn transpose(self) -> Self {
        match self {
            StripKind::Horizontal => StripKind::Vertical,
            StripKind::Vertical => StripKind::Horizontal,
        }
    }
}

/// The skew shape `outer/inner`. Equality is componentwise; there is no
/// quotient by translation.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    /// Convenience constructor from raw part lists.
    pub fn from_parts(outer: &[usize], inner: &[usize]) -> Result<Self> {
        SkewShape::new(Partition::new(outer.to_vec())?, Partition::new(inner.to_vec())?)
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of stored rows (the length of the outer partition).
    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Columns occupied in row `r` as a half-open range `inner_r+1..=outer_r`.
    pub fn row_span(&self, r: usize) -> (usize, usize) {
        (self.inner.row(r), self.outer.row(r))
    }

    pub fn row_len(&self, r: usize) -> usize {
        self.outer.row(r) - self.inner.row(r)
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && self.inner.row(cell.row) < cell.col && cell.col <= self.outer.row(cell.row)
    }

    /// Cells in row-major order: bottom row first, left to right.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (1..=self.num_rows()).flat_map(move |r| {
            let (lo, hi) = self.row_span(r);
            (lo + 1..=hi).map(move |c| Cell::new(r, c))
        })
    }

    pub fn conjugate(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }

    /// Every skew shape whose outer partition has size at most `max_outer`,
    /// ordered by outer size, then outer, then inner.
    pub fn all_up_to(max_outer: usize) -> Vec<SkewShape> {
        let mut out = Vec::new();
        for n in 0..=max_outer {
            for outer in Partition::all_of_size(n) {
                for k in 0..=n {
                    for inner in outer.subsets(k) {
                        out.push(SkewShape {
                            outer: outer.clone(),
                            inner,
                        });
                    }
                }
            }
        }
        out
    }
}

impl PartialOrd for SkewShape {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SkewShape {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.outer, &self.inner).cmp(&(&other.outer, &other.inner))
    }
}

impl fmt::Display for SkewShape {
    /// `3,2,2/1,1`; a straight shape prints without the slash.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            return write!(f, "{}", self.outer);
        }
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (o, i) = s.split_once('/').unwrap_or((s, ""));
        let outer: Partition = o.parse()?;
        let inner: Partition = i.parse()?;
        SkewShape::new(outer, inner).map_err(|e| Error::Parse {
            token: s.to_string(),
            reason: e.to_string(),
        })
    }
}

impl From<Partition> for SkewShape {
    fn from(p: Partition) -> Self {
        SkewShape::straight(p)
    }
}

pub fn conjugate(p: &Partition) -> Partition {
    p.conjugate()
}

pub fn is_strip(s: &SkewShape, kind: StripKind) -> bool {
    match kind {
        // Column c holds two cells iff some row r+1 reaches over inner_r.
        StripKind::Horizontal => {
            (1..s.num_rows()).all(|r| s.outer.row(r + 1) <= s.inner.row(r))
        }
        StripKind::Vertical => (1..=s.num_rows()).all(|r| s.row_len(r) <= 1),
    }
}

/// Partitions `λ⁺ ⊇ base` such that `λ⁺/base` is a strip of size `n`.
pub fn enumerate_outer_strips(base: &Partition, n: usize, kind: StripKind) -> Vec<Partition> {
    let mut out = match kind {
        StripKind::Horizontal => {
            // λ⁺_r ranges over [λ_r, λ_{r-1}]; one new row may appear on top.
            let mut acc = Vec::new();
            let rows = base.len() + 1;
            let mut cur = vec![0usize; rows];
            fn go(
                base: &Partition,
                r: usize,
                rows: usize,
                rem: usize,
                cur: &mut Vec<usize>,
                acc: &mut Vec<Partition>,
            ) {
                if r > rows {
                    if rem == 0 {
                        acc.push(Partition::new(cur.clone()).expect("strip keeps order"));
                    }
                    return;
                }
                let lo = base.row(r);
                let hi = if r == 1 { lo + rem } else { base.row(r - 1).min(lo + rem) };
                for len in lo..=hi {
                    cur[r - 1] = len;
                    go(base, r + 1, rows, rem - (len - lo), cur, acc);
                }
            }
            go(base, 1, rows, n, &mut cur, &mut acc);
            acc
        }
        StripKind::Vertical => enumerate_outer_strips(&base.conjugate(), n, StripKind::Horizontal)
            .iter()
            .map(Partition::conjugate)
            .collect(),
    };
    out.sort();
    out
}

/// Partitions `μ⁻ ⊆ base` such that `base/μ⁻` is a strip of size `k`.
pub fn enumerate_inner_strips(base: &Partition, k: usize, kind: StripKind) -> Vec<Partition> {
    let mut out = match kind {
        StripKind::Horizontal => {
            // μ⁻_r ranges over [μ_{r+1}, μ_r].
            let rows = base.len();
            let mut acc = Vec::new();
            let mut cur = vec![0usize; rows];
            fn go(
                base: &Partition,
                r: usize,
                rows: usize,
                rem: usize,
                cur: &mut Vec<usize>,
                acc: &mut Vec<Partition>,
            ) {
                if r > rows {
                    if rem == 0 {
                        acc.push(Partition::new(cur.clone()).expect("strip keeps order"));
                    }
                    return;
                }
                let hi = base.row(r);
                let lo = base.row(r + 1).max(hi.saturating_sub(rem));
                for len in lo..=hi {
                    cur[r - 1] = len;
                    go(base, r + 1, rows, rem - (hi - len), cur, acc);
                }
            }
            go(base, 1, rows, k, &mut cur, &mut acc);
            acc
        }
        StripKind::Vertical => enumerate_inner_strips(&base.conjugate(), k, StripKind::Horizontal)
            .iter()
            .map(Partition::conjugate)
            .collect(),
    };
    out.sort();
    out
}

/// Places `a` so that its bottom-right cell sits immediately above and to
/// the left of the top-left cell of `b`.
///
/// An empty operand contributes nothing and the other operand is returned
/// unchanged. Otherwise `a` keeps its columns when possible and `b` is
/// shifted right; if `b` is already too far right, `a` is shifted instead.
pub fn star(a: &SkewShape, b: &SkewShape) -> SkewShape {
    if b.is_empty() {
        return a.clone();
    }
    if a.is_empty() {
        return b.clone();
    }
    let a_bottom = (1..=a.num_rows()).find(|&r| a.row_len(r) > 0).expect("nonempty");
    let b_top = (1..=b.num_rows()).rev().find(|&r| b.row_len(r) > 0).expect("nonempty");
    // a.outer[a_bottom] + a_shift == b.inner[b_top] + b_shift
    let a_right = a.outer.row(a_bottom);
    let b_left = b.inner.row(b_top);
    let (a_shift, b_shift) = if a_right >= b_left {
        (0, a_right - b_left)
    } else {
        (b_left - a_right, 0)
    };
    let mut outer = Vec::new();
    let mut inner = Vec::new();
    for r in 1..=b_top {
        outer.push(b.outer.row(r) + b_shift);
        inner.push(b.inner.row(r) + b_shift);
    }
    for r in a_bottom..=a.num_rows() {
        outer.push(a.outer.row(r) + a_shift);
        inner.push(a.inner.row(r) + a_shift);
    }
    SkewShape::new(
        Partition::new(outer).expect("star outer is a partition"),
        Partition::new(inner).expect("star inner is a partition"),
    )
    .expect("star inner fits in outer")
}

/// Inside corners (no cell below or to the left) and outside corners (no
/// cell above or to the right).
pub fn corners(s: &SkewShape) -> (BTreeSet<Cell>, BTreeSet<Cell>) {
    let mut inside = BTreeSet::new();
    let mut outside = BTreeSet::new();
    for r in 1..=s.num_rows() {
        let (lo, hi) = s.row_span(r);
        if lo == hi {
            continue;
        }
        let left = Cell::new(r, lo + 1);
        if r == 1 || !s.contains_cell(Cell::new(r - 1, lo + 1)) {
            inside.insert(left);
        }
        let right = Cell::new(r, hi);
        if !s.contains_cell(Cell::new(r + 1, hi)) {
            outside.insert(right);
        }
    }
    (inside, outside)
}
