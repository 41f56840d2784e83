//! Fillings of skew shapes, their validity predicates, contents, and
//! reading words.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::shapes::{star, Cell, Partition, SkewShape};

pub type Entry = u32;

/// A filling of a skew shape. `rows[r - 1]` holds the entries of row `r`
/// for columns `inner_r + 1 ..= outer_r`, left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<Entry>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableauKind {
    /// Rows weakly increase, columns strictly increase upward.
    Ssyt,
    /// Rows strictly decrease, columns weakly decrease upward.
    Assyt,
}

impl Tableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<Entry>>) -> Result<Self> {
        let mut rows = rows;
        if rows.len() < shape.num_rows() {
            rows.resize(shape.num_rows(), Vec::new());
        }
        for (i, row) in rows.iter().enumerate() {
            let expected = shape.row_len(i + 1);
            if row.len() != expected {
                return Err(Error::RowLength {
                    row: i + 1,
                    expected,
                    got: row.len(),
                });
            }
        }
        if rows.iter().flatten().any(|&e| e == 0) {
            return Err(Error::ZeroEntry);
        }
        rows.truncate(shape.num_rows());
        Ok(Tableau { shape, rows })
    }

    pub(crate) fn from_parts_unchecked(shape: SkewShape, rows: Vec<Vec<Entry>>) -> Self {
        debug_assert_eq!(rows.len(), shape.num_rows());
        Tableau { shape, rows }
    }

    pub fn empty() -> Self {
        Tableau::default()
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Entry>] {
        &self.rows
    }

    /// Entries of row `r` (1-based); empty beyond the last row.
    pub fn row(&self, r: usize) -> &[Entry] {
        if r == 0 {
            return &[];
        }
        self.rows.get(r - 1).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn entry(&self, cell: Cell) -> Option<Entry> {
        if !self.shape.contains_cell(cell) {
            return None;
        }
        let offset = self.shape.inner().row(cell.row);
        Some(self.rows[cell.row - 1][cell.col - offset - 1])
    }

    /// `(cell, entry)` pairs, bottom row first, left to right.
    pub fn cells(&self) -> impl Iterator<Item = (Cell, Entry)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(i, row)| {
            let offset = self.shape.inner().row(i + 1);
            row.iter()
                .enumerate()
                .map(move |(j, &e)| (Cell::new(i + 1, offset + j + 1), e))
        })
    }

    pub fn validate(&self, kind: TableauKind) -> bool {
        validate(self, kind)
    }

    pub fn is_ssyt(&self) -> bool {
        validate(self, TableauKind::Ssyt)
    }

    pub fn content(&self) -> Composition {
        content(self)
    }

    /// Juxtaposes two tableaux on `star(a.shape, b.shape)`.
    pub fn star(a: &Tableau, b: &Tableau) -> Tableau {
        let shape = star(&a.shape, &b.shape);
        if b.shape.is_empty() {
            return a.clone();
        }
        if a.shape.is_empty() {
            return b.clone();
        }
        let b_top = (1..=b.shape.num_rows())
            .rev()
            .find(|&r| b.shape.row_len(r) > 0)
            .expect("nonempty");
        let a_bottom = (1..=a.shape.num_rows())
            .find(|&r| a.shape.row_len(r) > 0)
            .expect("nonempty");
        let mut rows: Vec<Vec<Entry>> = b.rows[..b_top].to_vec();
        rows.extend(a.rows[a_bottom - 1..].iter().cloned());
        Tableau::from_parts_unchecked(shape, rows)
    }
}

impl fmt::Display for Tableau {
    /// `431/1: [1,2,7][3,3,5][5]`, rows listed bottom to top.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.shape)?;
        if !self.rows.is_empty() {
            f.write_str(" ")?;
        }
        for row in &self.rows {
            f.write_str("[")?;
            for (i, e) in row.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}

impl FromStr for Tableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::Parse {
            token: s.to_string(),
            reason: reason.to_string(),
        };
        let (shape, body) = s.split_once(':').ok_or_else(|| bad("expected `shape: [..][..]`"))?;
        let shape: SkewShape = shape.parse()?;
        let body = body.trim();
        let mut rows = Vec::new();
        let mut rest = body;
        while !rest.is_empty() {
            let inner = rest
                .strip_prefix('[')
                .ok_or_else(|| bad("rows must be bracketed"))?;
            let close = inner.find(']').ok_or_else(|| bad("unclosed row"))?;
            let row: Vec<Entry> = if inner[..close].trim().is_empty() {
                Vec::new()
            } else {
                inner[..close]
                    .split(',')
                    .map(|e| e.trim().parse::<Entry>().map_err(|_| bad("entries must be positive integers")))
                    .collect::<Result<_>>()?
            };
            rows.push(row);
            rest = inner[close + 1..].trim_start();
        }
        if rows.len() > shape.num_rows() && rows[shape.num_rows()..].iter().any(|r| !r.is_empty()) {
            return Err(bad("more rows than the shape has"));
        }
        Tableau::new(shape, rows)
    }
}

/// Entry multiplicities: `counts[i - 1]` is the number of entries equal to
/// `i`. Trailing zeros are trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(mut counts: Vec<usize>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        Composition(counts)
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    /// Multiplicity of entry `i` (1-based).
    pub fn get(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// The exponent vector padded with zeros to `n` variables.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        let mut v = self.0.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    pub fn as_partition(&self) -> Option<Partition> {
        Partition::new(self.0.clone()).ok()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<Entry>);

impl Word {
    pub fn letters(&self) -> &[Entry] {
        &self.0
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // single digits concatenate; anything wider needs separators
        let sep = if self.0.iter().all(|&e| e < 10) { "" } else { "," };
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            token: s.to_string(),
            reason: "expected positive letters".to_string(),
        };
        let t = s.trim();
        let letters: Vec<Entry> = if t.contains(',') {
            t.split(',').map(|x| x.trim().parse().map_err(|_| bad())).collect::<Result<_>>()?
        } else {
            t.chars().map(|c| c.to_digit(10).ok_or_else(bad)).collect::<Result<_>>()?
        };
        if letters.contains(&0) {
            return Err(bad());
        }
        Ok(Word(letters))
    }
}

pub fn validate(t: &Tableau, kind: TableauKind) -> bool {
    let (row_ok, col_ok): (fn(Entry, Entry) -> bool, fn(Entry, Entry) -> bool) = match kind {
        // (left, right) and (below, above)
        TableauKind::Ssyt => (|a, b| a <= b, |lo, hi| lo < hi),
        TableauKind::Assyt => (|a, b| a > b, |lo, hi| lo >= hi),
    };
    if !t.rows.iter().all(|row| row.windows(2).all(|w| row_ok(w[0], w[1]))) {
        return false;
    }
    t.cells().all(|(cell, e)| match t.entry(Cell::new(cell.row + 1, cell.col)) {
        Some(above) => col_ok(e, above),
        None => true,
    })
}

pub fn content(t: &Tableau) -> Composition {
    let mut counts = Vec::new();
    for &e in t.rows.iter().flatten() {
        let i = e as usize;
        if counts.len() < i {
            counts.resize(i, 0);
        }
        counts[i - 1] += 1;
    }
    Composition::new(counts)
}

/// The exponent vector of `x^T`, which is the content.
pub fn monomial(t: &Tableau) -> Composition {
    content(t)
}

/// Calls `visit` with the rows of every SSYT of `shape` whose entries lie in
/// `1..=max_entry`, in lexicographic order of the row-concatenated entries.
pub fn for_each_ssyt<F: FnMut(&[Vec<Entry>])>(shape: &SkewShape, max_entry: Entry, mut visit: F) {
    let rows_n = shape.num_rows();
    let mut rows: Vec<Vec<Entry>> = (1..=rows_n).map(|r| vec![0; shape.row_len(r)]).collect();
    let cells: Vec<Cell> = shape.cells().collect();
    // cells strictly above each cell in its column; they need distinct larger entries
    let height_above: Vec<Entry> = cells
        .iter()
        .map(|c| {
            (c.row + 1..=rows_n)
                .take_while(|&r| shape.contains_cell(Cell::new(r, c.col)))
                .count() as Entry
        })
        .collect();
    if height_above.iter().any(|&h| h >= max_entry) && !cells.is_empty() {
        return;
    }

    fn go<F: FnMut(&[Vec<Entry>])>(
        idx: usize,
        cells: &[Cell],
        height_above: &[Entry],
        shape: &SkewShape,
        max_entry: Entry,
        rows: &mut Vec<Vec<Entry>>,
        visit: &mut F,
    ) {
        let Some(&cell) = cells.get(idx) else {
            visit(rows);
            return;
        };
        let inner = shape.inner();
        let j = cell.col - inner.row(cell.row) - 1;
        let mut lo = 1;
        if j > 0 {
            lo = rows[cell.row - 1][j - 1];
        }
        if cell.row > 1 && shape.contains_cell(Cell::new(cell.row - 1, cell.col)) {
            let below = rows[cell.row - 2][cell.col - inner.row(cell.row - 1) - 1];
            lo = lo.max(below + 1);
        }
        let hi = max_entry - height_above[idx];
        for v in lo..=hi {
            rows[cell.row - 1][j] = v;
            go(idx + 1, cells, height_above, shape, max_entry, rows, visit);
        }
    }

    go(0, &cells, &height_above, shape, max_entry, &mut rows, &mut visit);
}

pub fn enumerate_ssyt(shape: &SkewShape, max_entry: Entry) -> Vec<Tableau> {
    let mut out = Vec::new();
    for_each_ssyt(shape, max_entry, |rows| {
        out.push(Tableau::from_parts_unchecked(shape.clone(), rows.to_vec()));
    });
    out
}

/// `t_minus` by columns (rightmost first, each bottom to top), then `t_plus`
/// by rows (bottom first, each right to left).
pub fn reverse_reading_word(t_minus: &Tableau, t_plus: &Tableau) -> Word {
    let mut letters = Vec::with_capacity(t_minus.size() + t_plus.size());
    let mut minus: Vec<(Cell, Entry)> = t_minus.cells().collect();
    minus.sort_by(|(a, _), (b, _)| b.col.cmp(&a.col).then(a.row.cmp(&b.row)));
    letters.extend(minus.into_iter().map(|(_, e)| e));
    for row in &t_plus.rows {
        letters.extend(row.iter().rev());
    }
    Word(letters)
}

/// Every prefix of `τ₁` 1's, `τ₂` 2's, ..., followed by `w` has at least as
/// many `i`'s as `(i+1)`'s.
pub fn is_yamanouchi(w: &Word, tau: &Partition) -> bool {
    let mut counts: Vec<usize> = tau.parts().to_vec();
    for &letter in &w.0 {
        let i = letter as usize;
        if counts.len() < i {
            counts.resize(i, 0);
        }
        counts[i - 1] += 1;
        if i > 1 && counts[i - 1] > counts[i - 2] {
            return false;
        }
    }
    true
}

/// The row reading word used for LR fillings: bottom row first, each row
/// right to left.
pub fn lr_reading_word(t: &Tableau) -> Word {
    reverse_reading_word(&Tableau::empty(), t)
}

pub fn is_lr_filling(t: &Tableau) -> bool {
    t.is_ssyt() && is_yamanouchi(&lr_reading_word(t), &Partition::empty())
}
