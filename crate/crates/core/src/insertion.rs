//! Row insertion into skew tableaux: external insertion from below row 1,
//! internal insertion of an inside corner, and reverse insertion of an
//! outside corner. Each returns the bumping path alongside the new tableau.

use std::fmt;

use crate::error::{Error, Result};
use crate::shapes::{Cell, Partition, SkewShape};
use crate::tableaux::{Entry, Tableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Reverse,
}

/// Trace of one insertion or reverse insertion.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BumpRecord {
    /// One cell per touched row, bottom row first. Includes the created or
    /// vacated cell.
    pub path: Vec<Cell>,
    /// Forward: the entry that came to rest at the end of a row.
    /// Reverse: the entry left over when the cascade stopped.
    pub final_entry: Entry,
    /// Forward: the row the inserted entry started from (0 if external).
    /// Reverse: the row the final entry was placed in (0 if it exited).
    pub landing_row: usize,
    pub direction: Direction,
}

impl BumpRecord {
    pub fn bottom(&self) -> Cell {
        self.path[0]
    }

    pub fn top(&self) -> Cell {
        *self.path.last().expect("paths are nonempty")
    }

    pub fn col_in_row(&self, row: usize) -> Option<usize> {
        self.path.iter().find(|c| c.row == row).map(|c| c.col)
    }
}

impl fmt::Display for BumpRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("path ")?;
        for (i, c) in self.path.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, " final {} row {}", self.final_entry, self.landing_row)
    }
}

/// Mutable copy of a tableau with the inner offsets padded to every row.
struct Grid {
    inner: Vec<usize>,
    rows: Vec<Vec<Entry>>,
}

impl Grid {
    fn from_tableau(t: &Tableau) -> Self {
        let shape = t.shape();
        Grid {
            inner: (1..=shape.num_rows()).map(|r| shape.inner().row(r)).collect(),
            rows: t.rows().to_vec(),
        }
    }

    fn inner(&self, r: usize) -> usize {
        self.inner.get(r - 1).copied().unwrap_or(0)
    }

    fn outer(&self, r: usize) -> usize {
        self.inner(r) + self.rows.get(r - 1).map_or(0, Vec::len)
    }

    fn entry(&self, cell: Cell) -> Option<Entry> {
        if cell.row == 0 || cell.row > self.rows.len() {
            return None;
        }
        let lo = self.inner(cell.row);
        self.rows[cell.row - 1].get(cell.col.checked_sub(lo + 1)?).copied()
    }

    fn ensure_row(&mut self, r: usize) {
        while self.rows.len() < r {
            self.rows.push(Vec::new());
            self.inner.push(0);
        }
    }

    fn into_tableau(mut self) -> Result<Tableau> {
        while self.rows.last().is_some_and(Vec::is_empty) && self.inner.last() == Some(&0) {
            self.rows.pop();
            self.inner.pop();
        }
        let outer: Vec<usize> = (1..=self.rows.len()).map(|r| self.outer(r)).collect();
        let outer = Partition::new(outer).map_err(|e| Error::InvalidResult(e.to_string()))?;
        let inner = Partition::new(self.inner).map_err(|e| Error::InvalidResult(e.to_string()))?;
        let shape = SkewShape::new(outer, inner).map_err(|e| Error::InvalidResult(e.to_string()))?;
        Ok(Tableau::from_parts_unchecked(shape, self.rows))
    }

    /// Row-inserts `k` starting at row `start`, bumping upward until an
    /// entry comes to rest at the right end of a row.
    fn bump_up(&mut self, start: usize, mut k: Entry, path: &mut Vec<Cell>) -> Entry {
        let mut r = start;
        loop {
            self.ensure_row(r);
            let lo = self.inner(r);
            let row = &mut self.rows[r - 1];
            match row.iter().position(|&e| e > k) {
                None => {
                    row.push(k);
                    path.push(Cell::new(r, lo + row.len()));
                    return k;
                }
                Some(j) => {
                    k = std::mem::replace(&mut row[j], k);
                    path.push(Cell::new(r, lo + j + 1));
                    r += 1;
                }
            }
        }
    }
}

/// `T ←₀ k`. Panics if `k` is zero.
pub fn external_insert(t: &Tableau, k: Entry) -> (Tableau, BumpRecord) {
    assert!(k > 0, "tableau entries are positive");
    debug_assert!(t.is_ssyt());
    let mut grid = Grid::from_tableau(t);
    let mut path = Vec::new();
    let final_entry = grid.bump_up(1, k, &mut path);
    let tableau = grid.into_tableau().expect("external insertion keeps a skew shape");
    (
        tableau,
        BumpRecord {
            path,
            final_entry,
            landing_row: 0,
            direction: Direction::Forward,
        },
    )
}

/// `T ←_r k`, where `k` is the entry of the leftmost cell of row `r`.
pub fn internal_insert(t: &Tableau, r: usize) -> Result<(Tableau, BumpRecord)> {
    let shape = t.shape();
    if r == 0 || r > shape.num_rows() || shape.row_len(r) == 0 {
        return Err(Error::NoInsideCorner { row: r });
    }
    let col = shape.inner().row(r) + 1;
    if r > 1 && shape.contains_cell(Cell::new(r - 1, col)) {
        return Err(Error::NoInsideCorner { row: r });
    }
    let mut grid = Grid::from_tableau(t);
    let k = grid.rows[r - 1].remove(0);
    grid.inner[r - 1] += 1;
    let mut path = vec![Cell::new(r, col)];
    let final_entry = grid.bump_up(r + 1, k, &mut path);
    let tableau = grid.into_tableau()?;
    Ok((
        tableau,
        BumpRecord {
            path,
            final_entry,
            landing_row: r,
            direction: Direction::Forward,
        },
    ))
}

/// `T → c`: deletes the outside corner `c` and cascades its entry downward.
pub fn reverse_insert(t: &Tableau, c: Cell) -> Result<(Tableau, BumpRecord)> {
    let shape = t.shape();
    let is_corner = shape.contains_cell(c)
        && c.col == shape.outer().row(c.row)
        && !shape.contains_cell(Cell::new(c.row + 1, c.col));
    if !is_corner {
        return Err(Error::NotOutsideCorner { cell: c });
    }
    let mut grid = Grid::from_tableau(t);
    let mut k = grid.rows[c.row - 1].pop().expect("corner row is nonempty");
    let mut path = vec![c];
    let mut r = c.row - 1;
    let landing_row = loop {
        if r == 0 {
            break 0;
        }
        let lo = grid.inner(r);
        let row = &grid.rows[r - 1];
        if row.first().map_or(true, |&first| k <= first) {
            place_left(&mut grid, r, k)?;
            path.push(Cell::new(r, lo));
            break r;
        }
        let j = row.iter().rposition(|&e| e < k).expect("first entry is smaller");
        k = std::mem::replace(&mut grid.rows[r - 1][j], k);
        path.push(Cell::new(r, lo + j + 1));
        r -= 1;
    };
    path.reverse();
    let tableau = grid.into_tableau()?;
    Ok((
        tableau,
        BumpRecord {
            path,
            final_entry: k,
            landing_row,
            direction: Direction::Reverse,
        },
    ))
}

/// Grows row `r` inward by one cell holding `k`, checking that the shape
/// stays skew and the new cell's column stays strict.
fn place_left(grid: &mut Grid, r: usize, k: Entry) -> Result<()> {
    let lo = grid.inner(r);
    if lo == 0 {
        return Err(Error::InvalidResult(format!("row {r} has no room on its left")));
    }
    if r < grid.rows.len() && grid.inner(r + 1) > lo - 1 {
        return Err(Error::InvalidResult(format!(
            "placing at ({r},{lo}) leaves row {} overhanging the inner shape",
            r + 1
        )));
    }
    if let Some(below) = grid.entry(Cell::new(r - 1, lo)) {
        if below >= k {
            return Err(Error::InvalidResult(format!("column {lo} would not increase at row {r}")));
        }
    }
    if let Some(above) = grid.entry(Cell::new(r + 1, lo)) {
        if above <= k {
            return Err(Error::InvalidResult(format!("column {lo} would not increase above row {r}")));
        }
    }
    grid.rows[r - 1].insert(0, k);
    grid.inner[r - 1] -= 1;
    Ok(())
}

/// Undoes a reverse insertion: external when `landing_row` is 0, otherwise
/// internal from that row.
pub fn reinsert(t: &Tableau, entry: Entry, landing_row: usize) -> Result<(Tableau, BumpRecord)> {
    if landing_row == 0 {
        Ok(external_insert(t, entry))
    } else {
        debug_assert_eq!(
            t.entry(Cell::new(landing_row, t.shape().inner().row(landing_row) + 1)),
            Some(entry)
        );
        internal_insert(t, landing_row)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::corners;
    use crate::tableaux::enumerate_ssyt;

    fn tab(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    fn cells(list: &[(usize, usize)]) -> Vec<Cell> {
        list.iter().map(|&(r, c)| Cell::new(r, c)).collect()
    }

    /// Left and right tableaux of the external insertion of a 2.
    fn extern_pair() -> (Tableau, Tableau) {
        (
            tab("7542/31: [2,2,3,6][1,2,3,4][2,2,7,7][4,5]"),
            tab("7543/31: [2,2,2,6][1,2,3,3][2,2,4,7][4,5,7]"),
        )
    }

    #[test]
    fn external_insert_golden() {
        let (before, after) = extern_pair();
        let (got, rec) = external_insert(&before, 2);
        assert_eq!(got, after);
        assert_eq!(rec.path, cells(&[(1, 6), (2, 5), (3, 3), (4, 3)]));
        assert_eq!(rec.final_entry, 7);
        assert_eq!(rec.landing_row, 0);
    }

    #[test]
    fn external_insert_small() {
        let (got, rec) = external_insert(&Tableau::empty(), 5);
        assert_eq!(got, tab("1: [5]"));
        assert_eq!(rec.path, cells(&[(1, 1)]));
        let (got, rec) = external_insert(&tab("2: [1,3]"), 2);
        assert_eq!(got, tab("21: [1,2][3]"));
        assert_eq!(rec.path, cells(&[(1, 2), (2, 1)]));
        // an empty skew row receives the entry in column λ_i + 1
        let (got, _) = external_insert(&tab("22/22: [][]"), 4);
        assert_eq!(got, tab("32/22: [4][]"));
    }

    #[test]
    fn internal_insert_golden() {
        let (_, t) = extern_pair();
        let (got, rec) = internal_insert(&t, 2).unwrap();
        assert_eq!(got, tab("75431/32: [2,2,2,6][2,3,3][1,2,4,7][2,5,7][4]"));
        assert_eq!(rec.path, cells(&[(2, 2), (3, 1), (4, 1), (5, 1)]));
        assert_eq!(rec.landing_row, 2);
        assert_eq!(rec.final_entry, 4);
    }

    #[test]
    fn internal_insert_small_and_errors() {
        let (got, rec) = internal_insert(&tab("11: [1][2]"), 1).unwrap();
        assert_eq!(got, tab("111/1: [][1][2]"));
        assert_eq!(rec.path, cells(&[(1, 1), (2, 1), (3, 1)]));
        assert_eq!(internal_insert(&tab("11: [1][2]"), 2), Err(Error::NoInsideCorner { row: 2 }));
        assert_eq!(
            internal_insert(&tab("22: [1,1][2,2]"), 2),
            Err(Error::NoInsideCorner { row: 2 })
        );
        assert_eq!(
            internal_insert(&tab("22: [1,1][2,2]"), 3),
            Err(Error::NoInsideCorner { row: 3 })
        );
    }

    #[test]
    fn reverse_insert_goldens() {
        let (before, after) = extern_pair();
        let (got, rec) = reverse_insert(&after, Cell::new(4, 3)).unwrap();
        assert_eq!(got, before);
        assert_eq!(rec.final_entry, 2);
        assert_eq!(rec.landing_row, 0);
        assert_eq!(rec.path, cells(&[(1, 6), (2, 5), (3, 3), (4, 3)]));

        let (_, mid) = extern_pair();
        let (inner_after, _) = internal_insert(&mid, 2).unwrap();
        let (got, rec) = reverse_insert(&inner_after, Cell::new(5, 1)).unwrap();
        assert_eq!(got, mid);
        assert_eq!(rec.final_entry, 1);
        assert_eq!(rec.landing_row, 2);
        assert_eq!(rec.path, cells(&[(2, 2), (3, 1), (4, 1), (5, 1)]));

        let (got, rec) = reverse_insert(&tab("1: [3]"), Cell::new(1, 1)).unwrap();
        assert_eq!(got, Tableau::empty());
        assert_eq!((rec.final_entry, rec.landing_row), (3, 0));

        let down = tab("76441/31: [1,2,2,5][1,2,2,3,6][2,2,3,4][3,5,7,7][9]");
        let (_, rec) = reverse_insert(&down, Cell::new(4, 4)).unwrap();
        assert_eq!(rec.landing_row, 0);
    }

    #[test]
    fn reverse_insert_errors() {
        let t = tab("22: [1,1][2,2]");
        assert_eq!(
            reverse_insert(&t, Cell::new(1, 2)),
            Err(Error::NotOutsideCorner { cell: Cell::new(1, 2) })
        );
        assert_eq!(
            reverse_insert(&t, Cell::new(3, 1)),
            Err(Error::NotOutsideCorner { cell: Cell::new(3, 1) })
        );
        // not an SSYT: the 1 lands at (1,1) under the inner cell (2,1)
        let t = tab("22/11: [5][1]");
        assert!(matches!(reverse_insert(&t, Cell::new(2, 2)), Err(Error::InvalidResult(_))));
    }

    fn small_ssyts() -> Vec<Tableau> {
        let mut out = Vec::new();
        for shape in SkewShape::all_up_to(7).into_iter().filter(|s| s.size() <= 6) {
            if shape.size() > 4 && shape.outer().size() > 6 {
                continue;
            }
            out.extend(enumerate_ssyt(&shape, 4));
        }
        out
    }

    fn check_path_shape(rec: &BumpRecord) {
        assert!(rec.path.windows(2).all(|w| w[1].row == w[0].row + 1 && w[1].col <= w[0].col));
    }

    #[test]
    fn round_trips_and_path_monotonicity() {
        for t in small_ssyts() {
            for k in 1..=5 {
                let (s, rec) = external_insert(&t, k);
                assert!(s.is_ssyt());
                assert_eq!(s.size(), t.size() + 1);
                check_path_shape(&rec);
                let (back, rev) = reverse_insert(&s, rec.top()).unwrap();
                assert_eq!(back, t);
                assert_eq!((rev.final_entry, rev.landing_row), (k, 0));
                assert_eq!(rev.path, rec.path);
            }
            let (inside, outside) = corners(t.shape());
            for c in inside {
                let (s, rec) = internal_insert(&t, c.row).unwrap();
                assert!(s.is_ssyt());
                check_path_shape(&rec);
                let (back, rev) = reverse_insert(&s, rec.top()).unwrap();
                assert_eq!(back, t);
                assert_eq!(rev.landing_row, c.row);
            }
            for c in outside {
                let (s, rec) = reverse_insert(&t, c).unwrap();
                assert!(s.is_ssyt());
                check_path_shape(&rec);
                let (back, _) = reinsert(&s, rec.final_entry, rec.landing_row).unwrap();
                assert_eq!(back, t);
            }
        }
    }

    fn strictly_left_in_shared_rows(b: &BumpRecord, b2: &BumpRecord) -> (bool, bool) {
        let shared: Vec<(usize, usize)> = b
            .path
            .iter()
            .filter_map(|c| b2.col_in_row(c.row).map(|c2| (c.col, c2)))
            .collect();
        (shared.iter().all(|(x, y)| x < y), shared.iter().any(|(x, y)| x < y))
    }

    #[test]
    fn bumping_lemma() {
        for t in small_ssyts().into_iter().filter(|t| t.size() <= 5) {
            for k in 1..=4 {
                let (s, b) = external_insert(&t, k);
                for k2 in 1..=4 {
                    let (s2, b2) = external_insert(&s, k2);
                    let (all, any) = strictly_left_in_shared_rows(&b, &b2);
                    // (b) order of entries decides the relative position
                    assert_eq!(all, k <= k2, "{t} {k} {k2}");
                    // (a) strictly left somewhere means strictly left everywhere
                    if any {
                        assert!(all);
                        let tops = SkewShape::new(s2.shape().outer().clone(), t.shape().outer().clone());
                        let added = tops.unwrap();
                        assert!(crate::shapes::is_strip(&added, crate::shapes::StripKind::Horizontal));
                    }
                }
            }
        }
    }

    #[test]
    fn reverse_bumping_lemma() {
        for t in small_ssyts() {
            let (_, outside) = corners(t.shape());
            for &c2 in &outside {
                let (s, rec2) = reverse_insert(&t, c2).unwrap();
                let (_, outside_after) = corners(s.shape());
                for &c in outside_after.iter().filter(|c| c.col < c2.col) {
                    let Ok((_, rec)) = reverse_insert(&s, c) else { continue };
                    let (all, _) = strictly_left_in_shared_rows(&rec, &rec2);
                    assert!(all, "{t} {c} {c2}");
                    if rec.landing_row == 0 && rec2.landing_row == 0 {
                        assert!(rec.final_entry <= rec2.final_entry);
                    }
                }
            }
        }
    }
}
