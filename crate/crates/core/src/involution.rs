//! Downward and upward slides and the sign-reversing involution built from
//! them.
//!
//! Throughout, a fixed base `λ/μ` is paired with an SSYT of shape `λ⁺/μ⁻`
//! where `λ⁺/λ` is a horizontal strip and `μ/μ⁻` a vertical strip.

use std::fmt;

use crate::error::{Error, Result};
use crate::insertion::{external_insert, internal_insert, reverse_insert, BumpRecord};
use crate::shapes::{enumerate_inner_strips, enumerate_outer_strips, is_strip, Cell, Partition, SkewShape, StripKind};
use crate::tableaux::{enumerate_ssyt, Entry, Tableau};

/// A base shape `λ/μ` together with an SSYT of shape `λ⁺/μ⁻`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SlideContext {
    base: SkewShape,
    tableau: Tableau,
}

impl SlideContext {
    pub fn new(base: SkewShape, tableau: Tableau) -> Result<Self> {
        let shape = tableau.shape();
        if !shape.outer().contains(base.outer()) {
            return Err(Error::InvalidContext(format!(
                "outer shape {} does not contain {}",
                shape.outer(),
                base.outer()
            )));
        }
        if !base.inner().contains(shape.inner()) {
            return Err(Error::InvalidContext(format!(
                "inner shape {} is not contained in {}",
                shape.inner(),
                base.inner()
            )));
        }
        let outer_strip = SkewShape::new(shape.outer().clone(), base.outer().clone())?;
        if !is_strip(&outer_strip, StripKind::Horizontal) {
            return Err(Error::InvalidContext(format!("{outer_strip} is not a horizontal strip")));
        }
        let inner_strip = SkewShape::new(base.inner().clone(), shape.inner().clone())?;
        if !is_strip(&inner_strip, StripKind::Vertical) {
            return Err(Error::InvalidContext(format!("{inner_strip} is not a vertical strip")));
        }
        if !tableau.is_ssyt() {
            return Err(Error::InvalidContext(format!("{tableau} is not semistandard")));
        }
        Ok(Self { base, tableau })
    }

    pub fn base(&self) -> &SkewShape {
        &self.base
    }

    pub fn tableau(&self) -> &Tableau {
        &self.tableau
    }

    pub fn into_tableau(self) -> Tableau {
        self.tableau
    }

    pub fn lambda_plus(&self) -> &Partition {
        self.tableau.shape().outer()
    }

    pub fn mu_minus(&self) -> &Partition {
        self.tableau.shape().inner()
    }

    /// `|λ⁺/λ| + |μ/μ⁻|`.
    pub fn n(&self) -> usize {
        self.lambda_plus().size() - self.base.outer().size() + self.base.inner().size()
            - self.mu_minus().size()
    }

    /// `(-1)^{|μ/μ⁻|}`.
    pub fn sign(&self) -> i32 {
        if (self.base.inner().size() - self.mu_minus().size()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Cells of `λ⁺/λ`, rightmost first.
    pub fn outer_strip_cells(&self) -> Vec<Cell> {
        strip_cells_right_to_left(self.lambda_plus(), self.base.outer())
    }

    /// The lowest cell of `μ/μ⁻`, if any.
    pub fn inner_strip_bottom(&self) -> Option<Cell> {
        bottom_of_inner_strip(self.base.inner(), self.mu_minus())
    }

    fn with_tableau(&self, tableau: Tableau) -> SlideContext {
        SlideContext {
            base: self.base.clone(),
            tableau,
        }
    }
}

impl fmt::Display for SlideContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self.tableau, self.base)
    }
}

fn strip_cells_right_to_left(outer: &Partition, inner: &Partition) -> Vec<Cell> {
    let mut cells: Vec<Cell> = SkewShape::new(outer.clone(), inner.clone())
        .expect("strip shapes are nested")
        .cells()
        .collect();
    cells.sort_by(|a, b| b.col.cmp(&a.col).then(a.row.cmp(&b.row)));
    cells
}

fn bottom_of_inner_strip(mu: &Partition, mu_minus: &Partition) -> Option<Cell> {
    (1..=mu.len())
        .find(|&r| mu_minus.row(r) < mu.row(r))
        .map(|r| Cell::new(r, mu_minus.row(r) + 1))
}

/// Which slide a trace records.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SlideOp {
    Down,
    Up,
}

impl fmt::Display for SlideOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SlideOp::Down => "D",
            SlideOp::Up => "U",
        })
    }
}

/// One insertion performed during a slide.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    /// `T → c`
    Reverse(Cell),
    /// `T ←_r k` for the bottom cell of `μ/μ⁻`
    Internal(usize),
    /// `T ← k`
    External(Entry),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TraceStep {
    pub step: Step,
    pub record: BumpRecord,
    pub result: Tableau,
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.step {
            Step::Reverse(c) => write!(f, "reverse {c}")?,
            Step::Internal(r) => write!(f, "internal row {r}")?,
            Step::External(k) => write!(f, "external {k}")?,
        }
        write!(f, ": {} -> {}", self.record, self.result)
    }
}

/// Every insertion of one slide, in order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SlideTrace {
    pub op: SlideOp,
    pub input: SlideContext,
    pub steps: Vec<TraceStep>,
    /// Number of reverse insertions kept.
    pub m: usize,
    /// Number of final entries reinserted externally.
    pub m_prime: usize,
    pub output: SlideContext,
}

impl fmt::Display for SlideTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} on {}", self.op, self.input)?;
        for s in &self.steps {
            writeln!(f, "  {s}")?;
        }
        writeln!(f, "m = {}, m' = {}", self.m, self.m_prime)?;
        writeln!(f, "result {}", self.output.tableau)
    }
}

struct ReversePhase {
    tableau: Tableau,
    steps: Vec<TraceStep>,
    finals: Vec<Entry>,
    last: Option<BumpRecord>,
}

fn reverse_step(t: &Tableau, c: Cell) -> (Tableau, TraceStep) {
    let (next, record) = reverse_insert(t, c).expect("strip cells are outside corners of an SSYT");
    let step = TraceStep {
        step: Step::Reverse(c),
        record,
        result: next.clone(),
    };
    (next, step)
}

/// Reverse-inserts strip cells until one lands in a row `≥ 1`.
fn downward_phase(ctx: &SlideContext) -> ReversePhase {
    let mut phase = ReversePhase {
        tableau: ctx.tableau.clone(),
        steps: Vec::new(),
        finals: Vec::new(),
        last: None,
    };
    for c in ctx.outer_strip_cells() {
        let (next, step) = reverse_step(&phase.tableau, c);
        phase.tableau = next;
        phase.finals.push(step.record.final_entry);
        let landed = step.record.landing_row >= 1;
        phase.last = Some(step.record.clone());
        phase.steps.push(step);
        if landed {
            break;
        }
    }
    phase
}

fn reinsert_externally(tableau: &mut Tableau, steps: &mut Vec<TraceStep>, finals: &[Entry]) {
    for &k in finals.iter().rev() {
        let (next, record) = external_insert(tableau, k);
        steps.push(TraceStep {
            step: Step::External(k),
            record,
            result: next.clone(),
        });
        *tableau = next;
    }
}

/// The reverse bumping path of the first strip cell whose final entry lands
/// in a row `≥ 1`, if there is one.
pub fn downward_path(ctx: &SlideContext) -> Option<BumpRecord> {
    downward_phase(ctx).last.filter(|r| r.landing_row >= 1)
}

/// The bumping path of internally inserting the bottom cell of `μ/μ⁻`.
pub fn upward_path(ctx: &SlideContext) -> Option<BumpRecord> {
    let bottom = ctx.inner_strip_bottom()?;
    let (_, record) = internal_insert(&ctx.tableau, bottom.row).expect("bottom of a vertical strip is an inside corner");
    Some(record)
}

/// Whether the downward path bottoms out strictly below the bottom cell of
/// `μ/μ⁻`. True when `μ⁻ = μ`; false when there is no downward path.
pub fn exits_right(ctx: &SlideContext) -> bool {
    let Some(bottom) = ctx.inner_strip_bottom() else {
        return true;
    };
    downward_path(ctx).is_some_and(|p| p.bottom().row < bottom.row)
}

/// The alternative criterion: the downward path's bottom cell is weakly right
/// of the bottom cell of `μ/μ⁻`.
pub fn exits_weakly_right(ctx: &SlideContext) -> bool {
    let Some(bottom) = ctx.inner_strip_bottom() else {
        return true;
    };
    downward_path(ctx).is_some_and(|p| p.bottom().col >= bottom.col)
}

pub fn downward_slide(ctx: &SlideContext) -> SlideContext {
    downward_slide_traced(ctx).output
}

pub fn downward_slide_traced(ctx: &SlideContext) -> SlideTrace {
    let ReversePhase {
        mut tableau,
        mut steps,
        finals,
        last,
    } = downward_phase(ctx);
    let m = finals.len();
    let m_prime = match last {
        Some(r) if r.landing_row >= 1 => m - 1,
        _ => m,
    };
    reinsert_externally(&mut tableau, &mut steps, &finals[..m_prime]);
    SlideTrace {
        op: SlideOp::Down,
        input: ctx.clone(),
        steps,
        m,
        m_prime,
        output: ctx.with_tableau(tableau),
    }
}

/// Every cell of `path` is at or right of `guide`, where `guide` continues
/// straight up from its top cell. Below the bottom of `guide` there is no
/// constraint.
fn weakly_right_of(path: &BumpRecord, guide: &BumpRecord) -> bool {
    let top = guide.top();
    path.path.iter().all(|c| {
        let bound = if c.row > top.row { Some(top.col) } else { guide.col_in_row(c.row) };
        bound.map_or(true, |g| c.col >= g)
    })
}

pub fn upward_slide(ctx: &SlideContext) -> Result<SlideContext> {
    upward_slide_traced(ctx).map(|t| t.output)
}

/// Reverse insertion stops at the first path that leaves the upward path's
/// right side.
pub fn upward_slide_traced(ctx: &SlideContext) -> Result<SlideTrace> {
    let guide = upward_path(ctx).ok_or(Error::NoUpwardPath)?;
    let mut tableau = ctx.tableau.clone();
    let mut steps = Vec::new();
    let mut finals = Vec::new();
    let mut last_landing = 0;
    for c in ctx.outer_strip_cells() {
        let (next, step) = reverse_step(&tableau, c);
        if !weakly_right_of(&step.record, &guide) {
            break;
        }
        tableau = next;
        finals.push(step.record.final_entry);
        last_landing = step.record.landing_row;
        debug_assert!(
            !steps.iter().any(|s: &TraceStep| s.record.landing_row >= 1),
            "only the last kept path may land in a row above 0"
        );
        steps.push(step);
    }
    let m = finals.len();
    let m_prime = if last_landing >= 1 { m - 1 } else { m };

    let bottom = bottom_of_inner_strip(ctx.base.inner(), tableau.shape().inner())
        .expect("the inner strip only grows during reverse insertion");
    let (next, record) = internal_insert(&tableau, bottom.row)?;
    steps.push(TraceStep {
        step: Step::Internal(bottom.row),
        record,
        result: next.clone(),
    });
    tableau = next;

    reinsert_externally(&mut tableau, &mut steps, &finals[..m_prime]);
    Ok(SlideTrace {
        op: SlideOp::Up,
        input: ctx.clone(),
        steps,
        m,
        m_prime,
        output: ctx.with_tableau(tableau),
    })
}

/// The slide `φ` applies to `ctx`.
pub fn phi_op(ctx: &SlideContext) -> SlideOp {
    if ctx.inner_strip_bottom().is_none() || exits_right(ctx) {
        SlideOp::Down
    } else {
        SlideOp::Up
    }
}

pub fn phi(ctx: &SlideContext) -> SlideContext {
    phi_traced(ctx).output
}

pub fn phi_traced(ctx: &SlideContext) -> SlideTrace {
    match phi_op(ctx) {
        SlideOp::Down => downward_slide_traced(ctx),
        SlideOp::Up => upward_slide_traced(ctx).expect("U is only chosen when μ⁻ ≠ μ"),
    }
}

/// Fixed points of `φ`: `μ⁻ = μ` and every strip entry leaves through row 0.
pub fn is_fixed_point(ctx: &SlideContext) -> bool {
    ctx.inner_strip_bottom().is_none() && downward_path(ctx).is_none()
}

/// Sends a fixed point to an SSYT of shape `(λ/μ) * (n)`: the residual
/// tableau on `λ/μ` with the sorted final entries as the new bottom row.
pub fn fixed_point_to_star(ctx: &SlideContext) -> Result<Tableau> {
    if ctx.inner_strip_bottom().is_some() {
        return Err(Error::NotFixedPoint);
    }
    let mut tableau = ctx.tableau.clone();
    let mut finals = Vec::new();
    for c in ctx.outer_strip_cells() {
        let (next, record) = reverse_insert(&tableau, c)?;
        if record.landing_row >= 1 {
            return Err(Error::NotFixedPoint);
        }
        finals.push(record.final_entry);
        tableau = next;
    }
    finals.reverse();
    debug_assert!(finals.windows(2).all(|w| w[0] <= w[1]));
    let strip = Tableau::new(SkewShape::straight(row_partition(finals.len())), vec![finals])?;
    Ok(Tableau::star(&tableau, &strip))
}

fn row_partition(n: usize) -> Partition {
    if n == 0 {
        Partition::empty()
    } else {
        Partition::new(vec![n]).expect("single row")
    }
}

/// Inverse of [`fixed_point_to_star`]: splits off the bottom row and inserts
/// its entries left to right into the rest.
pub fn star_to_fixed_point(base: &SkewShape, star_tableau: &Tableau) -> Result<SlideContext> {
    let star_shape = star_tableau.shape();
    let n = star_shape.size() - base.size();
    let expected = crate::shapes::star(base, &SkewShape::straight(row_partition(n)));
    if *star_shape != expected || !star_tableau.is_ssyt() {
        return Err(Error::InvalidContext(format!(
            "{star_tableau} is not an SSYT of shape {expected}"
        )));
    }
    let (strip, rest): (Vec<Entry>, &[Vec<Entry>]) = if n == 0 {
        (Vec::new(), star_tableau.rows())
    } else if base.is_empty() {
        (star_tableau.row(1).to_vec(), &[])
    } else {
        (star_tableau.row(1).to_vec(), &star_tableau.rows()[1..])
    };
    let rows = if n == 0 {
        rest.to_vec()
    } else {
        let skipped = (1..=base.num_rows()).take_while(|&r| base.row_len(r) == 0).count();
        let mut rows = vec![Vec::new(); skipped];
        rows.extend(rest.iter().cloned());
        rows.resize(base.num_rows(), Vec::new());
        rows
    };
    let mut tableau = Tableau::new(base.clone(), rows)?;
    for k in strip {
        tableau = external_insert(&tableau, k).0;
    }
    SlideContext::new(base.clone(), tableau)
}

/// Every context over `base` with `|λ⁺/λ| + |μ/μ⁻| = n` and entries at most
/// `max_entry`.
pub fn contexts(base: &SkewShape, n: usize, max_entry: Entry) -> Vec<SlideContext> {
    let mut out = Vec::new();
    for a in 0..=n {
        let outers = enumerate_outer_strips(base.outer(), a, StripKind::Horizontal);
        let inners = enumerate_inner_strips(base.inner(), n - a, StripKind::Vertical);
        for lp in &outers {
            for mm in &inners {
                let shape = SkewShape::new(lp.clone(), mm.clone()).expect("μ⁻ ⊆ μ ⊆ λ ⊆ λ⁺");
                for t in enumerate_ssyt(&shape, max_entry) {
                    out.push(SlideContext {
                        base: base.clone(),
                        tableau: t,
                    });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tab(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    fn ctx(base: &str, t: &str) -> SlideContext {
        SlideContext::new(base.parse().unwrap(), tab(t)).unwrap()
    }

    fn cells(list: &[(usize, usize)]) -> Vec<Cell> {
        list.iter().map(|&(r, c)| Cell::new(r, c)).collect()
    }

    fn down_example() -> SlideContext {
        ctx("7,5,4,1,1/3,1", "76441/31: [1,2,2,5][1,2,2,3,6][2,2,3,4][3,5,7,7][9]")
    }

    fn fixed_example() -> SlideContext {
        ctx("653/21", "7631/21: [1,1,2,3,3][1,3,3,3,7][2,4,6][5]")
    }

    #[test]
    fn context_validation() {
        let base: SkewShape = "21/1".parse().unwrap();
        assert!(SlideContext::new(base.clone(), tab("22/1: [1][1,2]")).is_ok());
        assert!(matches!(
            SlideContext::new(base.clone(), tab("2,2,1/1: [1][1,2][3]")),
            Ok(_)
        ));
        assert!(matches!(
            SlideContext::new("2/1".parse().unwrap(), tab("2,1,1/1: [1][2][3]")),
            Err(Error::InvalidContext(_))
        ));
        assert!(matches!(
            SlideContext::new(base.clone(), tab("2: [1,2]")),
            Err(Error::InvalidContext(_))
        ));
        assert!(matches!(
            SlideContext::new("22/2".parse().unwrap(), tab("22: [1,2][3,4]")),
            Err(Error::InvalidContext(_))
        ));
        assert!(matches!(
            SlideContext::new("22/1".parse().unwrap(), tab("22/1: [2][1,2]")),
            Err(Error::InvalidContext(_))
        ));
    }

    #[test]
    fn downward_example() {
        let c = down_example();
        assert_eq!(c.n(), 4);
        let path = downward_path(&c).unwrap();
        assert_eq!(path.path, cells(&[(1, 3), (2, 2), (3, 2), (4, 2)]));
        assert_eq!(path.final_entry, 1);
        assert_eq!(path.landing_row, 1);
        assert!(exits_right(&c));
        let trace = downward_slide_traced(&c);
        assert_eq!(trace.m, 4);
        assert_eq!(trace.m_prime, 3);
        let want = tab("76431/21: [1,1,2,2,5][2,2,2,3,6][2,3,4,7][3,5,7][9]");
        assert_eq!(trace.output.tableau(), &want);
        assert_eq!(phi(&c).tableau(), &want);
        assert_eq!(trace.output.sign(), -c.sign());
    }

    #[test]
    fn upward_example_inverts() {
        let d = downward_slide(&down_example());
        let up = upward_path(&d).unwrap();
        assert_eq!(up.path, cells(&[(1, 3), (2, 2), (3, 2), (4, 2), (5, 1), (6, 1)]));
        assert_eq!(phi_op(&d), SlideOp::Up);
        assert_eq!(upward_slide(&d).unwrap(), down_example());
        assert_eq!(phi(&d), down_example());
    }

    #[test]
    fn upward_example_with_changed_k() {
        let c = ctx("22/1", "222: [1,1][2,2][3,3]");
        let trace = upward_slide_traced(&c).unwrap();
        assert_eq!(trace.m, 2);
        let pos = trace.steps.iter().position(|s| matches!(s.step, Step::Internal(_))).unwrap();
        let Step::Internal(r) = trace.steps[pos].step else { unreachable!() };
        let before = &trace.steps[pos - 1].result;
        let k = before.entry(Cell::new(r, before.shape().inner().row(r) + 1)).unwrap();
        assert_eq!(k, 2);
        assert_eq!(c.tableau().entry(upward_path(&c).unwrap().bottom()), Some(1));
        assert_eq!(trace.output.tableau(), &tab("322/1: [1,1][2,2][3,3]"));
    }

    #[test]
    fn fixed_point_example() {
        let c = fixed_example();
        assert!(downward_path(&c).is_none());
        assert!(upward_path(&c).is_none());
        assert!(is_fixed_point(&c));
        assert_eq!(downward_slide(&c), c);
        assert_eq!(phi(&c), c);
        assert_eq!(upward_slide(&c), Err(Error::NoUpwardPath));
        let star = fixed_point_to_star(&c).unwrap();
        assert_eq!(star, tab("9,6,5,3/6,2,1: [2,3,3][1,1,3,7][1,3,3,4][2,5,6]"));
        assert_eq!(star_to_fixed_point(c.base(), &star).unwrap(), c);
    }

    #[test]
    fn trivial_cases() {
        let c = ctx("32/1", "32/1: [1,2][1,3]");
        assert!(downward_path(&c).is_none());
        assert!(exits_right(&c));
        assert_eq!(phi(&c), c);
        assert_eq!(fixed_point_to_star(&c).unwrap(), tab("32/1: [1,2][1,3]"));
        let single = ctx("1/1", "1: [1]");
        assert_eq!(upward_path(&single).unwrap().path, cells(&[(1, 1), (2, 1)]));
        assert_eq!(fixed_point_to_star(&single), Err(Error::NotFixedPoint));
    }

    #[test]
    fn fixed_points_with_empty_base() {
        let c = ctx("1/1", "2/1: [1]");
        assert!(is_fixed_point(&c));
        let star = fixed_point_to_star(&c).unwrap();
        assert_eq!(star, tab("1: [1]"));
        assert_eq!(star_to_fixed_point(c.base(), &star).unwrap(), c);
    }

    #[test]
    fn phi_is_an_involution_small() {
        let mut moved = 0;
        for base in SkewShape::all_up_to(4) {
            for n in 0..=2 {
                for c in contexts(&base, n, 3) {
                    let p = phi(&c);
                    assert!(SlideContext::new(p.base.clone(), p.tableau.clone()).is_ok(), "{c} -> {p}");
                    assert_eq!(phi(&p), c, "{c} -> {p}");
                    assert_eq!(p.tableau.content(), c.tableau.content());
                    if p != c {
                        moved += 1;
                        assert_eq!(p.sign(), -c.sign());
                    } else {
                        assert!(is_fixed_point(&c));
                    }
                }
            }
        }
        assert!(moved > 0);
    }
}
