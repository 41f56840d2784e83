//! Pieri-type expansions: classical and skew Pieri, the skew
//! Littlewood–Richardson product, and products with `h_ρ`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::shapes::{enumerate_inner_strips, enumerate_outer_strips, Cell, Partition, SkewShape, StripKind};
use crate::symfunc::{SchurExpansion, SkewExpansion};
use crate::tableaux::{is_yamanouchi, reverse_reading_word, Composition, Entry, Tableau, TableauKind};

pub use crate::verify::{verify_skew_pieri, SkewPieriReport};

fn strip_kinds(dual: bool) -> (StripKind, StripKind) {
    if dual {
        (StripKind::Vertical, StripKind::Horizontal)
    } else {
        (StripKind::Horizontal, StripKind::Vertical)
    }
}

/// `s_λ h_n` (or `s_λ e_n` when `dual`) as a sum over added strips.
pub fn pieri(lam: &Partition, n: usize, dual: bool) -> SchurExpansion {
    let (outer_kind, _) = strip_kinds(dual);
    SchurExpansion::from_terms(enumerate_outer_strips(lam, n, outer_kind).into_iter().map(|p| (p, 1)))
}

/// `s_{λ/μ} h_n = Σ_k (-1)^k Σ s_{λ⁺/μ⁻}` with `λ⁺/λ` a horizontal
/// `(n-k)`-strip and `μ/μ⁻` a vertical `k`-strip. `dual` gives `s_{λ/μ} e_n`
/// with the strip directions swapped.
pub fn skew_pieri(s: &SkewShape, n: usize, dual: bool) -> SkewExpansion {
    let (outer_kind, inner_kind) = strip_kinds(dual);
    let mut out = SkewExpansion::zero();
    for k in 0..=n {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let inners = enumerate_inner_strips(s.inner(), k, inner_kind);
        if inners.is_empty() {
            continue;
        }
        for lp in enumerate_outer_strips(s.outer(), n - k, outer_kind) {
            for mm in &inners {
                let shape = SkewShape::new(lp.clone(), mm.clone()).expect("μ⁻ ⊆ μ ⊆ λ ⊆ λ⁺");
                out.add_term(shape, BigInt::from(sign));
            }
        }
    }
    out
}

/// One admissible pair `(T⁻, T⁺)` and the signed term it contributes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LrPair {
    /// ASSYT on `μ/μ⁻`
    pub minus: Tableau,
    /// SSYT on `λ⁺/λ`
    pub plus: Tableau,
    /// `λ⁺/μ⁻`
    pub shape: SkewShape,
    /// `(-1)^{|μ/μ⁻|}`
    pub sign: i32,
}

/// A cell to fill and the neighbours already filled that bound it.
struct Slot {
    cell: Cell,
    minus: bool,
    /// earlier slot this value must exceed
    greater_than: Option<usize>,
    /// earlier slot this value must not exceed
    at_most: Option<usize>,
}

/// Reading order: `μ/μ⁻` by columns (rightmost first, each bottom to top),
/// then `λ⁺/λ` by rows (bottom first, each right to left).
fn slots(minus_shape: &SkewShape, plus_shape: &SkewShape) -> Vec<Slot> {
    let mut minus: Vec<Cell> = minus_shape.cells().collect();
    minus.sort_by(|a, b| b.col.cmp(&a.col).then(a.row.cmp(&b.row)));
    let plus: Vec<Cell> = (1..=plus_shape.num_rows())
        .flat_map(|r| {
            let (lo, hi) = plus_shape.row_span(r);
            (lo + 1..=hi).rev().map(move |c| Cell::new(r, c))
        })
        .collect();
    let mut out: Vec<Slot> = Vec::with_capacity(minus.len() + plus.len());
    let find = |out: &[Slot], cell: Cell, minus: bool| out.iter().position(|s| s.minus == minus && s.cell == cell);
    for c in minus {
        // rows strictly decrease left to right, columns weakly decrease upward
        let right = find(&out, Cell::new(c.row, c.col + 1), true);
        let below = if c.row > 1 { find(&out, Cell::new(c.row - 1, c.col), true) } else { None };
        out.push(Slot {
            cell: c,
            minus: true,
            greater_than: right,
            at_most: below,
        });
    }
    for c in plus {
        let right = find(&out, Cell::new(c.row, c.col + 1), false);
        let below = if c.row > 1 { find(&out, Cell::new(c.row - 1, c.col), false) } else { None };
        out.push(Slot {
            cell: c,
            minus: false,
            greater_than: below,
            at_most: right,
        });
    }
    out
}

/// Calls `visit` with every filling of `slots` whose content is `content`,
/// and whose reading word is `tau`-Yamanouchi when `tau` is given.
fn for_each_filling(slots: &[Slot], content: &[usize], tau: Option<&Partition>, visit: &mut dyn FnMut(&[Entry])) {
    let letters = content.len();
    let mut counts: Vec<usize> = match tau {
        Some(t) => (1..=letters).map(|i| t.row(i)).collect(),
        None => vec![0; letters],
    };
    let target: Vec<usize> = counts.iter().zip(content).map(|(a, b)| a + b).collect();
    let mut vals = vec![0 as Entry; slots.len()];

    #[allow(clippy::too_many_arguments)]
    fn go(
        idx: usize,
        slots: &[Slot],
        yamanouchi: bool,
        target: &[usize],
        counts: &mut [usize],
        vals: &mut [Entry],
        visit: &mut dyn FnMut(&[Entry]),
    ) {
        let Some(slot) = slots.get(idx) else {
            visit(vals);
            return;
        };
        let lo = slot.greater_than.map_or(1, |i| vals[i] + 1);
        let hi = slot.at_most.map_or(target.len() as Entry, |i| vals[i].min(target.len() as Entry));
        for v in lo..=hi {
            let i = v as usize - 1;
            if counts[i] >= target[i] || (yamanouchi && i > 0 && counts[i] + 1 > counts[i - 1]) {
                continue;
            }
            counts[i] += 1;
            vals[idx] = v;
            go(idx + 1, slots, yamanouchi, target, counts, vals, visit);
            counts[i] -= 1;
        }
    }

    go(0, slots, tau.is_some(), &target, &mut counts, &mut vals, visit);
}

/// Visits each `(μ⁻, λ⁺)` with `|μ/μ⁻| + |λ⁺/λ| = Σ content` and each
/// admissible filling of it.
fn for_each_pair(
    a: &SkewShape,
    content: &[usize],
    tau: Option<&Partition>,
    visit: &mut dyn FnMut(&SkewShape, &SkewShape, &[Slot], &[Entry]),
) {
    let d: usize = content.iter().sum();
    for j in 0..=d.min(a.inner().size()) {
        let inners = a.inner().subsets(j);
        let outers = a.outer().supersets(d - j);
        for mm in &inners {
            let minus_shape = SkewShape::new(a.inner().clone(), mm.clone()).expect("subset");
            for lp in &outers {
                let plus_shape = SkewShape::new(lp.clone(), a.outer().clone()).expect("superset");
                let slots = slots(&minus_shape, &plus_shape);
                for_each_filling(&slots, content, tau, &mut |vals| visit(&minus_shape, &plus_shape, &slots, vals));
            }
        }
    }
}

fn signed_sum(a: &SkewShape, content: &[usize], tau: Option<&Partition>) -> SkewExpansion {
    let mut out = SkewExpansion::zero();
    for_each_pair(a, content, tau, &mut |minus, plus, _, _| {
        let sign = if minus.size() % 2 == 0 { 1 } else { -1 };
        let shape = SkewShape::new(plus.outer().clone(), minus.inner().clone()).expect("nested");
        out.add_term(shape, BigInt::from(sign));
    });
    out
}

fn build_pair(minus: &SkewShape, plus: &SkewShape, slots: &[Slot], vals: &[Entry]) -> LrPair {
    let fill = |shape: &SkewShape, is_minus: bool| {
        let mut rows: Vec<Vec<Entry>> = (1..=shape.num_rows()).map(|r| vec![0; shape.row_len(r)]).collect();
        for (s, &v) in slots.iter().zip(vals) {
            if s.minus == is_minus {
                let lo = shape.inner().row(s.cell.row);
                rows[s.cell.row - 1][s.cell.col - lo - 1] = v;
            }
        }
        Tableau::new(shape.clone(), rows).expect("filled every cell")
    };
    LrPair {
        minus: fill(minus, true),
        plus: fill(plus, false),
        shape: SkewShape::new(plus.outer().clone(), minus.inner().clone()).expect("nested"),
        sign: if minus.size() % 2 == 0 { 1 } else { -1 },
    }
}

/// `σ - τ` as a composition. Fails at the first row where `τ` is longer.
pub fn componentwise_difference(sigma: &Partition, tau: &Partition) -> Result<Vec<usize>> {
    let len = sigma.len().max(tau.len());
    let mut out = Vec::with_capacity(len);
    for r in 1..=len {
        let (s, t) = (sigma.row(r), tau.row(r));
        if t > s {
            return Err(Error::InvalidDifference(r));
        }
        out.push(s - t);
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    Ok(out)
}

/// `s_{λ/μ} s_{σ/τ}` as the signed sum over pairs `(T⁻, T⁺)` with combined
/// content `σ - τ` and `τ`-Yamanouchi reverse reading word.
pub fn skew_lr_product(a: &SkewShape, b: &SkewShape) -> SkewExpansion {
    let content = componentwise_difference(b.outer(), b.inner()).expect("inner fits in outer");
    signed_sum(a, &content, Some(b.inner()))
}

/// As [`skew_lr_product`], with `σ` and `τ` given separately.
pub fn skew_lr_product_parts(a: &SkewShape, sigma: &Partition, tau: &Partition) -> Result<SkewExpansion> {
    let content = componentwise_difference(sigma, tau)?;
    Ok(signed_sum(a, &content, Some(tau)))
}

/// Every admissible pair behind [`skew_lr_product`], in enumeration order.
pub fn skew_lr_pairs(a: &SkewShape, b: &SkewShape) -> Vec<LrPair> {
    let content = componentwise_difference(b.outer(), b.inner()).expect("inner fits in outer");
    let mut out = Vec::new();
    for_each_pair(a, &content, Some(b.inner()), &mut |minus, plus, slots, vals| {
        out.push(build_pair(minus, plus, slots, vals));
    });
    out
}

/// Whether `(minus, plus)` is one of the pairs summed in
/// [`skew_lr_product`]`(a, b)`.
pub fn is_admissible_pair(a: &SkewShape, b: &SkewShape, minus: &Tableau, plus: &Tableau) -> bool {
    if minus.shape().outer() != a.inner() || plus.shape().inner() != a.outer() {
        return false;
    }
    if !minus.validate(TableauKind::Assyt) || !plus.is_ssyt() {
        return false;
    }
    let want = componentwise_difference(b.outer(), b.inner()).expect("inner fits in outer");
    let (cm, cp) = (minus.content(), plus.content());
    let len = want.len().max(cm.len()).max(cp.len());
    let combined: Vec<usize> = (0..len).map(|i| cm.get(i + 1) + cp.get(i + 1)).collect();
    Composition::new(combined) == Composition::new(want)
        && is_yamanouchi(&reverse_reading_word(minus, plus), b.inner())
}

/// `s_{λ/μ} h_ρ` as the signed sum over pairs with combined content `ρ`.
pub fn skew_h_rho_product(a: &SkewShape, rho: &Partition) -> SkewExpansion {
    signed_sum(a, rho.parts(), None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::{h, schur_product, skew_to_schur};

    fn sk(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn skew_terms(list: &[(&str, i64)]) -> SkewExpansion {
        SkewExpansion::from_terms(list.iter().map(|&(s, c)| (sk(s), c)))
    }

    #[test]
    fn classical_pieri() {
        let want = SchurExpansion::from_terms(["3222", "3321", "4221", "432", "522"].map(|s| (p(s), 1)));
        assert_eq!(pieri(&p("322"), 2, false), want);
        assert_eq!(pieri(&Partition::empty(), 4, false), h(4));
        assert_eq!(pieri(&p("1"), 2, true), SchurExpansion::from_terms([(p("21"), 1), (p("111"), 1)]));
    }

    #[test]
    fn skew_pieri_example() {
        let want = skew_terms(&[
            ("3222/11", 1),
            ("3321/11", 1),
            ("4221/11", 1),
            ("432/11", 1),
            ("522/11", 1),
            ("3221/1", -1),
            ("332/1", -1),
            ("422/1", -1),
            ("322", 1),
        ]);
        assert_eq!(skew_pieri(&sk("322/11"), 2, false), want);
    }

    #[test]
    fn straight_shapes_match_pieri() {
        for n in 0..=5 {
            for lam in Partition::all_of_size(n) {
                for k in 1..=3 {
                    for dual in [false, true] {
                        let skew = skew_pieri(&SkewShape::straight(lam.clone()), k, dual);
                        let classical = pieri(&lam, k, dual);
                        let lifted = SkewExpansion::from_terms(
                            classical.terms().iter().map(|(q, c)| (SkewShape::straight(q.clone()), c.clone())),
                        );
                        assert_eq!(skew, lifted);
                    }
                }
            }
        }
    }

    #[test]
    fn skew_pieri_strata() {
        let s = sk("433/21");
        let n = 3;
        let e = skew_pieri(&s, n, false);
        for (shape, c) in e.terms() {
            let k = s.inner().size() - shape.inner().size();
            assert_eq!(*c, BigInt::from(if k % 2 == 0 { 1 } else { -1 }));
            if k == n {
                assert_eq!(shape.outer(), s.outer());
            }
        }
    }

    #[test]
    fn skew_lr_pair_with_shifted_yamanouchi_word() {
        let a = sk("7541/33");
        let b = sk("755431/5321");
        let minus: Tableau = "33/1: [3,2][5,3,1]".parse().unwrap();
        let plus: Tableau = "9953/7541: [2,4][1,4,4,5][3][5,6]".parse().unwrap();
        assert!(minus.validate(TableauKind::Assyt));
        assert!(plus.is_ssyt());
        assert!(is_admissible_pair(&a, &b, &minus, &plus));
        assert!(!is_admissible_pair(&a, &sk("755431/5311"), &minus, &plus));
        let shape = SkewShape::new(plus.shape().outer().clone(), minus.shape().inner().clone()).unwrap();
        assert_eq!(shape, sk("9953/1"));
        assert_eq!(minus.size() % 2, 1);
        assert_eq!(reverse_reading_word(&minus, &plus).to_string(), "21335425441365");
    }

    #[test]
    fn enumerated_pairs_are_admissible() {
        let (a, b) = (sk("32/1"), sk("32/1"));
        let pairs = skew_lr_pairs(&a, &b);
        assert!(!pairs.is_empty());
        let mut total = SkewExpansion::zero();
        for q in &pairs {
            assert!(is_admissible_pair(&a, &b, &q.minus, &q.plus));
            total.add_term(q.shape.clone(), BigInt::from(q.sign));
        }
        assert_eq!(total, skew_lr_product(&a, &b));
    }

    #[test]
    fn skew_lr_reduces_to_skew_pieri() {
        for s in SkewShape::all_up_to(5) {
            for n in 1..=3 {
                let row = SkewShape::straight(Partition::new(vec![n]).unwrap());
                assert_eq!(skew_lr_product(&s, &row), skew_pieri(&s, n, false), "{s} {n}");
            }
        }
    }

    #[test]
    fn skew_lr_small_products() {
        for a in SkewShape::all_up_to(3) {
            for b in SkewShape::all_up_to(3) {
                let want = schur_product(&skew_to_schur(&a), &skew_to_schur(&b));
                assert_eq!(skew_lr_product(&a, &b).to_schur(), want, "{a} * {b}");
            }
        }
    }

    #[test]
    fn difference_errors() {
        assert_eq!(componentwise_difference(&p("32"), &p("21")).unwrap(), vec![1, 1]);
        assert_eq!(componentwise_difference(&p("32"), &p("32")).unwrap(), Vec::<usize>::new());
        assert_eq!(componentwise_difference(&p("2"), &p("11")), Err(Error::InvalidDifference(2)));
        assert!(skew_lr_product_parts(&sk("1"), &p("2"), &p("3")).is_err());
    }

    #[test]
    fn h_rho_single_row_is_skew_pieri() {
        for s in SkewShape::all_up_to(4) {
            for n in 1..=3 {
                let rho = Partition::new(vec![n]).unwrap();
                assert_eq!(skew_h_rho_product(&s, &rho), skew_pieri(&s, n, false));
            }
        }
    }

    #[test]
    fn h_rho_two_rows() {
        let a = sk("21/1");
        let once = skew_pieri(&a, 1, false);
        let mut twice = SkewExpansion::zero();
        for (s, c) in once.terms() {
            let mut next = skew_pieri(s, 1, false);
            next = SkewExpansion::from_terms(next.terms().iter().map(|(t, d)| (t.clone(), d * c)));
            twice += &next;
        }
        assert_eq!(skew_h_rho_product(&a, &p("11")).to_schur(), twice.to_schur());
        assert_eq!(
            skew_h_rho_product(&a, &p("11")).to_schur(),
            schur_product(&skew_to_schur(&a), &(&h(1) * &h(1)))
        );
    }
}
