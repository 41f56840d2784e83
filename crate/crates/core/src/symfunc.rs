//! Symmetric functions in the Schur basis with exact integer coefficients.
//!
//! Products and skew Schur functions are computed from Littlewood–Richardson
//! fillings. Perp operators are computed by adjointness against products, so
//! identities such as `s_μ^⊥ s_λ = s_{λ/μ}` are checked rather than assumed.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::shapes::{Cell, Partition, SkewShape};

pub use crate::oracle::{monomial_expansion, schur_from_monomials, MonomialExpansion};

/// A finite integer combination of Schur functions. Zero coefficients are
/// never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, BigInt>,
}

impl SchurExpansion {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The single Schur function `s_λ`.
    pub fn schur(p: Partition) -> Self {
        let mut out = Self::zero();
        out.add_term(p, BigInt::one());
        out
    }

    pub fn one() -> Self {
        Self::schur(Partition::empty())
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (p, c) in terms {
            out.add_term(p, c.into());
        }
        out
    }

    pub fn add_term(&mut self, p: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(p.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, p: &Partition) -> BigInt {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest degree with a nonzero term; 0 for the zero function.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Partition::size).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero();
        for (p, x) in &self.terms {
            out.add_term(p.clone(), x * c);
        }
        out
    }
}

impl AddAssign<&SchurExpansion> for SchurExpansion {
    fn add_assign(&mut self, rhs: &SchurExpansion) {
        for (p, c) in &rhs.terms {
            self.add_term(p.clone(), c.clone());
        }
    }
}

impl Add for &SchurExpansion {
    type Output = SchurExpansion;
    fn add(self, rhs: &SchurExpansion) -> SchurExpansion {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &SchurExpansion {
    type Output = SchurExpansion;
    fn sub(self, rhs: &SchurExpansion) -> SchurExpansion {
        self + &(-rhs)
    }
}

impl Neg for &SchurExpansion {
    type Output = SchurExpansion;
    fn neg(self) -> SchurExpansion {
        SchurExpansion {
            terms: self.terms.iter().map(|(p, c)| (p.clone(), -c)).collect(),
        }
    }
}

impl Mul for &SchurExpansion {
    type Output = SchurExpansion;
    fn mul(self, rhs: &SchurExpansion) -> SchurExpansion {
        schur_product(self, rhs)
    }
}

impl fmt::Display for SchurExpansion {
    /// One signed term per line: `+ s[3,2,2,2]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return writeln!(f, "0");
        }
        for (p, c) in &self.terms {
            write_term(f, c, &p.to_string())?;
        }
        Ok(())
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, c: &BigInt, label: &str) -> fmt::Result {
    let sign = if c.is_negative() { '-' } else { '+' };
    let mag = c.abs();
    if mag.is_one() {
        writeln!(f, "{sign} s[{label}]")
    } else {
        writeln!(f, "{sign} {mag} s[{label}]")
    }
}

/// A finite integer combination of skew Schur functions, kept as written.
///
/// `==` compares the written terms. Skew Schur functions are not linearly
/// independent, so use [`SkewExpansion::same_function`] for equality as
/// symmetric functions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SkewExpansion {
    terms: BTreeMap<SkewShape, BigInt>,
}

impl SkewExpansion {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(s: SkewShape) -> Self {
        let mut out = Self::zero();
        out.add_term(s, BigInt::one());
        out
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (SkewShape, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (s, c) in terms {
            out.add_term(s, c.into());
        }
        out
    }

    pub fn add_term(&mut self, s: SkewShape, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(s.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&s);
        }
    }

    pub fn terms(&self) -> &BTreeMap<SkewShape, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, s: &SkewShape) -> BigInt {
        self.terms.get(s).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_schur(&self) -> SchurExpansion {
        skew_expansion_to_schur(self)
    }

    pub fn same_function(&self, other: &SkewExpansion) -> bool {
        self.to_schur() == other.to_schur()
    }
}

impl AddAssign<&SkewExpansion> for SkewExpansion {
    fn add_assign(&mut self, rhs: &SkewExpansion) {
        for (s, c) in &rhs.terms {
            self.add_term(s.clone(), c.clone());
        }
    }
}

impl fmt::Display for SkewExpansion {
    /// One signed term per line: `+ s[3,2,2,2/1,1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return writeln!(f, "0");
        }
        for (s, c) in &self.terms {
            write_term(f, c, &s.to_string())?;
        }
        Ok(())
    }
}

type LrKey = (Partition, Partition, Partition);

fn lr_cache() -> &'static RwLock<HashMap<LrKey, u64>> {
    static CACHE: OnceLock<RwLock<HashMap<LrKey, u64>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `c^ν_{λμ}`: the number of LR fillings of `ν/λ` with content `μ`.
pub fn lr_coefficient(nu: &Partition, lam: &Partition, mu: &Partition) -> u64 {
    if !nu.contains(lam) || nu.size() != lam.size() + mu.size() || !nu.contains(mu) {
        return 0;
    }
    let key = (nu.clone(), lam.clone(), mu.clone());
    if let Some(&c) = lr_cache().read().expect("lr cache poisoned").get(&key) {
        return c;
    }
    let c = count_lr_fillings(&SkewShape::new(nu.clone(), lam.clone()).expect("checked"), mu);
    lr_cache().write().expect("lr cache poisoned").insert(key, c);
    c
}

/// Counts SSYTs of `shape` with content `mu` whose row reading word (bottom
/// row first, right to left) is a lattice word. Cells are filled in reading
/// order so the lattice condition prunes as it goes.
fn count_lr_fillings(shape: &SkewShape, mu: &Partition) -> u64 {
    let order: Vec<Cell> = (1..=shape.num_rows())
        .flat_map(|r| {
            let (lo, hi) = shape.row_span(r);
            (lo + 1..=hi).rev().map(move |c| Cell::new(r, c))
        })
        .collect();
    let mut grid: Vec<Vec<u32>> = (1..=shape.num_rows())
        .map(|r| vec![0; shape.outer().row(r) + 1])
        .collect();
    let mut counts = vec![0usize; mu.len()];

    fn go(
        idx: usize,
        order: &[Cell],
        shape: &SkewShape,
        mu: &Partition,
        grid: &mut Vec<Vec<u32>>,
        counts: &mut Vec<usize>,
    ) -> u64 {
        let Some(&cell) = order.get(idx) else {
            return 1;
        };
        let mut hi = mu.len() as u32;
        if shape.contains_cell(Cell::new(cell.row, cell.col + 1)) {
            hi = hi.min(grid[cell.row - 1][cell.col + 1]);
        }
        let mut lo = 1;
        if cell.row > 1 && shape.contains_cell(Cell::new(cell.row - 1, cell.col)) {
            lo = grid[cell.row - 2][cell.col] + 1;
        }
        let mut total = 0;
        for v in lo..=hi {
            let i = v as usize - 1;
            if counts[i] >= mu.parts()[i] || (i > 0 && counts[i] + 1 > counts[i - 1]) {
                continue;
            }
            counts[i] += 1;
            grid[cell.row - 1][cell.col] = v;
            total += go(idx + 1, order, shape, mu, grid, counts);
            counts[i] -= 1;
        }
        grid[cell.row - 1][cell.col] = 0;
        total
    }

    go(0, &order, shape, mu, &mut grid, &mut counts)
}

/// Bilinear extension of `s_λ s_μ = Σ_ν c^ν_{λμ} s_ν`.
pub fn schur_product(f: &SchurExpansion, g: &SchurExpansion) -> SchurExpansion {
    let mut out = SchurExpansion::zero();
    for (lam, a) in &f.terms {
        for (mu, b) in &g.terms {
            let ab = a * b;
            // fill the skew part with the smaller partition's content
            let (big, small) = if lam.size() >= mu.size() { (lam, mu) } else { (mu, lam) };
            for nu in big.supersets(small.size()) {
                let c = lr_coefficient(&nu, big, small);
                if c > 0 {
                    out.add_term(nu, &ab * BigInt::from(c));
                }
            }
        }
    }
    out
}

/// `s_{λ/μ} = Σ_ν c^λ_{μν} s_ν`.
pub fn skew_to_schur(s: &SkewShape) -> SchurExpansion {
    let mut out = SchurExpansion::zero();
    for nu in Partition::all_of_size(s.size()) {
        let c = lr_coefficient(s.outer(), s.inner(), &nu);
        if c > 0 {
            out.add_term(nu, BigInt::from(c));
        }
    }
    out
}

pub fn skew_expansion_to_schur(e: &SkewExpansion) -> SchurExpansion {
    let mut out = SchurExpansion::zero();
    for (s, c) in &e.terms {
        out += &skew_to_schur(s).scale(c);
    }
    out
}

/// `⟨f, g⟩` with the Schur functions orthonormal.
pub fn hall_inner(f: &SchurExpansion, g: &SchurExpansion) -> BigInt {
    f.terms
        .iter()
        .filter_map(|(p, a)| g.terms.get(p).map(|b| a * b))
        .sum()
}

/// `f^⊥(g)`: the coefficient of `s_ν` is `⟨g, f·s_ν⟩`.
pub fn perp(f: &SchurExpansion, g: &SchurExpansion) -> SchurExpansion {
    let mut out = SchurExpansion::zero();
    let f_degrees: Vec<usize> = distinct_degrees(f);
    let g_degrees: Vec<usize> = distinct_degrees(g);
    let mut targets: Vec<usize> = f_degrees
        .iter()
        .flat_map(|&e| g_degrees.iter().filter(move |&&d| d >= e).map(move |&d| d - e))
        .collect();
    targets.sort_unstable();
    targets.dedup();
    for d in targets {
        for nu in Partition::all_of_size(d) {
            let c = hall_inner(g, &schur_product(f, &SchurExpansion::schur(nu.clone())));
            out.add_term(nu, c);
        }
    }
    out
}

fn distinct_degrees(f: &SchurExpansion) -> Vec<usize> {
    let mut d: Vec<usize> = f.terms.keys().map(Partition::size).collect();
    d.sort_unstable();
    d.dedup();
    d
}

/// `h_n = s_(n)`.
pub fn h(n: usize) -> SchurExpansion {
    if n == 0 {
        return SchurExpansion::one();
    }
    SchurExpansion::schur(Partition::new(vec![n]).expect("single row"))
}

/// `e_n = s_(1ⁿ)`.
pub fn e(n: usize) -> SchurExpansion {
    SchurExpansion::schur(Partition::new(vec![1; n]).expect("single column"))
}

/// `ω(s_λ) = s_{λᵗ}`.
pub fn omega(f: &SchurExpansion) -> SchurExpansion {
    SchurExpansion {
        terms: f.terms.iter().map(|(p, c)| (p.conjugate(), c.clone())).collect(),
    }
}

/// The identities checked by [`verify_appendix`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AppendixIdentity {
    /// `f·h_n^⊥(g) = Σ_k (-1)^k h_{n-k}^⊥(e_k^⊥(f)·g)`
    Proposition,
    /// `Σ_i (-1)^i e_i h_{n-i} = 0`
    AlternatingEh,
    /// `h_n^⊥(fg) = Σ_i h_{n-i}^⊥(f)·h_i^⊥(g)`
    PerpOfProduct,
    /// `(fg)^⊥ = f^⊥ ∘ g^⊥` on every `s_λ` of degree at most `deg f + deg g`
    PerpHomomorphism,
}

impl fmt::Display for AppendixIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AppendixIdentity::Proposition => "f h_n^perp(g) = sum (-1)^k h_(n-k)^perp(e_k^perp(f) g)",
            AppendixIdentity::AlternatingEh => "sum (-1)^i e_i h_(n-i) = 0",
            AppendixIdentity::PerpOfProduct => "h_n^perp(fg) = sum h_(n-i)^perp(f) h_i^perp(g)",
            AppendixIdentity::PerpHomomorphism => "(fg)^perp = f^perp g^perp",
        })
    }
}

fn signed(k: usize, f: SchurExpansion) -> SchurExpansion {
    if k % 2 == 1 {
        -&f
    } else {
        f
    }
}

/// Checks the four perp identities for `f`, `g`, `n`. Returns the failed
/// identities; an empty list means all hold.
pub fn verify_appendix(f: &SchurExpansion, g: &SchurExpansion, n: usize) -> Vec<AppendixIdentity> {
    let mut failed = Vec::new();

    let lhs = f * &perp(&h(n), g);
    let mut rhs = SchurExpansion::zero();
    for k in 0..=n {
        let inner = &perp(&e(k), f) * g;
        rhs += &signed(k, perp(&h(n - k), &inner));
    }
    if lhs != rhs {
        failed.push(AppendixIdentity::Proposition);
    }

    if n >= 1 {
        let mut sum = SchurExpansion::zero();
        for i in 0..=n {
            sum += &signed(i, &e(i) * &h(n - i));
        }
        if !sum.is_zero() {
            failed.push(AppendixIdentity::AlternatingEh);
        }
    }

    let fg = f * g;
    let lhs = perp(&h(n), &fg);
    let mut rhs = SchurExpansion::zero();
    for i in 0..=n {
        rhs += &(&perp(&h(n - i), f) * &perp(&h(i), g));
    }
    if lhs != rhs {
        failed.push(AppendixIdentity::PerpOfProduct);
    }

    let bound = f.degree() + g.degree();
    let homomorphic = (0..=bound).flat_map(Partition::all_of_size).all(|lam| {
        let probe = SchurExpansion::schur(lam);
        perp(&fg, &probe) == perp(f, &perp(g, &probe))
    });
    if !homomorphic {
        failed.push(AppendixIdentity::PerpHomomorphism);
    }

    failed
}
