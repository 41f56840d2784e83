//! Exhaustive verification harnesses. Each sweeps a bounded family of cases
//! in parallel and collects failures in case order.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::involution::{
    contexts, exits_right, exits_weakly_right, fixed_point_to_star, is_fixed_point, phi, star_to_fixed_point,
    downward_path, SlideContext,
};
use crate::oracle::{monomial_expansion, MonomialExpansion};
use crate::rules::{skew_h_rho_product, skew_lr_product, skew_pieri};
use crate::shapes::{star, Partition, SkewShape};
use crate::symfunc::{self, h, schur_product, skew_to_schur, AppendixIdentity, SchurExpansion, SkewExpansion};
use crate::tableaux::{enumerate_ssyt, is_lr_filling, Entry};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub case: String,
    pub check: String,
    pub detail: String,
}

/// Outcome of one harness run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub harness: String,
    pub params: BTreeMap<String, usize>,
    pub cases: usize,
    pub failures: Vec<Failure>,
    /// Harness-specific tallies.
    pub counts: BTreeMap<String, u64>,
    pub elapsed_ms: u64,
}

pub type SkewPieriReport = Report;

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.harness)?;
        for (k, v) in &self.params {
            write!(f, " {k}={v}")?;
        }
        writeln!(f)?;
        writeln!(f, "cases: {}", self.cases)?;
        for (k, v) in &self.counts {
            writeln!(f, "{k}: {v}")?;
        }
        for x in &self.failures {
            writeln!(f, "FAIL {} [{}]: {}", x.case, x.check, x.detail)?;
        }
        writeln!(f, "{}", if self.passed() { "ok" } else { "FAILED" })
    }
}

struct Outcome {
    failures: Vec<Failure>,
    counts: BTreeMap<String, u64>,
}

impl Outcome {
    fn new() -> Self {
        Self {
            failures: Vec::new(),
            counts: BTreeMap::new(),
        }
    }

    fn fail(&mut self, case: impl fmt::Display, check: &str, detail: impl Into<String>) {
        self.failures.push(Failure {
            case: case.to_string(),
            check: check.to_string(),
            detail: detail.into(),
        });
    }

    fn bump(&mut self, key: &str, by: u64) {
        *self.counts.entry(key.to_string()).or_default() += by;
    }

    fn merge(mut self, other: Outcome) -> Outcome {
        self.failures.extend(other.failures);
        for (k, v) in other.counts {
            *self.counts.entry(k).or_default() += v;
        }
        self
    }
}

fn run<C, F>(harness: &str, params: &[(&str, usize)], cases: Vec<C>, check: F) -> Report
where
    C: Sync,
    F: Fn(&C) -> Outcome + Sync,
{
    let start = Instant::now();
    let outcomes: Vec<Outcome> = cases.par_iter().map(&check).collect();
    let total = outcomes.into_iter().fold(Outcome::new(), Outcome::merge);
    Report {
        harness: harness.to_string(),
        params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
        cases: cases.len(),
        failures: total.failures,
        counts: total.counts,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

fn row(n: usize) -> Partition {
    if n == 0 {
        Partition::empty()
    } else {
        Partition::new(vec![n]).expect("single row")
    }
}

/// Limits for [`verify_skew_pieri_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SkewPieriLimits {
    pub max_outer: usize,
    pub max_n: usize,
    /// The monomial comparison runs only for cases within these limits.
    pub monomial_max_outer: usize,
    pub monomial_max_n: usize,
    /// Entry bound for the involution accounting.
    pub max_entry: Entry,
}

impl SkewPieriLimits {
    pub fn new(max_outer: usize, max_n: usize) -> Self {
        Self {
            max_outer,
            max_n,
            monomial_max_outer: max_outer,
            monomial_max_n: max_n,
            max_entry: 3,
        }
    }
}

/// Skew Pieri for every shape with `|outer| ≤ limit_outer` and
/// `1 ≤ n ≤ limit_n`.
pub fn verify_skew_pieri(limit_outer: usize, limit_n: usize) -> Report {
    verify_skew_pieri_with(SkewPieriLimits::new(limit_outer, limit_n))
}

/// Checks, per case: the Schur expansions agree; the monomial expansions
/// agree in as many variables as the degree; and the signed count of slide
/// contexts equals the number of SSYT of `(λ/μ) * (n)`, with the fixed points
/// mapping bijectively onto them.
pub fn verify_skew_pieri_with(limits: SkewPieriLimits) -> Report {
    let cases: Vec<(SkewShape, usize)> = SkewShape::all_up_to(limits.max_outer)
        .into_iter()
        .flat_map(|s| (1..=limits.max_n).map(move |n| (s.clone(), n)))
        .collect();
    let params = [
        ("max_outer", limits.max_outer),
        ("max_n", limits.max_n),
        ("monomial_max_outer", limits.monomial_max_outer),
        ("monomial_max_n", limits.monomial_max_n),
        ("max_entry", limits.max_entry as usize),
    ];
    run("skew-pieri", &params, cases, |(s, n)| {
        let mut out = Outcome::new();
        let case = format!("{s} n={n}");
        let expansion = skew_pieri(s, *n, false);

        let lhs = expansion.to_schur();
        let rhs = schur_product(&skew_to_schur(s), &h(*n));
        out.bump("schur_checks", 1);
        if lhs != rhs {
            out.fail(&case, "schur", format!("rule gives {} but product is {}", inline(&lhs), inline(&rhs)));
        }

        if s.outer().size() <= limits.monomial_max_outer && *n <= limits.monomial_max_n {
            let vars = s.size() + n;
            let mut lhs = MonomialExpansion::new(vars);
            for (shape, c) in expansion.terms() {
                lhs.add_scaled(&monomial_expansion(shape, vars), c);
            }
            let rhs = monomial_expansion(s, vars).product(&monomial_expansion(&SkewShape::straight(row(*n)), vars));
            out.bump("monomial_checks", 1);
            if lhs != rhs {
                out.fail(&case, "monomial", format!("expansions differ in {vars} variables"));
            }
        }

        let ctxs = contexts(s, *n, limits.max_entry);
        let signed: i64 = ctxs.iter().map(|c| c.sign() as i64).sum();
        let star_shape = star(s, &SkewShape::straight(row(*n)));
        let star_count = enumerate_ssyt(&star_shape, limits.max_entry).len() as i64;
        out.bump("contexts", ctxs.len() as u64);
        if signed != star_count {
            out.fail(&case, "signed-count", format!("signed sum {signed}, star tableaux {star_count}"));
        }
        let mut images = BTreeSet::new();
        for c in ctxs.iter().filter(|c| is_fixed_point(c)) {
            match fixed_point_to_star(c) {
                Ok(t) if t.shape() == &star_shape && t.is_ssyt() => {
                    images.insert(t.to_string());
                }
                Ok(t) => out.fail(&case, "star-image", format!("{} maps to {t}", c.tableau())),
                Err(e) => out.fail(&case, "star-image", format!("{}: {e}", c.tableau())),
            }
        }
        if images.len() as i64 != star_count {
            out.fail(&case, "bijection", format!("{} distinct images, {star_count} star tableaux", images.len()));
        }
        out
    })
}

fn inline(f: &SchurExpansion) -> String {
    f.to_string().trim_end().replace('\n', " ")
}

/// `φ` over every context with `|outer(base)| ≤ max_outer`, `n ≤ max_n`,
/// entries `≤ max_entry`.
pub fn verify_involution(max_outer: usize, max_n: usize, max_entry: Entry) -> Report {
    let cases: Vec<(SkewShape, usize)> = SkewShape::all_up_to(max_outer)
        .into_iter()
        .flat_map(|s| (0..=max_n).map(move |n| (s.clone(), n)))
        .collect();
    let params = [("max_outer", max_outer), ("max_n", max_n), ("max_entry", max_entry as usize)];
    run("involution", &params, cases, |(s, n)| {
        let mut out = Outcome::new();
        let mut images = BTreeSet::new();
        let ctxs = contexts(s, *n, max_entry);
        out.bump("contexts", ctxs.len() as u64);
        for c in &ctxs {
            check_context(c, &mut out, &mut images);
        }
        let star_shape = star(s, &SkewShape::straight(row(*n)));
        let star_count = enumerate_ssyt(&star_shape, max_entry).len();
        if images.len() != star_count {
            out.fail(
                format!("{s} n={n}"),
                "bijection",
                format!("{} fixed-point images, {star_count} star tableaux", images.len()),
            );
        }
        out
    })
}

fn check_context(c: &SlideContext, out: &mut Outcome, images: &mut BTreeSet<String>) {
    let case = c.to_string();
    let p = phi(c);
    if let Err(e) = SlideContext::new(p.base().clone(), p.tableau().clone()) {
        out.fail(&case, "phi-domain", e.to_string());
        return;
    }
    let back = phi(&p);
    if back != *c {
        out.fail(&case, "involution", format!("phi gives {}, then {}", p.tableau(), back.tableau()));
    }
    if p.tableau().content() != c.tableau().content() {
        out.fail(&case, "content", format!("phi gives {}", p.tableau()));
    }
    let fixed = is_fixed_point(c);
    if (p == *c) != fixed {
        out.fail(&case, "fixed-points", format!("phi gives {}", p.tableau()));
    }
    if p != *c && p.sign() == c.sign() {
        out.fail(&case, "sign", format!("phi gives {}", p.tableau()));
    }
    if fixed {
        out.bump("fixed_points", 1);
        match fixed_point_to_star(c) {
            Ok(t) => {
                match star_to_fixed_point(c.base(), &t) {
                    Ok(back) if back == *c => {}
                    Ok(back) => out.fail(&case, "star-round-trip", format!("{t} returns {}", back.tableau())),
                    Err(e) => out.fail(&case, "star-round-trip", format!("{t}: {e}")),
                }
                images.insert(t.to_string());
            }
            Err(e) => out.fail(&case, "star", e.to_string()),
        }
    }
    if c.inner_strip_bottom().is_some() && downward_path(c).is_some() {
        out.bump("exits_right_checked", 1);
        if exits_right(c) != exits_weakly_right(c) {
            out.fail(&case, "exits-right", "row test and column test disagree");
        }
    }
    if is_lr_filling(c.tableau()) {
        out.bump("lr_fillings", 1);
        if !is_lr_filling(p.tableau()) {
            out.fail(&case, "lr-closure", format!("phi gives {}", p.tableau()));
        }
    }
}

/// The perp identities for `f = s_α`, `g = s_β` with `|α|, |β| ≤ max_deg`
/// and `1 ≤ n ≤ max_n`.
pub fn verify_appendix(max_deg: usize, max_n: usize) -> Report {
    let parts: Vec<Partition> = (0..=max_deg).flat_map(Partition::all_of_size).collect();
    let cases: Vec<(Partition, Partition, usize)> = parts
        .iter()
        .flat_map(|a| parts.iter().flat_map(move |b| (1..=max_n).map(move |n| (a.clone(), b.clone(), n))))
        .collect();
    run("appendix", &[("max_deg", max_deg), ("max_n", max_n)], cases, |(a, b, n)| {
        let mut out = Outcome::new();
        let f = SchurExpansion::schur(a.clone());
        let g = SchurExpansion::schur(b.clone());
        for id in symfunc::verify_appendix(&f, &g, *n) {
            out.fail(format!("f=s[{a}] g=s[{b}] n={n}"), identity_name(id), id.to_string());
        }
        out
    })
}

fn identity_name(id: AppendixIdentity) -> &'static str {
    match id {
        AppendixIdentity::Proposition => "proposition",
        AppendixIdentity::AlternatingEh => "alternating-eh",
        AppendixIdentity::PerpOfProduct => "perp-of-product",
        AppendixIdentity::PerpHomomorphism => "perp-homomorphism",
    }
}

fn lift(f: &SchurExpansion) -> SkewExpansion {
    SkewExpansion::from_terms(f.terms().iter().map(|(p, c)| (SkewShape::straight(p.clone()), c.clone())))
}

/// The skew LR product against the Schur-basis product for every
/// `|outer(a)| ≤ max_outer_a`, `|outer(b)| ≤ max_outer_b`, plus both
/// degenerations.
pub fn verify_skew_lr(max_outer_a: usize, max_outer_b: usize) -> Report {
    let bs = SkewShape::all_up_to(max_outer_b);
    let cases: Vec<(SkewShape, SkewShape)> = SkewShape::all_up_to(max_outer_a)
        .into_iter()
        .flat_map(|a| bs.iter().map(move |b| (a.clone(), b.clone())))
        .collect();
    run("skew-lr", &[("max_outer_a", max_outer_a), ("max_outer_b", max_outer_b)], cases, |(a, b)| {
        let mut out = Outcome::new();
        let case = format!("{a} * {b}");
        let rule = skew_lr_product(a, b);
        let product = schur_product(&skew_to_schur(a), &skew_to_schur(b));
        if rule.to_schur() != product {
            out.fail(&case, "schur", format!("rule gives {}", inline(&rule.to_schur())));
        }
        if b.inner().is_empty() && b.outer().len() == 1 {
            out.bump("pieri_degenerations", 1);
            if rule != skew_pieri(a, b.size(), false) {
                out.fail(&case, "skew-pieri-degeneration", "terms differ from the skew Pieri rule");
            }
        }
        if a.inner().is_empty() && b.inner().is_empty() {
            out.bump("classical_degenerations", 1);
            if rule != lift(&product) {
                out.fail(&case, "classical-degeneration", "terms differ from the classical product");
            }
        }
        out
    })
}

/// Iterated skew Pieri over the parts of `ρ`.
pub fn iterated_skew_pieri(a: &SkewShape, rho: &Partition) -> SkewExpansion {
    let mut acc = SkewExpansion::single(a.clone());
    for &part in rho.parts() {
        let mut next = SkewExpansion::zero();
        for (s, c) in acc.terms() {
            for (t, d) in skew_pieri(s, part, false).terms() {
                next.add_term(t.clone(), c * d);
            }
        }
        acc = next;
    }
    acc
}

/// `s_{λ/μ} h_ρ` against iterated skew Pieri for `|outer| ≤ max_outer` and
/// `1 ≤ |ρ| ≤ max_rho`.
pub fn verify_h_rho(max_outer: usize, max_rho: usize) -> Report {
    let rhos: Vec<Partition> = (1..=max_rho).flat_map(Partition::all_of_size).collect();
    let cases: Vec<(SkewShape, Partition)> = SkewShape::all_up_to(max_outer)
        .into_iter()
        .flat_map(|a| rhos.iter().map(move |r| (a.clone(), r.clone())))
        .collect();
    run("h-rho", &[("max_outer", max_outer), ("max_rho", max_rho)], cases, |(a, rho)| {
        let mut out = Outcome::new();
        let rule = skew_h_rho_product(a, rho).to_schur();
        let iterated = iterated_skew_pieri(a, rho).to_schur();
        if rule != iterated {
            out.fail(
                format!("{a} rho={rho}"),
                "iterated-pieri",
                format!("rule gives {}, iteration gives {}", inline(&rule), inline(&iterated)),
            );
        }
        let mut direct = skew_to_schur(a);
        for &part in rho.parts() {
            direct = schur_product(&direct, &h(part));
        }
        if rule != direct {
            out.fail(format!("{a} rho={rho}"), "product", "differs from the Schur-basis product");
        }
        out
    })
}
