//! Monomial expansions, computed by listing tableaux, and Schur expansions
//! recovered from them by peeling leading terms.
//!
//! Nothing here touches the Littlewood–Richardson code, so the two can
//! check each other.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::shapes::{Partition, SkewShape};
use crate::symfunc::SchurExpansion;
use crate::tableaux::{for_each_ssyt, Composition};

/// A polynomial in `x_1..x_n` stored as exponent vectors of length `n`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MonomialExpansion {
    num_vars: usize,
    terms: BTreeMap<Vec<usize>, BigInt>,
}

impl MonomialExpansion {
    pub fn new(num_vars: usize) -> Self {
        Self { num_vars, terms: BTreeMap::new() }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Exponent vectors are padded to `num_vars`.
    pub fn terms(&self) -> &BTreeMap<Vec<usize>, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, c: &Composition) -> BigInt {
        self.terms.get(&c.padded(self.num_vars)).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exps: Vec<usize>, c: BigInt) {
        assert_eq!(exps.len(), self.num_vars, "exponent vector length");
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn add_scaled(&mut self, other: &MonomialExpansion, c: &BigInt) {
        assert_eq!(self.num_vars, other.num_vars);
        for (e, x) in &other.terms {
            self.add_term(e.clone(), x * c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Ordinary polynomial product.
    pub fn product(&self, other: &MonomialExpansion) -> MonomialExpansion {
        assert_eq!(self.num_vars, other.num_vars);
        let mut out = MonomialExpansion::new(self.num_vars);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let e = a.iter().zip(b).map(|(i, j)| i + j).collect();
                out.add_term(e, x * y);
            }
        }
        out
    }
}

/// `s_{λ/μ}(x_1..x_n)` as a sum of monomials `x^T` over all SSYT `T`.
pub fn monomial_expansion(shape: &SkewShape, num_vars: usize) -> MonomialExpansion {
    let mut out = MonomialExpansion::new(num_vars);
    let mut exps = vec![0usize; num_vars];
    for_each_ssyt(shape, num_vars as u32, |rows| {
        exps.iter_mut().for_each(|e| *e = 0);
        for &v in rows.iter().flatten() {
            exps[v as usize - 1] += 1;
        }
        out.add_term(exps.clone(), BigInt::one());
    });
    out
}

/// Recovers Schur coefficients by repeatedly subtracting `c·s_λ` for the
/// lexicographically largest monomial `x^λ`. Exact as long as `num_vars` is at
/// least the degree; otherwise terms with more rows than variables vanish.
pub fn schur_from_monomials(m: &MonomialExpansion) -> Result<SchurExpansion> {
    let n = m.num_vars;
    let mut rest = m.clone();
    let mut out = SchurExpansion::zero();
    while let Some((lead, c)) = rest.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
        if lead.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotSymmetric(format!("leading exponent {lead:?}")));
        }
        let p = Partition::new(lead.clone()).expect("weakly decreasing");
        let basis = monomial_expansion(&SkewShape::straight(p.clone()), n);
        if basis.coeff(&Composition::new(lead.clone())) != BigInt::one() {
            return Err(Error::NotSymmetric(format!("cannot cancel {lead:?}")));
        }
        rest.add_scaled(&basis, &-&c);
        out.add_term(p, c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_expansions() {
        let m = monomial_expansion(&"2".parse().unwrap(), 2);
        assert_eq!(m.terms().len(), 3);
        assert_eq!(m.coeff(&Composition::new(vec![1, 1])), BigInt::one());
        let m = monomial_expansion(&"21".parse().unwrap(), 3);
        assert_eq!(m.coeff(&Composition::new(vec![1, 1, 1])), BigInt::from(2));
        assert_eq!(m.coeff(&Composition::new(vec![2, 1])), BigInt::one());
        assert_eq!(m.coeff(&Composition::new(vec![3])), BigInt::zero());
    }

    #[test]
    fn peeling_schur() {
        for n in 0..=5 {
            for p in Partition::all_of_size(n) {
                let m = monomial_expansion(&SkewShape::straight(p.clone()), n.max(1));
                assert_eq!(schur_from_monomials(&m).unwrap(), SchurExpansion::schur(p));
            }
        }
    }

    #[test]
    fn rejects_non_symmetric() {
        let mut m = MonomialExpansion::new(2);
        m.add_term(vec![0, 1], BigInt::one());
        assert!(matches!(schur_from_monomials(&m), Err(Error::NotSymmetric(_))));
        let mut m = MonomialExpansion::new(2);
        m.add_term(vec![1, 0], BigInt::one());
        assert!(matches!(schur_from_monomials(&m), Err(Error::NotSymmetric(_))));
    }

    #[test]
    fn skew_21_over_1() {
        let m = monomial_expansion(&"21/1".parse().unwrap(), 2);
        let want = SchurExpansion::from_terms([("2".parse().unwrap(), 1), ("11".parse().unwrap(), 1)]);
        assert_eq!(schur_from_monomials(&m).unwrap(), want);
    }
}
