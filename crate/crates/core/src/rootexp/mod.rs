//! Values and Taylor expansions of completed elements at roots of unity.

mod cycint;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::completion::{reduce, series_realize, FiltrationChain, SeriesSpec, TruncatedElement};
use crate::error::{Error, Result};
use crate::polyring::IntPolynomial;

pub use cycint::{CycOp, CyclotomicInteger, CyclotomicIntegerJson, ZetaPolynomial};

/// Multiplicity of `Phi_n` (equivalently of `q - zeta_n`) in the modulus of
/// `a`'s level.
pub fn root_multiplicity(a: &TruncatedElement, n: u64) -> Result<usize> {
    if n == 0 {
        return Err(Error::InvalidInput("order must be positive".into()));
    }
    if a.chain().is_pochhammer() {
        Ok(a.level() / n as usize)
    } else {
        a.chain().phi_multiplicity(a.level(), n)
    }
}

/// Value at a primitive `n`-th root of unity.
pub fn evaluate_at_root(a: &TruncatedElement, n: u64) -> Result<CyclotomicInteger> {
    if root_multiplicity(a, n)? == 0 {
        return Err(Error::InsufficientPrecision(format!(
            "Phi_{n} does not divide the modulus at level {} of {}",
            a.level(),
            a.chain().label()
        )));
    }
    Ok(CyclotomicInteger::from_poly(n, a.rep()))
}

/// Values at all orders in `orders`, computed in parallel.
pub fn tau_values(a: &TruncatedElement, orders: &[u64]) -> Result<BTreeMap<u64, CyclotomicInteger>> {
    orders
        .par_iter()
        .map(|&n| evaluate_at_root(a, n).map(|v| (n, v)))
        .collect::<Result<Vec<_>>>()
        .map(|v| v.into_iter().collect())
}

/// `sum_j c_j (q - zeta_n)^j`, trustworthy through index `valid_to`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootTaylorSeries {
    pub order: u64,
    pub valid_to: usize,
    pub coeffs: Vec<CyclotomicInteger>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootTaylorSeriesJson {
    pub order: u64,
    pub valid_to: usize,
    pub coeffs: Vec<CyclotomicIntegerJson>,
}

impl RootTaylorSeries {
    pub fn to_json(&self) -> RootTaylorSeriesJson {
        RootTaylorSeriesJson {
            order: self.order,
            valid_to: self.valid_to,
            coeffs: self.coeffs.iter().map(|c| c.to_json()).collect(),
        }
    }

    /// `sum_j c_j (q - zeta)^j` as a polynomial over `Z[zeta]`.
    pub fn to_polynomial(&self) -> ZetaPolynomial {
        let lin = ZetaPolynomial::linear(self.order);
        let mut power = ZetaPolynomial::from_int_poly(self.order, &IntPolynomial::one());
        let mut acc = ZetaPolynomial::new(self.order, Vec::new());
        for c in &self.coeffs {
            acc = acc.add(&power.scale(c));
            power = power.mul(&lin);
        }
        acc
    }
}

/// First `count` Taylor coefficients of a plain integer polynomial at
/// `zeta_n`, by repeated synthetic division by `q - zeta_n`.
pub fn taylor_of_polynomial(f: &IntPolynomial, n: u64, count: usize) -> Vec<CyclotomicInteger> {
    let mut cur = ZetaPolynomial::from_int_poly(n, f);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let (quot, val) = cur.div_by_linear();
        out.push(val);
        cur = quot;
    }
    out
}

/// Expansion of `a` in powers of `q - zeta_n` through index `j_max`.
///
/// Only the first `m` coefficients are determined by `a` modulo `g_K`,
/// where `m` is the multiplicity of `Phi_n` in `g_K`; asking for more is an
/// error.
pub fn taylor_at_root(a: &TruncatedElement, n: u64, j_max: usize) -> Result<RootTaylorSeries> {
    let mult = root_multiplicity(a, n)?;
    if mult == 0 || j_max > mult - 1 {
        return Err(Error::InsufficientPrecision(format!(
            "coefficient {j_max} at order {n} needs multiplicity {}, level {} gives {mult}",
            j_max + 1,
            a.level()
        )));
    }
    Ok(RootTaylorSeries {
        order: n,
        valid_to: mult - 1,
        coeffs: taylor_of_polynomial(a.rep(), n, j_max + 1),
    })
}

/// Expansion at `q = 1` of a Habiro series through index `j_max`, from its
/// realization at Pochhammer level `j_max + 1`.
pub fn ohtsuki_series(spec: &SeriesSpec, j_max: usize) -> Result<RootTaylorSeries> {
    let chain = FiltrationChain::pochhammer();
    let a = series_realize(spec, &chain, j_max + 1)?;
    taylor_at_root(&a, 1, j_max)
}

/// Same coefficients as [`ohtsuki_series`], obtained by expanding each term
/// separately and summing; terms `t_n` with `n > j_max` carry a factor
/// `(q - 1)^(j_max + 1)` and are skipped.
pub fn ohtsuki_series_termwise(spec: &SeriesSpec, j_max: usize) -> Result<Vec<CyclotomicInteger>> {
    let count = spec.terms_needed(j_max + 1, crate::completion::DEFAULT_TERM_BOUND)?;
    let mut acc = vec![CyclotomicInteger::zero(1); j_max + 1];
    for n in 0..count {
        for (slot, c) in acc.iter_mut().zip(taylor_of_polynomial(&spec.term(n), 1, j_max + 1)) {
            *slot = slot.add(&c)?;
        }
    }
    Ok(acc)
}

/// Realize `spec` on the Pochhammer chain at the smallest level that fixes
/// the value at every order in `orders` (the maximum order).
pub fn series_values(spec: &SeriesSpec, orders: &[u64]) -> Result<BTreeMap<u64, CyclotomicInteger>> {
    let level = orders.iter().copied().max().ok_or(Error::EmptySet)? as usize;
    let a = series_realize(spec, &FiltrationChain::pochhammer(), level)?;
    tau_values(&a, orders)
}

/// Expansion of `spec` at `zeta_n` with `terms` coefficients, from the
/// minimal Pochhammer level `n * terms`.
pub fn series_expansion(spec: &SeriesSpec, n: u64, terms: usize) -> Result<RootTaylorSeries> {
    if terms == 0 {
        return Err(Error::InvalidInput("at least one term is needed".into()));
    }
    let level = n as usize * terms;
    let a = series_realize(spec, &FiltrationChain::pochhammer(), level)?;
    taylor_at_root(&a, n, terms - 1)
}

/// Helper for tests and the CLI: an element from an integer polynomial on
/// the Pochhammer chain.
pub fn habiro_element(f: &IntPolynomial, level: usize) -> Result<TruncatedElement> {
    reduce(f, &FiltrationChain::pochhammer(), level)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::phi;

    fn kz(level: usize) -> TruncatedElement {
        series_realize(&SeriesSpec::kontsevich_zagier(), &FiltrationChain::pochhammer(), level).unwrap()
    }

    #[test]
    fn kz_values() {
        let a = kz(3);
        assert_eq!(evaluate_at_root(&a, 1).unwrap(), CyclotomicInteger::from_int(1, 1));
        assert_eq!(evaluate_at_root(&a, 2).unwrap(), CyclotomicInteger::from_int(2, 3));
        assert_eq!(
            evaluate_at_root(&a, 3).unwrap(),
            CyclotomicInteger::from_coeffs(3, vec![5.into(), (-1).into()])
        );
        assert!(matches!(evaluate_at_root(&a, 4), Err(Error::InsufficientPrecision(_))));
    }

    #[test]
    fn tau_kills_factor() {
        let h = IntPolynomial::from_i64s(&[3, -1, 4]);
        let a = habiro_element(&(&*phi(5) * &h), 7).unwrap();
        let t = tau_values(&a, &[1, 2, 5, 7]).unwrap();
        assert!(t[&5].is_zero());
        assert!(!t[&1].is_zero());
        assert!(tau_values(&a, &[8]).is_err());
    }

    #[test]
    fn linear_taylor() {
        let a = habiro_element(&IntPolynomial::q(), 2).unwrap();
        let s = taylor_at_root(&a, 1, 1).unwrap();
        assert_eq!(s.coeffs, vec![CyclotomicInteger::one(1), CyclotomicInteger::one(1)]);
        assert_eq!(s.valid_to, 1);
        assert!(taylor_at_root(&a, 1, 2).is_err());
    }

    #[test]
    fn q_inverse_expansion_alternates() {
        let s = ohtsuki_series(&SeriesSpec::q_inverse(), 5).unwrap();
        let expect: Vec<_> = (0..6).map(|j| CyclotomicInteger::from_int(1, if j % 2 == 0 { 1 } else { -1 })).collect();
        assert_eq!(s.coeffs, expect);
    }

    #[test]
    fn one_expansion() {
        let s = ohtsuki_series(&SeriesSpec::one(), 4).unwrap();
        assert_eq!(s.coeffs[0], CyclotomicInteger::one(1));
        assert!(s.coeffs[1..].iter().all(|c| c.is_zero()));
    }

    #[test]
    fn kz_stabilizes() {
        let a6 = taylor_at_root(&kz(6), 1, 2).unwrap();
        let a9 = taylor_at_root(&kz(9), 1, 2).unwrap();
        assert_eq!(a6.coeffs, a9.coeffs);
        assert_eq!(
            ohtsuki_series(&SeriesSpec::kontsevich_zagier(), 6).unwrap().coeffs,
            ohtsuki_series_termwise(&SeriesSpec::kontsevich_zagier(), 6).unwrap()
        );
    }

    #[test]
    fn non_pochhammer_multiplicity() {
        let chain = FiltrationChain::product(vec![1, 3]).unwrap();
        let a = reduce(&IntPolynomial::from_i64s(&[1, 2, 3, 4, 5]), &chain, 4).unwrap();
        assert_eq!(root_multiplicity(&a, 3).unwrap(), 2);
        assert_eq!(taylor_at_root(&a, 3, 1).unwrap().valid_to, 1);
        assert!(evaluate_at_root(&a, 2).is_err());
    }
}
