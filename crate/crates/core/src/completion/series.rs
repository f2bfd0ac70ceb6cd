use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use super::chain::FiltrationChain;
use super::element::{reduce, TruncatedElement};
use crate::cyclotomic::pochhammer;
use crate::error::{Error, Result};
use crate::polyring::IntPolynomial;

/// Default bound on the number of terms and on the auxiliary Pochhammer level
/// searched by [`series_realize`].
pub const DEFAULT_TERM_BOUND: usize = 4096;

type TermFn = dyn Fn(usize) -> IntPolynomial + Send + Sync;
type WitnessFn = dyn Fn(usize) -> usize + Send + Sync;

/// A convergent series `sum_n t_n` in the Habiro ring.
///
/// `witness(n)` is a level `K` with `(q)_K | t_n`; it must be nondecreasing
/// and unbounded, which is what makes the sum converge.
#[derive(Clone)]
pub struct SeriesSpec {
    name: String,
    term: Arc<TermFn>,
    witness: Arc<WitnessFn>,
}

impl fmt::Debug for SeriesSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SeriesSpec({})", self.name)
    }
}

impl SeriesSpec {
    pub fn new(
        name: impl Into<String>,
        term: impl Fn(usize) -> IntPolynomial + Send + Sync + 'static,
        witness: impl Fn(usize) -> usize + Send + Sync + 'static,
    ) -> Self {
        SeriesSpec { name: name.into(), term: Arc::new(term), witness: Arc::new(witness) }
    }

    /// Kontsevich-Zagier series `sum_n (q)_n`.
    pub fn kontsevich_zagier() -> Self {
        Self::new("kz", |n| pochhammer(n as u64), |n| n)
    }

    /// `q^{-1} = sum_n q^n (q)_n`.
    pub fn q_inverse() -> Self {
        Self::new("qinv", |n| pochhammer(n as u64).shift(n), |n| n)
    }

    /// The constant `1`, as a one-term series.
    pub fn one() -> Self {
        Self::new(
            "one",
            |n| if n == 0 { IntPolynomial::one() } else { IntPolynomial::zero() },
            |n| if n == 0 { 0 } else { usize::MAX },
        )
    }

    pub fn by_name(name: &str) -> Option<Self> {
        match name {
            "kz" => Some(Self::kontsevich_zagier()),
            "qinv" => Some(Self::q_inverse()),
            "one" => Some(Self::one()),
            _ => None,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn term(&self, n: usize) -> IntPolynomial {
        (self.term)(n)
    }

    pub fn witness(&self, n: usize) -> usize {
        (self.witness)(n)
    }

    /// Number of leading terms that can be nonzero modulo `(q)_level`.
    pub fn terms_needed(&self, level: usize, bound: usize) -> Result<usize> {
        (0..=bound)
            .find(|&n| self.witness(n) >= level)
            .ok_or_else(|| Error::NonConvergent { name: self.name.clone(), level, bound })
    }

    /// Exact partial sum of the first `count` terms.
    pub fn partial_sum(&self, count: usize) -> IntPolynomial {
        (0..count).fold(IntPolynomial::zero(), |acc, n| &acc + &self.term(n))
    }
}

/// Smallest Pochhammer level `K` with `g_k | (q)_K`.
pub fn pochhammer_level_for(chain: &FiltrationChain, k: usize, bound: usize) -> Result<usize> {
    if chain.is_pochhammer() {
        return Ok(k);
    }
    let g = chain.modulus(k)?;
    let poch = FiltrationChain::pochhammer();
    for level in 0..=bound {
        if poch.modulus(level)?.is_divisible_by(&g) {
            return Ok(level);
        }
    }
    Err(Error::NonConvergent { name: chain.label(), level: k, bound })
}

/// Realize `spec` at level `k` of `chain`, with the default term bound.
pub fn series_realize(spec: &SeriesSpec, chain: &Arc<FiltrationChain>, k: usize) -> Result<TruncatedElement> {
    series_realize_bounded(spec, chain, k, DEFAULT_TERM_BOUND)
}

/// Sum the terms of `spec` that can survive modulo `g_k` and reduce.
///
/// On non-Pochhammer chains the cut-off is taken at the first Pochhammer
/// level `K` whose modulus is a multiple of `g_k`.
pub fn series_realize_bounded(
    spec: &SeriesSpec,
    chain: &Arc<FiltrationChain>,
    k: usize,
    bound: usize,
) -> Result<TruncatedElement> {
    let big_k = pochhammer_level_for(chain, k, bound)?;
    let count = spec.terms_needed(big_k, bound)?;
    // spot-check the first discarded term
    let w = spec.witness(count);
    if w != usize::MAX && !spec.term(count).is_divisible_by(&pochhammer(w as u64)) {
        return Err(Error::Internal(format!(
            "term {count} of {} is not divisible by (q)_{w}",
            spec.name()
        )));
    }
    reduce(&spec.partial_sum(count), chain, k)
}

/// Check `q * qinv == 1` at Pochhammer level `n`.
pub fn check_q_inverse(n: usize) -> Result<bool> {
    let chain = FiltrationChain::pochhammer();
    let inv = series_realize(&SeriesSpec::q_inverse(), &chain, n)?;
    let q = reduce(&IntPolynomial::monomial(BigInt::one(), 1), &chain, n)?;
    Ok(q.mul(&inv)? == TruncatedElement::one(&chain, n)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::phi;

    #[test]
    fn kz_low_levels() {
        let c = FiltrationChain::pochhammer();
        let kz = SeriesSpec::kontsevich_zagier();
        assert_eq!(series_realize(&kz, &c, 1).unwrap().rep(), &IntPolynomial::one());
        let direct = &(&IntPolynomial::one() + &pochhammer(1)) + &pochhammer(2);
        assert_eq!(series_realize(&kz, &c, 3).unwrap(), reduce(&direct, &c, 3).unwrap());
    }

    #[test]
    fn q_inverse_small() {
        for n in 0..=12 {
            assert!(check_q_inverse(n).unwrap(), "level {n}");
        }
    }

    #[test]
    fn other_chains() {
        let adic = FiltrationChain::adic((*phi(2)).clone()).unwrap();
        assert_eq!(pochhammer_level_for(&adic, 3, 100).unwrap(), 6);
        let a = series_realize(&SeriesSpec::q_inverse(), &adic, 3).unwrap();
        let q = reduce(&IntPolynomial::q(), &adic, 3).unwrap();
        assert_eq!(q.mul(&a).unwrap(), TruncatedElement::one(&adic, 3).unwrap());
    }

    #[test]
    fn divergent_spec_is_reported() {
        let bad = SeriesSpec::new("stuck", |_| IntPolynomial::one(), |_| 0);
        let c = FiltrationChain::pochhammer();
        assert!(matches!(
            series_realize_bounded(&bad, &c, 2, 50),
            Err(Error::NonConvergent { .. })
        ));
    }

    #[test]
    fn one_series() {
        let c = FiltrationChain::pochhammer();
        assert_eq!(series_realize(&SeriesSpec::one(), &c, 4).unwrap(), TruncatedElement::one(&c, 4).unwrap());
    }
}
