//! Mixed-radix digit expansions along a filtration chain.
//!
//! With `h_n = g_(n+1) / g_n`, every residue modulo `g_k` is uniquely
//! `a_0 g_0 + a_1 g_1 + ... + a_(k-1) g_(k-1)` with `deg a_n < deg h_n`.
//! For the Habiro filtration this reads `deg a_n <= n`.

use std::sync::Arc;

use super::chain::FiltrationChain;
use super::element::{reduce, TruncatedElement};
use crate::error::{Error, Result};
use crate::polyring::IntPolynomial;

#[derive(Clone, Debug)]
pub struct DigitExpansion {
    chain: Arc<FiltrationChain>,
    digits: Vec<IntPolynomial>,
}

impl PartialEq for DigitExpansion {
    fn eq(&self, other: &Self) -> bool {
        self.chain.same_chain(&other.chain) && self.digits == other.digits
    }
}

impl DigitExpansion {
    /// Checks the degree bound of every digit.
    pub fn new(chain: Arc<FiltrationChain>, digits: Vec<IntPolynomial>) -> Result<Self> {
        for (index, a) in digits.iter().enumerate() {
            let bound = chain.step_factor(index)?.degree().finite().unwrap_or(0);
            if let Some(degree) = a.degree().finite() {
                if degree >= bound {
                    return Err(Error::DigitDegreeViolation { index, degree, bound });
                }
            }
        }
        Ok(DigitExpansion { chain, digits })
    }

    pub fn chain(&self) -> &Arc<FiltrationChain> {
        &self.chain
    }

    pub fn digits(&self) -> &[IntPolynomial] {
        &self.digits
    }

    pub fn level(&self) -> usize {
        self.digits.len()
    }

    /// `sum a_n g_n`, which already has degree below `deg g_level`.
    pub fn resum(&self) -> Result<IntPolynomial> {
        let mut acc = IntPolynomial::zero();
        for (n, a) in self.digits.iter().enumerate() {
            acc = &acc + &(a * self.chain.modulus(n)?.as_ref());
        }
        Ok(acc)
    }
}

pub fn to_digits(a: &TruncatedElement) -> Result<DigitExpansion> {
    let chain = a.chain().clone();
    let mut rest = a.rep().clone();
    let mut digits = Vec::with_capacity(a.level());
    for n in 0..a.level() {
        let (quot, digit) = rest.divmod(&chain.step_factor(n)?)?;
        digits.push(digit);
        rest = quot;
    }
    if !rest.is_zero() {
        return Err(Error::Internal("representative exceeds its modulus".into()));
    }
    Ok(DigitExpansion { chain, digits })
}

/// Re-sum digits into an element at level `level` (at most the number of
/// digits; extra digits above `level` vanish modulo `g_level`).
pub fn from_digits(d: &DigitExpansion, level: usize) -> Result<TruncatedElement> {
    let checked = DigitExpansion::new(d.chain.clone(), d.digits.clone())?;
    if level > checked.level() {
        return Err(Error::InsufficientPrecision(format!(
            "{} digits cannot determine level {level}",
            checked.level()
        )));
    }
    reduce(&checked.resum()?, &checked.chain, level)
}
