use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::chain::{ChainKind, FiltrationChain};
use crate::error::{Error, Result};
use crate::polyring::IntPolynomial;

/// An element of a completion known modulo `g_level` of its chain.
///
/// `rep` is always the canonical remainder, of degree below `deg g_level`.
#[derive(Clone, Debug)]
pub struct TruncatedElement {
    chain: Arc<FiltrationChain>,
    level: usize,
    rep: IntPolynomial,
}

impl PartialEq for TruncatedElement {
    fn eq(&self, other: &Self) -> bool {
        self.chain.same_chain(&other.chain) && self.level == other.level && self.rep == other.rep
    }
}

impl Eq for TruncatedElement {}

/// Reduce `f` to level `k` of `chain`.
pub fn reduce(f: &IntPolynomial, chain: &Arc<FiltrationChain>, k: usize) -> Result<TruncatedElement> {
    let g = chain.modulus(k)?;
    Ok(TruncatedElement { chain: chain.clone(), level: k, rep: f.rem(&g)? })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TruncOp {
    Add,
    Sub,
    Mul,
}

impl TruncatedElement {
    pub fn chain(&self) -> &Arc<FiltrationChain> {
        &self.chain
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn rep(&self) -> &IntPolynomial {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn one(chain: &Arc<FiltrationChain>, k: usize) -> Result<Self> {
        reduce(&IntPolynomial::one(), chain, k)
    }

    /// The same element at a lower level of the same chain.
    pub fn truncate(&self, k: usize) -> Result<Self> {
        if k > self.level {
            return Err(Error::InsufficientPrecision(format!(
                "cannot raise level {} to {k}",
                self.level
            )));
        }
        reduce(&self.rep, &self.chain, k)
    }

    fn check_chain(&self, other: &Self) -> Result<()> {
        if self.chain.same_chain(&other.chain) {
            Ok(())
        } else {
            Err(Error::ChainMismatch(self.chain.label(), other.chain.label()))
        }
    }

    /// Ring operation at the common level `min(level(a), level(b))`.
    pub fn arith(&self, other: &Self, op: TruncOp) -> Result<Self> {
        self.check_chain(other)?;
        let k = self.level.min(other.level);
        let raw = match op {
            TruncOp::Add => &self.rep + &other.rep,
            TruncOp::Sub => &self.rep - &other.rep,
            TruncOp::Mul => &self.rep * &other.rep,
        };
        reduce(&raw, &self.chain, k)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.arith(other, TruncOp::Add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.arith(other, TruncOp::Sub)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.arith(other, TruncOp::Mul)
    }

    pub fn neg(&self) -> Self {
        TruncatedElement { chain: self.chain.clone(), level: self.level, rep: -&self.rep }
            .renormalized()
    }

    fn renormalized(self) -> Self {
        let rep = self
            .rep
            .rem(&self.chain.modulus(self.level).expect("level already materialized"))
            .expect("unit-leading modulus");
        TruncatedElement { rep, ..self }
    }

    /// Restriction to level `j` of `target`, defined when the target modulus
    /// divides this element's modulus.
    pub fn rho(&self, target: &Arc<FiltrationChain>, j: usize) -> Result<Self> {
        let source = self.chain.modulus(self.level)?;
        let dest = target.modulus(j)?;
        if !source.is_divisible_by(&dest) {
            return Err(Error::NotCoarser);
        }
        reduce(&self.rep, target, j)
    }

    pub fn to_json(&self) -> TruncatedElementJson {
        TruncatedElementJson {
            chain: self.chain.kind().clone(),
            level: self.level,
            rep: self.rep.clone(),
        }
    }

    /// Rebuild from JSON, re-reducing the representative.
    pub fn from_json(js: TruncatedElementJson) -> Result<Self> {
        let chain = FiltrationChain::new(js.chain)?;
        reduce(&js.rep, &chain, js.level)
    }
}

/// Wire form: `{chain: {kind, params}, level, rep: [coeff strings]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncatedElementJson {
    pub chain: ChainKind,
    pub level: usize,
    pub rep: IntPolynomial,
}
