use std::fmt;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::phi;
use crate::error::{Error, Result};
use crate::polyring::IntPolynomial;

/// Order in which cyclotomic factors are multiplied into a product chain.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "enumeration", rename_all = "snake_case")]
pub enum ProductEnumeration {
    /// Cycle through a finite index set in increasing order, forever.
    RoundRobin { set: Vec<u64> },
    /// A caller-supplied prefix of an enumeration of `S x N`; the chain is
    /// only defined up to level `sequence.len()`.
    Explicit { sequence: Vec<u64> },
}

impl ProductEnumeration {
    fn factor_index(&self, k: usize) -> Option<u64> {
        match self {
            ProductEnumeration::RoundRobin { set } => Some(set[k % set.len()]),
            ProductEnumeration::Explicit { sequence } => sequence.get(k).copied(),
        }
    }
}

/// Which cofinal divisibility chain `g_0 | g_1 | ...` a completion is
/// represented by.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "params", rename_all = "snake_case")]
pub enum ChainKind {
    /// `g_k = (-1)^k (q)_k`, the Habiro filtration with positive leading
    /// coefficients.
    Pochhammer {},
    /// `g_k = f^k`
    Adic { f: IntPolynomial },
    /// `g_k` is the product of `Phi_{e_0} ... Phi_{e_(k-1)}`.
    Product(ProductEnumeration),
}

/// A divisibility chain of unit-leading moduli with `g_0 = 1`, generated
/// lazily and memoized.
pub struct FiltrationChain {
    kind: ChainKind,
    moduli: RwLock<Vec<Arc<IntPolynomial>>>,
}

impl FiltrationChain {
    pub fn new(kind: ChainKind) -> Result<Arc<Self>> {
        match &kind {
            ChainKind::Pochhammer {} => {}
            ChainKind::Adic { f } => {
                if !f.is_unit_leading() || f.degree().finite() == Some(0) {
                    return Err(Error::InvalidInput(format!(
                        "adic chain generator {f} must be nonconstant with unit leading coefficient"
                    )));
                }
            }
            ChainKind::Product(e) => {
                let idx = match e {
                    ProductEnumeration::RoundRobin { set } => {
                        if set.is_empty() {
                            return Err(Error::EmptySet);
                        }
                        set
                    }
                    ProductEnumeration::Explicit { sequence } => sequence,
                };
                if idx.contains(&0) {
                    return Err(Error::InvalidInput("cyclotomic indices must be positive".into()));
                }
            }
        }
        let kind = match kind {
            ChainKind::Product(ProductEnumeration::RoundRobin { mut set }) => {
                set.sort_unstable();
                set.dedup();
                ChainKind::Product(ProductEnumeration::RoundRobin { set })
            }
            other => other,
        };
        Ok(Arc::new(FiltrationChain {
            kind,
            moduli: RwLock::new(vec![Arc::new(IntPolynomial::one())]),
        }))
    }

    pub fn pochhammer() -> Arc<Self> {
        Self::new(ChainKind::Pochhammer {}).expect("always valid")
    }

    pub fn adic(f: IntPolynomial) -> Result<Arc<Self>> {
        Self::new(ChainKind::Adic { f })
    }

    /// Round-robin product chain over a finite index set.
    pub fn product(set: Vec<u64>) -> Result<Arc<Self>> {
        Self::new(ChainKind::Product(ProductEnumeration::RoundRobin { set }))
    }

    pub fn product_explicit(sequence: Vec<u64>) -> Result<Arc<Self>> {
        Self::new(ChainKind::Product(ProductEnumeration::Explicit { sequence }))
    }

    pub fn kind(&self) -> &ChainKind {
        &self.kind
    }

    pub fn is_pochhammer(&self) -> bool {
        matches!(self.kind, ChainKind::Pochhammer {})
    }

    /// Highest level at which the chain is defined, if finite.
    pub fn max_level(&self) -> Option<usize> {
        match &self.kind {
            ChainKind::Product(ProductEnumeration::Explicit { sequence }) => Some(sequence.len()),
            _ => None,
        }
    }

    /// The factor `g_(k+1) / g_k`.
    pub fn step_factor(&self, k: usize) -> Result<IntPolynomial> {
        match &self.kind {
            ChainKind::Pochhammer {} => {
                Ok(IntPolynomial::monomial(BigInt::one(), k + 1) - IntPolynomial::one())
            }
            ChainKind::Adic { f } => Ok(f.clone()),
            ChainKind::Product(e) => e.factor_index(k).map(|n| (*phi(n)).clone()).ok_or_else(|| {
                Error::InsufficientPrecision(format!(
                    "explicit product chain has only {} levels, level {} requested",
                    self.max_level().unwrap_or(0),
                    k + 1
                ))
            }),
        }
    }

    /// The modulus `g_k`.
    pub fn modulus(&self, k: usize) -> Result<Arc<IntPolynomial>> {
        if let Some(g) = self.moduli.read().unwrap().get(k) {
            return Ok(g.clone());
        }
        let mut moduli = self.moduli.write().unwrap();
        while moduli.len() <= k {
            let i = moduli.len() - 1;
            let step = self.step_factor(i)?;
            debug_assert!(step.is_unit_leading());
            let next = moduli[i].as_ref() * &step;
            moduli.push(Arc::new(next));
        }
        Ok(moduli[k].clone())
    }

    /// Degree of `g_k`.
    pub fn modulus_degree(&self, k: usize) -> Result<usize> {
        Ok(self.modulus(k)?.degree().finite().unwrap_or(0))
    }

    /// Multiplicity of `Phi_n` in `g_k`, by repeated exact division.
    pub fn phi_multiplicity(&self, k: usize, n: u64) -> Result<usize> {
        let f = phi(n);
        let mut g = (*self.modulus(k)?).clone();
        let mut mult = 0;
        while let Some(next) = g.exact_quotient(&f) {
            g = next;
            mult += 1;
        }
        Ok(mult)
    }

    pub fn label(&self) -> String {
        match &self.kind {
            ChainKind::Pochhammer {} => "pochhammer".into(),
            ChainKind::Adic { f } => format!("adic({f})"),
            ChainKind::Product(ProductEnumeration::RoundRobin { set }) => format!("product{set:?}"),
            ChainKind::Product(ProductEnumeration::Explicit { sequence }) => {
                format!("product-explicit{sequence:?}")
            }
        }
    }

    pub fn same_chain(&self, other: &FiltrationChain) -> bool {
        self.kind == other.kind
    }
}

impl fmt::Debug for FiltrationChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiltrationChain({})", self.label())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::pochhammer;

    #[test]
    fn pochhammer_chain_is_sign_normalized() {
        let c = FiltrationChain::pochhammer();
        for k in 0..8 {
            let g = c.modulus(k).unwrap();
            assert_eq!(g.leading(), Some(&BigInt::one()));
            let pk = pochhammer(k as u64);
            assert!(*g == pk || *g == -pk);
        }
    }

    #[test]
    fn moduli_divide_upwards() {
        let chains = [
            FiltrationChain::pochhammer(),
            FiltrationChain::adic((*phi(3)).clone()).unwrap(),
            FiltrationChain::product(vec![4, 1, 6]).unwrap(),
        ];
        for c in &chains {
            for k in 0..7 {
                assert!(c.modulus(k + 1).unwrap().is_divisible_by(&c.modulus(k).unwrap()));
            }
        }
    }

    #[test]
    fn round_robin_counts() {
        let c = FiltrationChain::product(vec![2, 1]).unwrap();
        // factors Phi_1, Phi_2, Phi_1, Phi_2, Phi_1
        assert_eq!(c.phi_multiplicity(5, 1).unwrap(), 3);
        assert_eq!(c.phi_multiplicity(5, 2).unwrap(), 2);
        assert_eq!(c.phi_multiplicity(5, 3).unwrap(), 0);
    }

    #[test]
    fn explicit_chain_is_finite() {
        let c = FiltrationChain::product_explicit(vec![1, 1, 3]).unwrap();
        assert!(c.modulus(3).is_ok());
        assert!(matches!(c.modulus(4), Err(Error::InsufficientPrecision(_))));
    }

    #[test]
    fn rejects_bad_generators() {
        assert!(FiltrationChain::adic(IntPolynomial::from_i64s(&[1, 2])).is_err());
        assert!(FiltrationChain::adic(IntPolynomial::from_i64s(&[1])).is_err());
        assert_eq!(FiltrationChain::product(vec![]).unwrap_err(), Error::EmptySet);
    }

    #[test]
    fn chain_json() {
        let k = ChainKind::Pochhammer {};
        assert_eq!(serde_json::to_string(&k).unwrap(), r#"{"kind":"pochhammer","params":{}}"#);
        let k = ChainKind::Product(ProductEnumeration::RoundRobin { set: vec![1, 2] });
        let s = serde_json::to_string(&k).unwrap();
        assert_eq!(s, r#"{"kind":"product","params":{"enumeration":"round_robin","set":[1,2]}}"#);
        assert_eq!(serde_json::from_str::<ChainKind>(&s).unwrap(), k);
    }
}
