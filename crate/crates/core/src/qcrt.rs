//! Chinese-remainder structure of `Q[q]^S`.
//!
//! Over `Q` the cyclotomic powers `Phi_n^lambda(n)` are pairwise coprime, so
//! every level of the completion splits as a product. This is what makes
//! restriction maps over `Q` non-injective, in contrast with `Z`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::cyclotomic::{euler_phi, phi};
use crate::error::{Error, Result};
use crate::polyring::{IntPolynomial, RatPolynomial};

/// Exponents `lambda(n) >= 1` on a finite nonempty support.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(BTreeMap<u64, u32>);

impl ExponentVector {
    pub fn new(entries: impl IntoIterator<Item = (u64, u32)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (n, e) in entries {
            if n == 0 || e == 0 {
                return Err(Error::InvalidInput(format!("bad exponent entry {n}:{e}")));
            }
            if map.insert(n, e).is_some() {
                return Err(Error::InvalidInput(format!("index {n} listed twice")));
            }
        }
        if map.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(ExponentVector(map))
    }

    /// Parse `1:2,2:2`.
    pub fn parse(s: &str) -> Result<Self> {
        let entries = s
            .split(',')
            .map(|part| {
                let (n, e) = part
                    .split_once(':')
                    .ok_or_else(|| Error::InvalidInput(format!("expected n:exponent, got {part:?}")))?;
                let n = n.trim().parse().map_err(|_| Error::InvalidInput(format!("bad index {n:?}")))?;
                let e = e.trim().parse().map_err(|_| Error::InvalidInput(format!("bad exponent {e:?}")))?;
                Ok((n, e))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }

    pub fn entries(&self) -> &BTreeMap<u64, u32> {
        &self.0
    }

    /// `Phi_n^lambda(n)`
    pub fn component_modulus(n: u64, e: u32) -> IntPolynomial {
        phi(n).pow(e)
    }

    /// `prod_n Phi_n^lambda(n)`
    pub fn modulus(&self) -> IntPolynomial {
        self.0
            .iter()
            .fold(IntPolynomial::one(), |acc, (&n, &e)| &acc * &Self::component_modulus(n, e))
    }

    pub fn component_degree(n: u64, e: u32) -> usize {
        euler_phi(n) as usize * e as usize
    }
}

/// Residues modulo each `Phi_n^lambda(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrtComponents(pub BTreeMap<u64, RatPolynomial>);

pub fn crt_split(f: &RatPolynomial, lambda: &ExponentVector) -> CrtComponents {
    CrtComponents(
        lambda
            .entries()
            .iter()
            .map(|(&n, &e)| {
                let m = ExponentVector::component_modulus(n, e).to_rational();
                (n, f.rem(&m).expect("monic modulus"))
            })
            .collect(),
    )
}

type IdempotentTable = Arc<BTreeMap<u64, RatPolynomial>>;

fn idempotent_cache() -> &'static RwLock<HashMap<ExponentVector, IdempotentTable>> {
    static CACHE: OnceLock<RwLock<HashMap<ExponentVector, IdempotentTable>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The orthogonal idempotents `e_n` with `e_n = 1 mod Phi_n^lambda(n)` and
/// `e_n = 0` modulo every other component.
pub fn idempotents(lambda: &ExponentVector) -> Result<IdempotentTable> {
    if let Some(hit) = idempotent_cache().read().unwrap().get(lambda) {
        return Ok(hit.clone());
    }
    let total = lambda.modulus().to_rational();
    let mut table = BTreeMap::new();
    for (&n, &e) in lambda.entries() {
        let own = ExponentVector::component_modulus(n, e).to_rational();
        let cofactor = total
            .exact_quotient(&own)
            .ok_or_else(|| Error::Internal("component modulus does not divide total".into()))?;
        let (g, s, _) = RatPolynomial::ext_gcd(&cofactor, &own);
        if !g.is_one() {
            return Err(Error::Internal(format!("component {n} is not coprime to the rest")));
        }
        table.insert(n, (&cofactor * &s).rem(&total)?);
    }
    let table = Arc::new(table);
    idempotent_cache().write().unwrap().insert(lambda.clone(), table.clone());
    Ok(table)
}

/// The unique representative of degree `< deg modulus(lambda)` with the
/// given residues.
pub fn crt_reconstruct(c: &CrtComponents, lambda: &ExponentVector) -> Result<RatPolynomial> {
    for n in c.0.keys() {
        if !lambda.entries().contains_key(n) {
            return Err(Error::InvalidInput(format!("component {n} outside the support")));
        }
    }
    let table = idempotents(lambda)?;
    let total = lambda.modulus().to_rational();
    let mut acc = RatPolynomial::zero();
    for (&n, &e) in lambda.entries() {
        let Some(comp) = c.0.get(&n) else { continue };
        let bound = ExponentVector::component_degree(n, e);
        if let Some(degree) = comp.degree().finite() {
            if degree >= bound {
                return Err(Error::DegreeViolation { n, degree, bound });
            }
        }
        acc = &acc + &(comp * &table[&n]);
    }
    acc.rem(&total)
}

/// Certificate that `rho: Q[q]^{1,2} -> Q[q]^{1}` has a nonzero kernel
/// element at level `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelWitness {
    pub level: u32,
    pub witness: RatPolynomial,
    /// `A` with `witness = (q - 1)^N A`
    pub vanishing_quotient: Option<RatPolynomial>,
    /// `B` with `witness - 1 = (q + 1)^N B`
    pub unit_quotient: Option<RatPolynomial>,
}

impl KernelWitness {
    pub fn vanishes_at_one(&self) -> bool {
        self.vanishing_quotient.is_some()
    }

    pub fn one_at_minus_one(&self) -> bool {
        self.unit_quotient.is_some()
    }

    pub fn is_valid(&self) -> bool {
        !self.witness.is_zero() && self.vanishes_at_one() && self.one_at_minus_one()
    }
}

/// `e_N = 0 mod (q-1)^N`, `e_N = 1 mod (q+1)^N`.
pub fn rho_q_kernel_witness(level: u32) -> Result<KernelWitness> {
    if level == 0 {
        return Err(Error::InvalidInput("level must be at least 1".into()));
    }
    let lambda = ExponentVector::new([(1, level), (2, level)])?;
    let comps = CrtComponents(BTreeMap::from([
        (1, RatPolynomial::zero()),
        (2, RatPolynomial::one()),
    ]));
    let witness = crt_reconstruct(&comps, &lambda)?;
    let m1 = ExponentVector::component_modulus(1, level).to_rational();
    let m2 = ExponentVector::component_modulus(2, level).to_rational();
    Ok(KernelWitness {
        level,
        vanishing_quotient: witness.exact_quotient(&m1),
        unit_quotient: (&witness - &RatPolynomial::one()).exact_quotient(&m2),
        witness,
    })
}

/// Exhaustive search for an integer polynomial of degree `<= degree` with
/// coefficients in `[-bound, bound]` satisfying the level-`N` kernel
/// congruences. A `None` is a finite certificate over that box only.
pub fn integer_witness_search(level: u32, degree: usize, bound: i64) -> Option<IntPolynomial> {
    let m1 = ExponentVector::component_modulus(1, level);
    let m2 = ExponentVector::component_modulus(2, level);
    let width = (2 * bound + 1) as u64;
    let total = width.checked_pow(degree as u32 + 1)?;
    for idx in 0..total {
        let mut rest = idx;
        let coeffs: Vec<BigInt> = (0..=degree)
            .map(|_| {
                let c = (rest % width) as i64 - bound;
                rest /= width;
                BigInt::from(c)
            })
            .collect();
        let f = IntPolynomial::new(coeffs);
        if f.is_zero() {
            continue;
        }
        if f.is_divisible_by(&m1) && (&f - &IntPolynomial::one()).is_divisible_by(&m2) {
            return Some(f);
        }
    }
    None
}

/// Whether some coefficient of `f` is not an integer.
pub fn has_non_integral_coefficient(f: &RatPolynomial) -> bool {
    f.coeffs().iter().any(|c: &BigRational| !c.is_integer())
}
