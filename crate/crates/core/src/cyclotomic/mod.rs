//! Cyclotomic polynomials, q-Pochhammer symbols and the index graph
//! `Gamma_R(S)` that governs how cyclotomic moduli control each other.

mod graph;

use std::collections::{BTreeMap, HashMap};
use std::num::NonZeroU64;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::polyring::{is_prime, poly_mod_prime, subresultant_bezout, BezoutCertificate, IntPolynomial};

pub use graph::{connected_components, is_adjacent, AdjacencyGraph, RingDescriptor, Separation};

fn phi_cache() -> &'static RwLock<HashMap<u64, Arc<IntPolynomial>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<IntPolynomial>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Prime factorization of `n` as `(p, exponent)` pairs, by trial division.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// The `n`-th cyclotomic polynomial, computed as `(q^n - 1) / prod_{d | n, d < n} Phi_d`
/// and memoized process-wide.
pub fn cyclotomic_poly(n: NonZeroU64) -> Arc<IntPolynomial> {
    let n = n.get();
    if let Some(hit) = phi_cache().read().unwrap().get(&n) {
        return hit.clone();
    }
    let mut f = IntPolynomial::monomial(BigInt::one(), n as usize) - IntPolynomial::one();
    for d in divisors(n) {
        if d == n {
            break;
        }
        let (quot, rem) = f.divmod(&phi(d)).expect("cyclotomic polynomials are monic");
        debug_assert!(rem.is_zero());
        f = quot;
    }
    let f = Arc::new(f);
    phi_cache().write().unwrap().entry(n).or_insert(f).clone()
}

/// Shorthand for [`cyclotomic_poly`] with a plain integer index.
///
/// # Panics
/// If `n == 0`.
pub fn phi(n: u64) -> Arc<IntPolynomial> {
    cyclotomic_poly(NonZeroU64::new(n).expect("cyclotomic index must be positive"))
}

/// Snapshot of the memo table, for persistence.
pub fn cache_snapshot() -> BTreeMap<u64, IntPolynomial> {
    phi_cache()
        .read()
        .unwrap()
        .iter()
        .map(|(&n, p)| (n, (**p).clone()))
        .collect()
}

/// Seed the memo table from persisted entries. Every entry is checked
/// (degree `phi(n)`, exact divisor of `q^n - 1`) before it is accepted;
/// returns the number of accepted entries.
pub fn preload_cache(entries: BTreeMap<u64, IntPolynomial>) -> usize {
    let mut accepted = 0;
    for (n, poly) in entries {
        if n == 0 || poly.degree().finite() != Some(euler_phi(n) as usize) || !poly.is_unit_leading() {
            continue;
        }
        let full = IntPolynomial::monomial(BigInt::one(), n as usize) - IntPolynomial::one();
        if !full.is_divisible_by(&poly) {
            continue;
        }
        phi_cache().write().unwrap().entry(n).or_insert_with(|| Arc::new(poly));
        accepted += 1;
    }
    accepted
}

/// `(q)_n = (1 - q)(1 - q^2)...(1 - q^n)`, with `(q)_0 = 1`.
pub fn pochhammer(n: u64) -> IntPolynomial {
    (1..=n).fold(IntPolynomial::one(), |acc, k| {
        &acc * &(IntPolynomial::one() - IntPolynomial::monomial(BigInt::one(), k as usize))
    })
}

/// The quantity `c_{m,n}`: zero on the diagonal, the prime `p` when
/// `n/m = p^j` with `j != 0`, and one otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CValue {
    Zero,
    One,
    Prime(u64),
}

impl CValue {
    pub fn as_integer(self) -> u64 {
        match self {
            CValue::Zero => 0,
            CValue::One => 1,
            CValue::Prime(p) => p,
        }
    }
}

pub fn c_value(m: u64, n: u64) -> CValue {
    assert!(m >= 1 && n >= 1, "indices must be positive");
    if m == n {
        return CValue::Zero;
    }
    let g = num_integer::gcd(m, n);
    let (a, b) = (m / g, n / g);
    let other = match (a, b) {
        (1, x) | (x, 1) => x,
        _ => return CValue::One,
    };
    match factorize(other).as_slice() {
        [(p, _)] => CValue::Prime(*p),
        _ => CValue::One,
    }
}

/// Outcome of checking `Phi_{p^e n} = Phi_n^d (mod p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceReport {
    /// `deg Phi_{p^e n} / deg Phi_n`
    pub d: u64,
    /// whether the congruence holds coefficientwise mod `p`
    pub holds: bool,
    /// `(p-1) p^(e-1)` if `p` does not divide `n`, `p^e` otherwise
    pub closed_form_d: u64,
}

impl CongruenceReport {
    pub fn closed_form_matches(&self) -> bool {
        self.d == self.closed_form_d
    }
}

pub fn congruence_check(n: u64, p: u64, e: u32) -> Result<CongruenceReport> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 || e == 0 {
        return Err(Error::InvalidInput("n and e must be positive".into()));
    }
    let big = p.pow(e) * n;
    let d = euler_phi(big) / euler_phi(n);
    let lhs = poly_mod_prime(&phi(big), p)?;
    let rhs = poly_mod_prime(&phi(n), p)?.pow(d);
    let closed_form_d = if n % p == 0 { p.pow(e) } else { (p - 1) * p.pow(e - 1) };
    Ok(CongruenceReport { d, holds: lhs == rhs, closed_form_d })
}

/// Whether `Phi_m` and `Phi_n` generate the unit ideal of `Z[q]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coprimality {
    /// `u Phi_m + v Phi_n = 1`
    Unit { u: IntPolynomial, v: IntPolynomial },
    /// The resultant is `p^exponent`; the ideal contains a power of `p`.
    CommonPrime { p: u64, resultant: BigInt, exponent: u32 },
}

pub fn cyclotomic_coprimality(m: u64, n: u64) -> Result<Coprimality> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidInput("indices must be positive".into()));
    }
    if m == n {
        return Err(Error::EqualIndices(m));
    }
    let (fm, fn_) = (phi(m), phi(n));
    let BezoutCertificate { resultant, u, v } = subresultant_bezout(&fm, &fn_)?;
    match c_value(m, n) {
        CValue::One => {
            let sign = if resultant.is_one() {
                BigInt::one()
            } else if (-&resultant).is_one() {
                -BigInt::one()
            } else {
                return Err(Error::Internal(format!(
                    "Res(Phi_{m}, Phi_{n}) = {resultant}, expected a unit"
                )));
            };
            Ok(Coprimality::Unit { u: u.scale(&sign), v: v.scale(&sign) })
        }
        CValue::Prime(p) => {
            let pb = BigInt::from(p);
            let mut rest = resultant.abs();
            let mut exponent = 0;
            while !rest.is_zero() && (&rest % &pb).is_zero() {
                rest /= &pb;
                exponent += 1;
            }
            if !rest.is_one() || exponent == 0 {
                return Err(Error::Internal(format!(
                    "Res(Phi_{m}, Phi_{n}) = {resultant} is not a positive power of {p}"
                )));
            }
            Ok(Coprimality::CommonPrime { p, resultant, exponent })
        }
        CValue::Zero => unreachable!("m != n"),
    }
}

/// Smallest `m` in `0..=max_power` with `f^m` lying in `(g) + c Z[q]`, i.e.
/// `f^m mod g` vanishing coefficientwise modulo `c` (`c = 0` means exactly).
pub fn arrow_witness(
    f: &IntPolynomial,
    g: &IntPolynomial,
    c: &BigInt,
    max_power: u32,
) -> Result<Option<u32>> {
    if c.is_negative() {
        return Err(Error::InvalidInput("c must be nonnegative".into()));
    }
    let f_red = f.rem(g)?;
    let mut acc = IntPolynomial::one().rem(g)?;
    for m in 0..=max_power {
        if acc.reduce_coefficients(c).is_zero() {
            return Ok(Some(m));
        }
        // keep coefficients small; reduction mod c commutes with reduction mod g
        // because g has unit leading coefficient
        acc = (&acc * &f_red).rem(g)?.reduce_coefficients(c);
    }
    Ok(None)
}

/// [`arrow_witness`] with the default power bound `deg g` (at least 1).
pub fn arrow_witness_default(f: &IntPolynomial, g: &IntPolynomial, c: &BigInt) -> Result<Option<u32>> {
    let bound = g.degree().finite().unwrap_or(0).max(1) as u32;
    arrow_witness(f, g, c, bound)
}
