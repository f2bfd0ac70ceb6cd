use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::polyring::{subresultant_bezout, IntPolynomial};

/// `gamma_m = 1 - q + q^2 - ... + q^(m-1)` for odd `m >= 3`.
pub fn alternating_unit(m: u64) -> Result<IntPolynomial> {
    if m < 3 || m % 2 == 0 {
        return Err(Error::EvenM(m));
    }
    Ok(IntPolynomial::new(
        (0..m)
            .map(|i| if i % 2 == 0 { BigInt::one() } else { -BigInt::one() })
            .collect(),
    ))
}

/// Inverse of `u` modulo a unit-leading `modulus`, via an integral Bézout
/// certificate. `None` unless the resultant is `+1` or `-1`.
pub fn unit_inverse_mod(u: &IntPolynomial, modulus: &IntPolynomial) -> Result<Option<IntPolynomial>> {
    if !modulus.is_unit_leading() {
        return match modulus.leading() {
            None => Err(Error::DivisionByZeroPolynomial),
            Some(c) => Err(Error::NonUnitLeadingCoefficient(c.to_string())),
        };
    }
    if modulus.degree().finite() == Some(0) {
        // the quotient ring is zero
        return Ok(Some(IntPolynomial::zero()));
    }
    let reduced = u.rem(modulus)?;
    if reduced.is_zero() {
        return Ok(None);
    }
    let cert = subresultant_bezout(&reduced, modulus)?;
    if !cert.resultant.abs().is_one() {
        return Ok(None);
    }
    let w = cert.u.scale(&cert.resultant).rem(modulus)?;
    debug_assert!((&w * &reduced).rem(modulus)?.is_one());
    Ok(Some(w))
}
