//! Resultants with integral Bézout cofactors.
//!
//! The resultant is computed by the subresultant pseudo-remainder sequence,
//! tracking for every remainder `S` a pair of cofactors with
//! `S = U a + V b`. All divisions in the sequence are exact over `Z`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Coeff, Degree, IntPolynomial};
use crate::error::{Error, Result};

/// `u * a + v * b = resultant`, all over `Z`.
///
/// The resultant carries the sign of the Sylvester determinant with the rows
/// of `a` above the rows of `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BezoutCertificate {
    pub resultant: BigInt,
    pub u: IntPolynomial,
    pub v: IntPolynomial,
}

impl BezoutCertificate {
    /// Re-check `u a + v b = resultant` by exact multiplication.
    pub fn verify(&self, a: &IntPolynomial, b: &IntPolynomial) -> bool {
        &(&self.u * a) + &(&self.v * b) == IntPolynomial::constant(self.resultant.clone())
    }
}

fn deg(p: &IntPolynomial) -> usize {
    p.degree().finite().expect("nonzero polynomial")
}

/// `lc(b)^(da - db + 1) * a = quot * b + rem`.
fn pseudo_divmod(a: &IntPolynomial, b: &IntPolynomial) -> (IntPolynomial, IntPolynomial) {
    let lb = b.leading().expect("nonzero divisor").clone();
    let db = deg(b);
    let mut rem = a.clone();
    let mut quot = IntPolynomial::zero();
    let mut steps = deg(a) + 1 - db;
    while rem.degree() >= Degree::Finite(db) {
        let dr = deg(&rem);
        let lr = rem.leading().unwrap().clone();
        let mono = IntPolynomial::monomial(lr, dr - db);
        quot = &quot.scale(&lb) + &mono;
        rem = &rem.scale(&lb) - &(&mono * b);
        steps -= 1;
    }
    let f = num_traits::pow(lb, steps);
    (quot.scale(&f), rem.scale(&f))
}

fn exact(p: &IntPolynomial, d: &BigInt) -> Result<IntPolynomial> {
    p.exact_scalar_div(d)
        .ok_or_else(|| Error::Internal("inexact division in subresultant sequence".into()))
}

/// Resultant of `a` and `b` together with integral cofactors.
///
/// If one operand is zero (and the other is not) the resultant is `0` with
/// zero cofactors. Two nonzero constants have resultant `1` but admit no
/// polynomial certificate in general, so that case is rejected.
pub fn subresultant_bezout(a: &IntPolynomial, b: &IntPolynomial) -> Result<BezoutCertificate> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    if a.is_zero() || b.is_zero() {
        return Ok(BezoutCertificate {
            resultant: BigInt::zero(),
            u: IntPolynomial::zero(),
            v: IntPolynomial::zero(),
        });
    }
    let (da, db) = (deg(a), deg(b));
    if da == 0 && db == 0 {
        return Err(Error::BothConstant);
    }
    if da < db {
        let swapped = subresultant_bezout(b, a)?;
        let sign = if (da * db) % 2 == 1 { -BigInt::one() } else { BigInt::one() };
        return Ok(BezoutCertificate {
            resultant: &swapped.resultant * &sign,
            u: swapped.v.scale(&sign),
            v: swapped.u.scale(&sign),
        });
    }
    if db == 0 {
        // Res(a, c) = c^deg(a)
        let c = b.coeffs()[0].clone();
        return Ok(BezoutCertificate {
            resultant: num_traits::pow(c.clone(), da),
            u: IntPolynomial::zero(),
            v: IntPolynomial::constant(num_traits::pow(c, da - 1)),
        });
    }

    let (mut ra, mut ua, mut va) = (a.clone(), IntPolynomial::one(), IntPolynomial::zero());
    let (mut rb, mut ub, mut vb) = (b.clone(), IntPolynomial::zero(), IntPolynomial::one());
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    let mut sign = BigInt::one();
    loop {
        let (dra, drb) = (deg(&ra), deg(&rb));
        let delta = dra - drb;
        if dra % 2 == 1 && drb % 2 == 1 {
            sign = -sign;
        }
        let (quot, rem) = pseudo_divmod(&ra, &rb);
        let lead_pow = num_traits::pow(rb.leading().unwrap().clone(), delta + 1);
        let urem = &ua.scale(&lead_pow) - &(&quot * &ub);
        let vrem = &va.scale(&lead_pow) - &(&quot * &vb);
        let divisor = &g * num_traits::pow(h.clone(), delta);

        ra = std::mem::replace(&mut rb, exact(&rem, &divisor)?);
        ua = std::mem::replace(&mut ub, exact(&urem, &divisor)?);
        va = std::mem::replace(&mut vb, exact(&vrem, &divisor)?);

        g = ra.leading().unwrap().clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => num_traits::pow(g.clone(), delta)
                .exact_div(&num_traits::pow(h.clone(), delta - 1))
                .ok_or_else(|| Error::Internal("inexact subresultant scaling".into()))?,
        };

        if rb.is_zero() {
            // nontrivial common factor
            return Ok(BezoutCertificate {
                resultant: BigInt::zero(),
                u: IntPolynomial::zero(),
                v: IntPolynomial::zero(),
            });
        }
        if deg(&rb) == 0 {
            // rb = ub a + vb b is a nonzero constant; the resultant is
            // sign * rb^k / h^(k-1) with k = deg(ra).
            let k = deg(&ra);
            let lb = rb.coeffs()[0].clone();
            let num = num_traits::pow(lb.clone(), k - 1);
            let den = num_traits::pow(h.clone(), k - 1);
            let resultant = (&sign * &num * &lb)
                .exact_div(&den)
                .ok_or_else(|| Error::Internal("inexact final resultant scaling".into()))?;
            let scale = &sign * &num;
            let u = exact(&ub.scale(&scale), &den)?;
            let v = exact(&vb.scale(&scale), &den)?;
            let cert = BezoutCertificate { resultant, u, v };
            debug_assert!(cert.verify(a, b));
            return Ok(cert);
        }
    }
}
