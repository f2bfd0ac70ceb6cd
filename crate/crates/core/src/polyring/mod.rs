//! Dense univariate polynomials over exact coefficient domains.
//!
//! Coefficients are stored little-endian: `coeffs[i]` is the coefficient of
//! `q^i`. The zero polynomial is the empty vector, and every constructor
//! strips trailing zeros so that equality is structural.

mod modp;
mod resultant;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use modp::{is_prime, poly_mod_prime, ModPPolynomial};
pub use resultant::{subresultant_bezout, BezoutCertificate};

/// Degree of a polynomial, with the zero polynomial at `NegInfinity`.
///
/// The derived ordering places `NegInfinity` below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Exact coefficient domain for [`Poly`].
pub trait Coeff: Clone + fmt::Debug + PartialEq + Zero + One + Neg<Output = Self> {
    fn mul_ref(&self, other: &Self) -> Self;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    /// Multiplicative inverse if `self` is a unit of the domain.
    fn unit_inverse(&self) -> Option<Self>;
    /// `self / d` when the quotient exists in the domain.
    fn exact_div(&self, d: &Self) -> Option<Self>;
    fn to_decimal(&self) -> String;
    fn parse_decimal(s: &str) -> Option<Self>;
}

impl Coeff for BigInt {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn unit_inverse(&self) -> Option<Self> {
        if self.is_one() || (-self).is_one() {
            Some(self.clone())
        } else {
            None
        }
    }
    fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }
    fn to_decimal(&self) -> String {
        self.to_string()
    }
    fn parse_decimal(s: &str) -> Option<Self> {
        s.trim().parse().ok()
    }
}

impl Coeff for BigRational {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn unit_inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
    fn exact_div(&self, d: &Self) -> Option<Self> {
        (!d.is_zero()).then(|| self / d)
    }
    fn to_decimal(&self) -> String {
        if self.denom().is_one() {
            self.numer().to_string()
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }
    fn parse_decimal(s: &str) -> Option<Self> {
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().ok()?;
                let d: BigInt = d.trim().parse().ok()?;
                (!d.is_zero()).then(|| BigRational::new(n, d))
            }
            None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
        }
    }
}

/// A dense polynomial in `q` with coefficients in `T`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

pub type IntPolynomial = Poly<BigInt>;
pub type RatPolynomial = Poly<BigRational>;

impl<T: Coeff> Poly<T> {
    pub fn new(coeffs: Vec<T>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![T::one()] }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * q^k`
    pub fn monomial(c: T, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    /// Number of stored coefficients, i.e. `degree + 1`, or 0 for zero.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.mul_ref(c)).collect())
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc.mul_ref(x).add_ref(c))
    }

    /// Division with remainder by a divisor whose leading coefficient is a
    /// unit. Returns `(quotient, remainder)` with `deg remainder < deg g`.
    pub fn divmod(&self, g: &Self) -> Result<(Self, Self)> {
        let lead = g.leading().ok_or(Error::DivisionByZeroPolynomial)?;
        let inv = lead
            .unit_inverse()
            .ok_or_else(|| Error::NonUnitLeadingCoefficient(lead.to_decimal()))?;
        let dg = g.coeffs.len() - 1;
        if self.coeffs.len() <= dg {
            return Ok((Self::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); rem.len() - dg];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dg];
            if top.is_zero() {
                continue;
            }
            let c = top.mul_ref(&inv);
            for (j, gc) in g.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].sub_ref(&c.mul_ref(gc));
            }
            quot[i] = c;
        }
        rem.truncate(dg);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn rem(&self, g: &Self) -> Result<Self> {
        // Fast path: already reduced.
        if g.degree() > self.degree() && g.leading().is_some() {
            let lead = g.leading().unwrap();
            if lead.unit_inverse().is_none() {
                return Err(Error::NonUnitLeadingCoefficient(lead.to_decimal()));
            }
            return Ok(self.clone());
        }
        self.divmod(g).map(|(_, r)| r)
    }

    /// The quotient `self / g` if `g` divides `self` exactly in `T[q]`.
    ///
    /// Unlike [`Poly::divmod`] this accepts any nonzero leading coefficient;
    /// a non-exact coefficient division simply means "does not divide".
    pub fn exact_quotient(&self, g: &Self) -> Option<Self> {
        let lead = g.leading()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dg = g.coeffs.len() - 1;
        if self.coeffs.len() <= dg {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); rem.len() - dg];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dg];
            if top.is_zero() {
                continue;
            }
            let c = top.exact_div(lead)?;
            for (j, gc) in g.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].sub_ref(&c.mul_ref(gc));
            }
            quot[i] = c;
        }
        rem.iter().all(|c| c.is_zero()).then(|| Self::new(quot))
    }

    /// Whether `g` divides `self` exactly.
    pub fn is_divisible_by(&self, g: &Self) -> bool {
        self.exact_quotient(g).is_some()
    }

    /// Exact coefficientwise division by a scalar, `None` if any coefficient
    /// is not divisible.
    pub fn exact_scalar_div(&self, d: &T) -> Option<Self> {
        self.coeffs
            .iter()
            .map(|c| c.exact_div(d))
            .collect::<Option<Vec<_>>>()
            .map(Self::new)
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl IntPolynomial {
    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn to_rational(&self) -> RatPolynomial {
        self.map(|c| BigRational::from_integer(c.clone()))
    }

    /// Whether the leading coefficient is `+1` or `-1`.
    pub fn is_unit_leading(&self) -> bool {
        self.leading().is_some_and(|c| c.abs().is_one())
    }

    /// Normalize the sign so that the leading coefficient is positive.
    pub fn with_positive_leading(self) -> Self {
        match self.leading() {
            Some(c) if c.is_negative() => -self,
            _ => self,
        }
    }

    /// Coefficientwise reduction modulo an integer `c`, with `c = 0` meaning
    /// no reduction. Results are in `[0, |c|)`.
    pub fn reduce_coefficients(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return self.clone();
        }
        let m = c.abs();
        self.map(|x| x.mod_floor(&m))
    }

    /// Content: the nonnegative gcd of all coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }
}

impl RatPolynomial {
    pub fn from_ratios(cs: &[(i64, i64)]) -> Self {
        Self::new(
            cs.iter()
                .map(|&(n, d)| BigRational::new(n.into(), d.into()))
                .collect(),
        )
    }

    /// The integer polynomial with the same coefficients, if they are all
    /// integral.
    pub fn to_integer(&self) -> Option<IntPolynomial> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntPolynomial::new)
    }

    /// Extended Euclid over the field: `(g, s, t)` with `s a + t b = g`,
    /// `g` monic (or zero when both inputs vanish).
    pub fn ext_gcd(a: &Self, b: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (quot, rem) = r0.divmod(&r1).expect("nonzero divisor over a field");
            let s2 = &s0 - &(&quot * &s1);
            let t2 = &t0 - &(&quot * &t1);
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        match r0.leading().cloned() {
            Some(lc) => {
                let inv = lc.recip();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
            None => (r0, s0, t0),
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $imp:ident) => {
        impl<T: Coeff> $tr<&Poly<T>> for &Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: &Poly<T>) -> Poly<T> {
                $imp(self, rhs)
            }
        }
        impl<T: Coeff> $tr<Poly<T>> for Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: Poly<T>) -> Poly<T> {
                $imp(&self, &rhs)
            }
        }
        impl<T: Coeff> $tr<&Poly<T>> for Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: &Poly<T>) -> Poly<T> {
                $imp(&self, rhs)
            }
        }
    };
}

fn add_impl<T: Coeff>(a: &Poly<T>, b: &Poly<T>) -> Poly<T> {
    let n = a.coeffs.len().max(b.coeffs.len());
    Poly::new(
        (0..n)
            .map(|i| match (a.coeffs.get(i), b.coeffs.get(i)) {
                (Some(x), Some(y)) => x.add_ref(y),
                (Some(x), None) => x.clone(),
                (None, Some(y)) => y.clone(),
                (None, None) => unreachable!(),
            })
            .collect(),
    )
}

fn sub_impl<T: Coeff>(a: &Poly<T>, b: &Poly<T>) -> Poly<T> {
    let n = a.coeffs.len().max(b.coeffs.len());
    Poly::new(
        (0..n)
            .map(|i| match (a.coeffs.get(i), b.coeffs.get(i)) {
                (Some(x), Some(y)) => x.sub_ref(y),
                (Some(x), None) => x.clone(),
                (None, Some(y)) => -y.clone(),
                (None, None) => unreachable!(),
            })
            .collect(),
    )
}

fn mul_impl<T: Coeff>(a: &Poly<T>, b: &Poly<T>) -> Poly<T> {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    let mut out = vec![T::zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            out[i + j] = out[i + j].add_ref(&x.mul_ref(y));
        }
    }
    Poly::new(out)
}

forward_binop!(Add, add, add_impl);
forward_binop!(Sub, sub, sub_impl);
forward_binop!(Mul, mul, mul_impl);

impl<T: Coeff> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<T: Coeff> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -self.clone()
    }
}

impl<T: Coeff> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl<T: Coeff> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_decimal();
            let (neg, mag) = match s.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, s),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag == "1";
            match i {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "q")?,
                1 => write!(f, "{mag}*q")?,
                _ if unit => write!(f, "q^{i}")?,
                _ => write!(f, "{mag}*q^{i}")?,
            }
        }
        Ok(())
    }
}

impl<T: Coeff> Serialize for Poly<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_decimal()))
    }
}

impl<'de, T: Coeff> Deserialize<'de> for Poly<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<String> = Vec::deserialize(d)?;
        raw.iter()
            .map(|s| T::parse_decimal(s).ok_or_else(|| D::Error::custom(format!("bad coefficient {s:?}"))))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Poly::new)
    }
}
