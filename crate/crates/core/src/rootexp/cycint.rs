use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::{euler_phi, phi};
use crate::error::{Error, Result};
use crate::polyring::IntPolynomial;

/// An element of `Z[zeta_n] = Z[q]/(Phi_n)` in the power basis
/// `1, zeta, ..., zeta^(phi(n)-1)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicInteger {
    order: u64,
    rep: IntPolynomial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycOp {
    Add,
    Sub,
    Mul,
}

impl CyclotomicInteger {
    /// Reduce an integer polynomial modulo `Phi_n`.
    pub fn from_poly(order: u64, f: &IntPolynomial) -> Self {
        assert!(order >= 1, "order must be positive");
        let rep = f.rem(&phi(order)).expect("cyclotomic polynomials are monic");
        CyclotomicInteger { order, rep }
    }

    pub fn from_int(order: u64, c: impl Into<BigInt>) -> Self {
        Self::from_poly(order, &IntPolynomial::constant(c.into()))
    }

    pub fn zero(order: u64) -> Self {
        Self::from_int(order, 0)
    }

    pub fn one(order: u64) -> Self {
        Self::from_int(order, 1)
    }

    /// The primitive root `zeta_n` itself.
    pub fn zeta(order: u64) -> Self {
        Self::from_poly(order, &IntPolynomial::q())
    }

    /// Build from power-basis coordinates; extra length is reduced away.
    pub fn from_coeffs(order: u64, coeffs: Vec<BigInt>) -> Self {
        Self::from_poly(order, &IntPolynomial::new(coeffs))
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn as_poly(&self) -> &IntPolynomial {
        &self.rep
    }

    /// Power-basis coordinates, always of length `phi(n)`.
    pub fn coeffs(&self) -> Vec<BigInt> {
        let len = euler_phi(self.order) as usize;
        (0..len).map(|i| self.rep.coeff(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    fn same_order(&self, other: &Self) -> Result<()> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(Error::OrderMismatch(self.order, other.order))
        }
    }

    pub fn arith(&self, other: &Self, op: CycOp) -> Result<Self> {
        self.same_order(other)?;
        let raw = match op {
            CycOp::Add => return Ok(CyclotomicInteger { order: self.order, rep: &self.rep + &other.rep }),
            CycOp::Sub => return Ok(CyclotomicInteger { order: self.order, rep: &self.rep - &other.rep }),
            CycOp::Mul => &self.rep * &other.rep,
        };
        Ok(Self::from_poly(self.order, &raw))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.arith(other, CycOp::Add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.arith(other, CycOp::Sub)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.arith(other, CycOp::Mul)
    }

    pub fn neg(&self) -> Self {
        CyclotomicInteger { order: self.order, rep: -&self.rep }
    }

    /// Multiply by `zeta`.
    pub(crate) fn times_zeta(&self) -> Self {
        Self::from_poly(self.order, &self.rep.shift(1))
    }

    pub fn to_json(&self) -> CyclotomicIntegerJson {
        CyclotomicIntegerJson {
            order: self.order,
            coeffs: self.coeffs().iter().map(|c| c.to_string()).collect(),
        }
    }

    pub fn from_json(js: &CyclotomicIntegerJson) -> Result<Self> {
        if js.order == 0 {
            return Err(Error::InvalidInput("order must be positive".into()));
        }
        let coeffs = js
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(|_| Error::InvalidInput(format!("bad integer {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(js.order, coeffs))
    }
}

/// Wire form `{order, coeffs}` with decimal-string coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclotomicIntegerJson {
    pub order: u64,
    pub coeffs: Vec<String>,
}

impl fmt::Display for CyclotomicInteger {
    /// Written in terms of `z = zeta_n`, e.g. `5 - z`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rep.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.rep.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.sign() == num_bigint::Sign::Minus;
            let mag = c.magnitude().to_string();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (i, mag.as_str()) {
                (0, m) => write!(f, "{m}")?,
                (1, "1") => write!(f, "z")?,
                (1, m) => write!(f, "{m}*z")?,
                (_, "1") => write!(f, "z^{i}")?,
                (_, m) => write!(f, "{m}*z^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CyclotomicInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]_{}", self, self.order)
    }
}

/// A polynomial in `q` with coefficients in `Z[zeta_n]`, little-endian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaPolynomial {
    order: u64,
    coeffs: Vec<CyclotomicInteger>,
}

impl ZetaPolynomial {
    pub fn new(order: u64, mut coeffs: Vec<CyclotomicInteger>) -> Self {
        debug_assert!(coeffs.iter().all(|c| c.order == order));
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ZetaPolynomial { order, coeffs }
    }

    /// Image of an integer polynomial under `Z[q] -> Z[zeta][q]`.
    pub fn from_int_poly(order: u64, f: &IntPolynomial) -> Self {
        Self::new(
            order,
            f.coeffs().iter().map(|c| CyclotomicInteger::from_int(order, c.clone())).collect(),
        )
    }

    /// `q - zeta`
    pub fn linear(order: u64) -> Self {
        Self::new(order, vec![CyclotomicInteger::zeta(order).neg(), CyclotomicInteger::one(order)])
    }

    pub fn coeffs(&self) -> &[CyclotomicInteger] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = CyclotomicInteger::zero(self.order);
        Self::new(
            self.order,
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).unwrap_or(&zero);
                    let b = other.coeffs.get(i).unwrap_or(&zero);
                    a.add(b).expect("same order")
                })
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&CyclotomicInteger::from_int(self.order, -1)))
    }

    pub fn scale(&self, c: &CyclotomicInteger) -> Self {
        Self::new(self.order, self.coeffs.iter().map(|x| x.mul(c).expect("same order")).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(self.order, Vec::new());
        }
        let mut out = vec![CyclotomicInteger::zero(self.order); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b).expect("same order")).expect("same order");
            }
        }
        Self::new(self.order, out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::from_int_poly(self.order, &IntPolynomial::one()), |acc, _| acc.mul(self))
    }

    /// Long division by a monic divisor.
    pub fn divmod_monic(&self, g: &Self) -> (Self, Self) {
        let dg = g.coeffs.len().checked_sub(1).expect("nonzero divisor");
        assert!(g.coeffs[dg] == CyclotomicInteger::one(self.order), "divisor must be monic");
        if self.coeffs.len() <= dg {
            return (Self::new(self.order, Vec::new()), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![CyclotomicInteger::zero(self.order); rem.len() - dg];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dg].clone();
            if c.is_zero() {
                continue;
            }
            for (j, gc) in g.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].sub(&c.mul(gc).expect("same order")).expect("same order");
            }
            quot[i] = c;
        }
        rem.truncate(dg);
        (Self::new(self.order, quot), Self::new(self.order, rem))
    }

    /// Synthetic division by `q - zeta`: `(quotient, value at zeta)`.
    pub fn div_by_linear(&self) -> (Self, CyclotomicInteger) {
        let mut acc = CyclotomicInteger::zero(self.order);
        let mut quot = vec![CyclotomicInteger::zero(self.order); self.coeffs.len().saturating_sub(1)];
        for i in (0..self.coeffs.len()).rev() {
            acc = acc.times_zeta().add(&self.coeffs[i]).expect("same order");
            if i > 0 {
                quot[i - 1] = acc.clone();
            }
        }
        (Self::new(self.order, quot), acc)
    }
}
