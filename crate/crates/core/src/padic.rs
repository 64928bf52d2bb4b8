//! Fixed-precision p-adic integers, i.e. residues in Z/p^N.

use crate::error::{Error, Result};
use crate::ring::{Ring, Scalar};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use std::cmp::Ordering;
use std::fmt;

/// Largest modulus accepted; keeps products inside `u128`.
pub const MAX_MODULUS: u64 = 1 << 62;

/// p-adic valuation at working precision.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Valuation {
    Finite(u32),
    /// At least the working precision; indistinguishable from infinity.
    TopOfPrecision,
}

impl Valuation {
    pub fn finite(self) -> Option<u32> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::TopOfPrecision => None,
        }
    }

    pub fn is_top(self) -> bool {
        matches!(self, Valuation::TopOfPrecision)
    }

    /// Valuation of a product at precision `prec`.
    pub fn add_capped(self, other: Valuation, prec: u32) -> Valuation {
        match (self, other) {
            (Valuation::Finite(a), Valuation::Finite(b)) if a + b < prec => {
                Valuation::Finite(a + b)
            }
            _ => Valuation::TopOfPrecision,
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Valuation::Finite(a), Valuation::Finite(b)) => a.cmp(b),
            (Valuation::Finite(_), Valuation::TopOfPrecision) => Ordering::Less,
            (Valuation::TopOfPrecision, Valuation::Finite(_)) => Ordering::Greater,
            (Valuation::TopOfPrecision, Valuation::TopOfPrecision) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::TopOfPrecision => write!(f, "top"),
        }
    }
}

/// Inverse of `a` modulo `m` via the extended Euclidean algorithm.
pub fn inv_mod_u64(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

pub fn is_small_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn checked_modulus(p: u64, prec: u32) -> Option<u64> {
    let mut m: u64 = 1;
    for _ in 0..prec {
        m = m.checked_mul(p)?;
        if m >= MAX_MODULUS {
            return None;
        }
    }
    Some(m)
}

/// Validates a working context `(p, N)`.
pub fn validate_context(p: u64, prec: u32) -> Result<()> {
    if !is_small_prime(p) {
        return Err(Error::InvalidInput(format!("{p} is not a prime")));
    }
    if prec == 0 {
        return Err(Error::InvalidInput("precision must be at least 1".into()));
    }
    if checked_modulus(p, prec).is_none() {
        return Err(Error::InvalidInput(format!(
            "{p}^{prec} exceeds the supported modulus 2^62"
        )));
    }
    Ok(())
}

/// An element of Z/p^N Z.
#[derive(Clone, Copy, Debug)]
pub struct PAdic {
    p: u64,
    prec: u32,
    modulus: u64,
    res: u64,
}

impl PAdic {
    /// Panics if `p^prec` does not fit; use [`validate_context`] on user input.
    pub fn new(p: u64, prec: u32, value: i64) -> Self {
        let modulus = checked_modulus(p, prec).expect("p^N out of range");
        let res = (value as i128).rem_euclid(modulus as i128) as u64;
        PAdic { p, prec, modulus, res }
    }

    pub fn from_u64(p: u64, prec: u32, value: u64) -> Self {
        let modulus = checked_modulus(p, prec).expect("p^N out of range");
        PAdic { p, prec, modulus, res: value % modulus }
    }

    pub fn from_bigint(p: u64, prec: u32, value: &BigInt) -> Self {
        let modulus = checked_modulus(p, prec).expect("p^N out of range");
        let res = value.mod_floor(&BigInt::from(modulus)).to_u64().unwrap();
        PAdic { p, prec, modulus, res }
    }

    /// Image of a rational with denominator prime to p.
    pub fn from_rational(p: u64, prec: u32, value: &BigRational) -> Result<Self> {
        let num = PAdic::from_bigint(p, prec, value.numer());
        let den = PAdic::from_bigint(p, prec, value.denom());
        Ok(num.mul(&den.try_inverse()?))
    }

    pub fn zero(p: u64, prec: u32) -> Self {
        PAdic::new(p, prec, 0)
    }

    pub fn one(p: u64, prec: u32) -> Self {
        PAdic::new(p, prec, 1)
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn residue(&self) -> u64 {
        self.res
    }

    /// Representative in `(-p^N/2, p^N/2]`.
    pub fn signed(&self) -> i128 {
        let r = self.res as i128;
        if r > self.modulus as i128 / 2 {
            r - self.modulus as i128
        } else {
            r
        }
    }

    pub fn with_value(&self, value: i64) -> Self {
        PAdic::new(self.p, self.prec, value)
    }

    /// Truncates (or canonically lifts) to precision `prec`.
    pub fn with_precision(&self, prec: u32) -> Self {
        PAdic::from_u64(self.p, prec, self.res)
    }

    fn reconcile(&self, other: &PAdic) -> Result<(u64, u64, u32, u64)> {
        if self.p != other.p {
            return Err(Error::PrimeMismatch(self.p, other.p));
        }
        if self.prec == other.prec {
            Ok((self.res, other.res, self.prec, self.modulus))
        } else {
            let (prec, m) = if self.prec < other.prec {
                (self.prec, self.modulus)
            } else {
                (other.prec, other.modulus)
            };
            Ok((self.res % m, other.res % m, prec, m))
        }
    }

    pub fn checked_add(&self, other: &PAdic) -> Result<PAdic> {
        let (a, b, prec, m) = self.reconcile(other)?;
        let s = a as u128 + b as u128;
        Ok(PAdic { p: self.p, prec, modulus: m, res: (s % m as u128) as u64 })
    }

    pub fn checked_sub(&self, other: &PAdic) -> Result<PAdic> {
        let (a, b, prec, m) = self.reconcile(other)?;
        let res = if a >= b { a - b } else { m - (b - a) };
        Ok(PAdic { p: self.p, prec, modulus: m, res })
    }

    pub fn checked_mul(&self, other: &PAdic) -> Result<PAdic> {
        let (a, b, prec, m) = self.reconcile(other)?;
        let res = ((a as u128 * b as u128) % m as u128) as u64;
        Ok(PAdic { p: self.p, prec, modulus: m, res })
    }

    pub fn valuation(&self) -> Valuation {
        if self.res == 0 {
            return Valuation::TopOfPrecision;
        }
        let mut r = self.res;
        let mut v = 0;
        while r % self.p == 0 {
            r /= self.p;
            v += 1;
        }
        Valuation::Finite(v)
    }

    pub fn is_unit(&self) -> bool {
        self.res % self.p != 0
    }

    pub fn try_inverse(&self) -> Result<PAdic> {
        if !self.is_unit() {
            return Err(Error::NotAUnit(format!("{} mod {}^{}", self.res, self.p, self.prec)));
        }
        let res = inv_mod_u64(self.res, self.modulus).expect("unit has an inverse");
        Ok(PAdic { res, ..*self })
    }

    /// Exact division by `p^k`, losing `k` digits of precision.
    pub fn div_p_power(&self, k: u32) -> Result<PAdic> {
        if k == 0 {
            return Ok(*self);
        }
        if k >= self.prec {
            return Err(Error::InsufficientPrecision(format!(
                "cannot divide by {}^{k} at precision {}",
                self.p, self.prec
            )));
        }
        let pk = self.p.pow(k);
        if self.res % pk != 0 {
            return Err(Error::NotAUnit(format!("{} is not divisible by {}^{k}", self.res, self.p)));
        }
        Ok(PAdic::from_u64(self.p, self.prec - k, self.res / pk))
    }

    /// Multiplication by `p^k`.
    pub fn mul_p_power(&self, k: u32) -> PAdic {
        let mut out = *self;
        for _ in 0..k {
            out = out.scale_int(self.p as i64);
        }
        out
    }

    /// Reduction modulo `p^k` as a plain integer, `k <= N`.
    pub fn residue_mod_pk(&self, k: u32) -> u64 {
        self.res % self.p.pow(k.min(self.prec))
    }
}

impl PartialEq for PAdic {
    fn eq(&self, other: &Self) -> bool {
        match self.reconcile(other) {
            Ok((a, b, _, _)) => a == b,
            Err(_) => false,
        }
    }
}

impl Eq for PAdic {}

impl fmt::Display for PAdic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.res)
    }
}

impl Ring for PAdic {
    fn zero_like(&self) -> Self {
        PAdic { res: 0, ..*self }
    }
    fn one_like(&self) -> Self {
        PAdic { res: 1 % self.modulus, ..*self }
    }
    fn from_int_like(&self, n: i64) -> Self {
        PAdic::new(self.p, self.prec, n)
    }
    fn add(&self, other: &Self) -> Self {
        self.checked_add(other).expect("prime mismatch")
    }
    fn sub(&self, other: &Self) -> Self {
        self.checked_sub(other).expect("prime mismatch")
    }
    fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("prime mismatch")
    }
    fn neg(&self) -> Self {
        let res = if self.res == 0 { 0 } else { self.modulus - self.res };
        PAdic { res, ..*self }
    }
    fn is_zero(&self) -> bool {
        self.res == 0
    }
    fn inverse(&self) -> Option<Self> {
        self.try_inverse().ok()
    }
}

impl Scalar for PAdic {
    fn residue_mod(&self, m: u64) -> Option<u64> {
        if self.modulus % m == 0 {
            Some(self.res % m)
        } else {
            None
        }
    }
}
