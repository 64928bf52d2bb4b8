//! Minimal ring abstraction shared by every coefficient type in the crate.
//!
//! Elements carry their own context (prime, precision, group, ...), so the
//! constructors for constants take an existing element as a template.

use num_bigint::BigInt;
use num_rational::BigRational;
use std::fmt::Debug;

/// An associative unital ring whose elements know their own context.
///
/// Binary operations panic when the two operands live in incompatible
/// contexts; the typed wrappers expose `checked_*` variants where that can
/// happen from user input.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_int_like(&self, n: i64) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// Two-sided inverse, when it exists and can be detected.
    fn inverse(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        self.sub(&self.one_like()).is_zero()
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    fn scale_int(&self, n: i64) -> Self {
        self.from_int_like(n).mul(self)
    }
}

/// Scalars that can be reduced modulo a small integer when integral.
pub trait Scalar: Ring {
    /// Residue modulo `m`, or `None` if the element is not integral at the
    /// primes dividing `m` (or `m` exceeds the stored precision).
    fn residue_mod(&self, m: u64) -> Option<u64>;
}

impl Ring for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::from_integer(BigInt::from(0))
    }
    fn one_like(&self) -> Self {
        BigRational::from_integer(BigInt::from(1))
    }
    fn from_int_like(&self, n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn inverse(&self) -> Option<Self> {
        if Ring::is_zero(self) {
            None
        } else {
            Some(num_traits::Inv::inv(self.clone()))
        }
    }
}

impl Scalar for BigRational {
    fn residue_mod(&self, m: u64) -> Option<u64> {
        use num_integer::Integer;
        use num_traits::ToPrimitive;
        let m_big = BigInt::from(m);
        let num = self.numer().mod_floor(&m_big);
        let den = self.denom().mod_floor(&m_big);
        let den = den.to_u64()?;
        let inv = crate::padic::inv_mod_u64(den, m)?;
        let num = num.to_u64()?;
        Some(((num as u128 * inv as u128) % m as u128) as u64)
    }
}

/// Exact rational from an integer.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact rational `n/d`.
pub fn rat_frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
