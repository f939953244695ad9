use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use super::Rational;
use crate::error::Result;

/// A commutative ring with exact equality that contains the rationals.
///
/// Both base domains (fixed rational `k`, symbolic Laurent `k`) implement
/// this, and every sequence, matrix and identity routine is generic over it.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn is_zero(&self) -> bool;

    /// Multiplicative inverse if `self` is a unit of the ring.
    fn unit_inverse(&self) -> Option<Self>;

    /// `self / divisor`, failing unless the quotient lies in the ring.
    fn exact_div(&self, divisor: &Self) -> Result<Self>;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_int(n))
    }

    fn scale(&self, c: &Rational) -> Self {
        self.clone() * Self::from_rational(c)
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }

    /// Non-negative power by square-and-multiply.
    fn pow_u(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        acc
    }

    /// Integer power; negative exponents need `self` to be a unit.
    fn pow_i(&self, e: i64) -> Option<Self> {
        if e >= 0 {
            Some(self.pow_u(e as u64))
        } else {
            self.unit_inverse().map(|inv| inv.pow_u(e.unsigned_abs()))
        }
    }
}
