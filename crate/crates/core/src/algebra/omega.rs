//! The quadratic extension `S[ω]/(ω² + ω + 1)`.
//!
//! `ω₁ = ω` and `ω₂ = −1 − ω` are the two roots of `x² + x + 1`, so every
//! Binet computation stays exact and never touches complex floats.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Rational, Scalar};

/// `a + b·ω` with coefficients in the base ring `S`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Omega<S> {
    pub a: S,
    pub b: S,
}

impl<S: Scalar> Omega<S> {
    pub fn new(a: S, b: S) -> Self {
        Omega { a, b }
    }

    pub fn from_base(a: S) -> Self {
        Omega { a, b: S::zero() }
    }

    pub fn zero() -> Self {
        Omega::from_base(S::zero())
    }

    pub fn one() -> Self {
        Omega::from_base(S::one())
    }

    /// `ω₁ = ω`.
    pub fn omega1() -> Self {
        Omega {
            a: S::zero(),
            b: S::one(),
        }
    }

    /// `ω₂ = −1 − ω`, the conjugate root.
    pub fn omega2() -> Self {
        Omega {
            a: -S::one(),
            b: -S::one(),
        }
    }

    /// `ω₁ − ω₂ = 2ω + 1`.
    pub fn root_diff() -> Self {
        Omega {
            a: S::one(),
            b: S::from_int(2),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// The base-ring value when the ω-component vanishes.
    pub fn to_base(&self) -> Option<S> {
        self.b.is_zero().then(|| self.a.clone())
    }

    pub fn scale(&self, c: &S) -> Self {
        Omega {
            a: self.a.clone() * c.clone(),
            b: self.b.clone() * c.clone(),
        }
    }

    /// Divides by `ω₁ − ω₂`. Since `(2ω + 1)² = −3`, this is multiplication
    /// by `−(2ω + 1)/3`.
    pub fn div_root_diff(&self) -> Self {
        let minus_third = Rational::new(-1, 3).expect("nonzero denominator");
        (self.clone() * Omega::root_diff()).map(|c| c.scale(&minus_third))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Omega::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    fn map(self, f: impl Fn(S) -> S) -> Self {
        Omega {
            a: f(self.a),
            b: f(self.b),
        }
    }
}

impl<S: Scalar> From<S> for Omega<S> {
    fn from(a: S) -> Self {
        Omega::from_base(a)
    }
}

impl<S: Scalar> Add for Omega<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Omega {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
        }
    }
}

impl<S: Scalar> Sub for Omega<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Omega {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
        }
    }
}

impl<S: Scalar> Neg for Omega<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Omega {
            a: -self.a,
            b: -self.b,
        }
    }
}

/// `(a₁ + b₁ω)(a₂ + b₂ω) = (a₁a₂ − b₁b₂) + (a₁b₂ + a₂b₁ − b₁b₂)ω`.
impl<S: Scalar> Mul for Omega<S> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let bb = self.b.clone() * rhs.b.clone();
        let a = self.a.clone() * rhs.a.clone() - bb.clone();
        let b = self.a * rhs.b + rhs.a * self.b - bb;
        Omega { a, b }
    }
}

impl<S: Scalar> fmt::Display for Omega<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "({}) + ({})w", self.a, self.b)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Laurent;

    type W = Omega<Rational>;

    fn w(a: i64, b: i64) -> W {
        Omega::new(Rational::from_int(a), Rational::from_int(b))
    }

    #[test]
    fn defining_relation() {
        assert_eq!(W::omega1() * W::omega1(), w(-1, -1));
        assert_eq!(W::omega1() * W::omega2(), W::one());
        assert_eq!(W::root_diff() * W::root_diff(), w(-3, 0));
        assert_eq!(W::omega1().pow(3), W::one());
        assert_eq!(W::omega2().pow(3), W::one());
        assert_eq!(W::omega1() + W::omega2(), w(-1, 0));
    }

    #[test]
    fn division_by_root_difference() {
        assert_eq!(W::root_diff().div_root_diff(), W::one());
        assert_eq!(w(3, 0).div_root_diff(), -W::root_diff());
        assert_eq!(W::zero().div_root_diff(), W::zero());
    }

    #[test]
    fn works_over_laurent() {
        let k = Laurent::k();
        // A − B = (ω₁ − ω₂)k
        let a = Omega::omega1().scale(&k) - Omega::one();
        let b = Omega::<Laurent>::omega2().scale(&k) - Omega::one();
        assert_eq!((a - b).div_root_diff(), Omega::from_base(k));
    }
}
