//! The parameter `k`, either a fixed positive rational or the symbol itself,
//! and the values produced in each of the two base domains.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{Laurent, Matrix3, Rational, Scalar};
use crate::error::{Error, Result};

/// `k` as handed in by a caller.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum KValue {
    /// A concrete `k > 0`.
    Fixed(Rational),
    /// The Laurent indeterminate; no positivity applies.
    Symbolic,
}

impl KValue {
    /// Rejects `k ≤ 0`.
    pub fn fixed(k: Rational) -> Result<Self> {
        if !k.is_positive() {
            return Err(Error::Domain(format!("k must be positive, got {k}")));
        }
        Ok(KValue::Fixed(k))
    }

    pub fn int(k: i64) -> Result<Self> {
        KValue::fixed(Rational::from_int(k))
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self, KValue::Symbolic)
    }
}

impl FromStr for KValue {
    type Err = Error;

    /// `"sym"` or a positive rational literal `p` / `p/q`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "sym" {
            return Ok(KValue::Symbolic);
        }
        let r: Rational = s.parse()?;
        KValue::fixed(r)
    }
}

impl fmt::Display for KValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KValue::Fixed(k) => write!(f, "{k}"),
            KValue::Symbolic => f.write_str("sym"),
        }
    }
}

/// `k` inside a concrete base ring, with `k − 1` and `k⁻¹` precomputed.
///
/// Construction requires `k` to be a unit, which is what lets the backward
/// recurrence and negative matrix powers run without error paths.
#[derive(Clone, Debug)]
pub struct Param<S> {
    k: S,
    k_minus_1: S,
    k_inv: S,
}

impl<S: Scalar> Param<S> {
    pub fn new(k: S) -> Result<Self> {
        let k_inv = k
            .unit_inverse()
            .ok_or_else(|| Error::Domain(format!("k = {k} is not invertible")))?;
        Ok(Param {
            k_minus_1: k.clone() - S::one(),
            k,
            k_inv,
        })
    }

    pub fn k(&self) -> &S {
        &self.k
    }

    pub fn k_minus_1(&self) -> &S {
        &self.k_minus_1
    }

    pub fn k_inv(&self) -> &S {
        &self.k_inv
    }

    /// `kⁿ` for any integer `n`.
    pub fn k_pow(&self, n: i64) -> S {
        if n >= 0 {
            self.k.pow_u(n as u64)
        } else {
            self.k_inv.pow_u(n.unsigned_abs())
        }
    }
}

impl Param<Rational> {
    pub fn rational(k: i64) -> Self {
        Param::new(Rational::from_int(k)).expect("nonzero k")
    }
}

impl Param<Laurent> {
    pub fn symbolic() -> Self {
        Param::new(Laurent::k()).expect("k is a Laurent unit")
    }
}

/// A scalar from either base domain.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Value {
    Rational(Rational),
    Laurent(Laurent),
}

impl Value {
    /// Substitutes `k = c` into a symbolic value; rational values pass through.
    pub fn specialize(&self, c: &Rational) -> Result<Rational> {
        match self {
            Value::Rational(r) => Ok(r.clone()),
            Value::Laurent(p) => p.eval(c),
        }
    }
}

impl From<Rational> for Value {
    fn from(r: Rational) -> Self {
        Value::Rational(r)
    }
}

impl From<Laurent> for Value {
    fn from(p: Laurent) -> Self {
        Value::Laurent(p)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Rational(r) => fmt::Display::fmt(r, f),
            Value::Laurent(p) => fmt::Display::fmt(p, f),
        }
    }
}

/// A 3×3 matrix from either base domain.
#[derive(Clone, PartialEq, Eq, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum MatrixValue {
    Rational(Matrix3<Rational>),
    Laurent(Matrix3<Laurent>),
}

impl MatrixValue {
    pub fn rendered(&self) -> [[String; 3]; 3] {
        match self {
            MatrixValue::Rational(m) => m.rendered(),
            MatrixValue::Laurent(m) => m.rendered(),
        }
    }

    pub fn pretty_grid(&self) -> String {
        match self {
            MatrixValue::Rational(m) => m.pretty_grid(),
            MatrixValue::Laurent(m) => m.pretty_grid(),
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> Value {
        match self {
            MatrixValue::Rational(m) => Value::Rational(m[(i, j)].clone()),
            MatrixValue::Laurent(m) => Value::Laurent(m[(i, j)].clone()),
        }
    }
}

impl From<Matrix3<Rational>> for MatrixValue {
    fn from(m: Matrix3<Rational>) -> Self {
        MatrixValue::Rational(m)
    }
}

impl From<Matrix3<Laurent>> for MatrixValue {
    fn from(m: Matrix3<Laurent>) -> Self {
        MatrixValue::Laurent(m)
    }
}

impl fmt::Display for MatrixValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixValue::Rational(m) => fmt::Display::fmt(m, f),
            MatrixValue::Laurent(m) => fmt::Display::fmt(m, f),
        }
    }
}

/// Runs a generic computation in the base ring selected by a [`KValue`].
///
/// `$p` is bound to a `&Param<Rational>` or `&Param<Laurent>` and the body's
/// result must convert into the common output type (`Value`, `MatrixValue`,
/// or anything else with `From` impls for both domains).
#[macro_export]
macro_rules! with_param {
    ($kv:expr, |$p:ident| $body:expr) => {
        match $kv {
            $crate::KValue::Fixed(c) => {
                let param = $crate::Param::new(c.clone())?;
                let $p = &param;
                $body.map(::std::convert::Into::into)
            }
            $crate::KValue::Symbolic => {
                let param = $crate::Param::symbolic();
                let $p = &param;
                $body.map(::std::convert::Into::into)
            }
        }
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_k() {
        assert_eq!("sym".parse::<KValue>(), Ok(KValue::Symbolic));
        assert_eq!(
            "7/3".parse::<KValue>(),
            Ok(KValue::Fixed(Rational::new(7, 3).unwrap()))
        );
        assert!("0".parse::<KValue>().is_err());
        assert!("-2".parse::<KValue>().is_err());
        assert!("-1/2".parse::<KValue>().is_err());
        assert!("k".parse::<KValue>().is_err());
    }

    #[test]
    fn fixed_requires_positive() {
        assert!(KValue::int(0).is_err());
        assert!(KValue::int(-3).is_err());
        assert!(KValue::int(1).is_ok());
    }

    #[test]
    fn param_powers() {
        let p = Param::symbolic();
        assert_eq!(p.k_pow(-2), Laurent::from_ints(&[(-2, 1)]));
        assert_eq!(p.k_pow(3), Laurent::from_ints(&[(3, 1)]));
        let q = Param::rational(2);
        assert_eq!(q.k_pow(-3), Rational::new(1, 8).unwrap());
        assert!(Param::new(Rational::zero()).is_err());
    }
}
