//! Sparse Laurent polynomials in the single symbol `k` over exact rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Rational, Scalar};
use crate::error::{Error, Result};

/// A finite sum `Σ cₑ·kᵉ` with `e ∈ ℤ`.
///
/// Canonical form: no stored coefficient is zero, so the empty map is the
/// unique zero and derived equality is ring equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent {
    terms: BTreeMap<i64, Rational>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn one() -> Self {
        Laurent::constant(Rational::one())
    }

    /// The indeterminate `k`.
    pub fn k() -> Self {
        Laurent::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Laurent::monomial(c, 0)
    }

    pub fn monomial(c: Rational, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Laurent { terms }
    }

    /// Builds from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        let mut out = Laurent::zero();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    /// Convenience for integer coefficients: `from_ints(&[(2, 1), (0, -1)])` is `k² − 1`.
    pub fn from_ints(terms: &[(i64, i64)]) -> Self {
        Laurent::from_terms(terms.iter().map(|&(e, c)| (e, Rational::from_int(c))))
    }

    fn add_term(&mut self, exp: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(Rational::zero);
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// `Some((c, e))` when `self = c·kᵉ` with `c ≠ 0`; these are exactly the units.
    pub fn as_monomial(&self) -> Option<(&Rational, i64)> {
        match self.terms.len() {
            1 => self.terms.iter().next().map(|(&e, c)| (c, e)),
            _ => None,
        }
    }

    fn shift(&self, by: i64) -> Laurent {
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e + by, c.clone()))
                .collect(),
        }
    }

    fn scale_by(&self, c: &Rational) -> Laurent {
        if c.is_zero() {
            return Laurent::zero();
        }
        Laurent {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    /// Substitutes `k = at`. Fails only when `at = 0` and a negative power is present.
    pub fn eval(&self, at: &Rational) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (&e, c) in &self.terms {
            let p = Scalar::pow_i(at, e).ok_or(Error::ZeroDenominator)?;
            acc = acc + c * &p;
        }
        Ok(acc)
    }

    /// Exact quotient `self / divisor` in the Laurent ring.
    ///
    /// Monomial divisors are units and always succeed. Otherwise both sides
    /// are shifted into `Q[k]` with nonzero constant terms and divided there;
    /// a nonzero remainder is reported.
    pub fn exact_div(&self, divisor: &Laurent) -> Result<Laurent> {
        if divisor.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if let Some((c, e)) = divisor.as_monomial() {
            let inv = c.recip().expect("canonical coefficient is nonzero");
            return Ok(self.shift(-e).scale_by(&inv));
        }
        if self.is_zero() {
            return Ok(Laurent::zero());
        }
        let ds = divisor.min_exponent().unwrap();
        let ns = self.min_exponent().unwrap();
        let den = dense(&divisor.shift(-ds));
        let mut rem = dense(&self.shift(-ns));
        if rem.len() < den.len() {
            return Err(Error::InexactDivision {
                remainder: self.to_string(),
            });
        }
        let lead = den.last().unwrap().recip().unwrap();
        let mut quot = vec![Rational::zero(); rem.len() - den.len() + 1];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + den.len() - 1];
            if top.is_zero() {
                continue;
            }
            let f = top * &lead;
            for (j, d) in den.iter().enumerate() {
                rem[i + j] = &rem[i + j] - &(&f * d);
            }
            quot[i] = f;
        }
        let remainder =
            Laurent::from_terms(rem.into_iter().enumerate().map(|(i, c)| (i as i64 + ns, c)));
        if !remainder.is_zero() {
            return Err(Error::InexactDivision {
                remainder: remainder.to_string(),
            });
        }
        Ok(Laurent::from_terms(
            quot.into_iter()
                .enumerate()
                .map(|(i, c)| (i as i64 + ns - ds, c)),
        ))
    }
}

/// Dense ascending coefficients of a polynomial with min exponent 0.
fn dense(p: &Laurent) -> Vec<Rational> {
    let top = p.max_exponent().unwrap_or(0);
    (0..=top).map(|e| p.coeff(e)).collect()
}

impl From<Rational> for Laurent {
    fn from(c: Rational) -> Self {
        Laurent::constant(c)
    }
}

impl From<i64> for Laurent {
    fn from(c: i64) -> Self {
        Laurent::constant(Rational::from_int(c))
    }
}

impl Add for Laurent {
    type Output = Laurent;
    fn add(mut self, rhs: Laurent) -> Laurent {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl Sub for Laurent {
    type Output = Laurent;
    fn sub(self, rhs: Laurent) -> Laurent {
        self + (-rhs)
    }
}

impl Neg for Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for Laurent {
    type Output = Laurent;
    fn mul(self, rhs: Laurent) -> Laurent {
        &self * &rhs
    }
}

impl<'a> Mul<&'a Laurent> for &'a Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &'a Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

/// Terms in strictly decreasing exponent order, e.g. `k^2 - k + 1 - 2k^-1`.
/// Non-integer coefficients of non-constant terms are parenthesized: `(1/2)k^3`.
impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if mag.is_integer() {
                if mag != Rational::one() {
                    write!(f, "{mag}")?;
                }
            } else {
                write!(f, "({mag})")?;
            }
            if e == 1 {
                f.write_str("k")?;
            } else {
                write!(f, "k^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Scalar for Laurent {
    fn zero() -> Self {
        Laurent::zero()
    }

    fn one() -> Self {
        Laurent::one()
    }

    fn from_rational(r: &Rational) -> Self {
        Laurent::constant(r.clone())
    }

    fn is_zero(&self) -> bool {
        Laurent::is_zero(self)
    }

    fn unit_inverse(&self) -> Option<Self> {
        let (c, e) = self.as_monomial()?;
        Some(Laurent::monomial(c.recip()?, -e))
    }

    fn exact_div(&self, divisor: &Self) -> Result<Self> {
        Laurent::exact_div(self, divisor)
    }

    fn scale(&self, c: &Rational) -> Self {
        self.scale_by(c)
    }

    fn square(&self) -> Self {
        self * self
    }
}
