//! Term-level evaluation of the third-order k-Jacobsthal family for any
//! integer index.
//!
//! Both sequences obey `x(n+3) = (k−1)x(n+2) + (k−1)x(n+1) + k·x(n)`.
//! Negative indices come from running that relation backwards, which divides
//! by `k`; [`Param`] guarantees `k` is a unit.
//!
//! The iterative recurrence is the reference. [`jac3_binet`] is an independent
//! closed-form route through the ω-extension and must agree with it exactly.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{Omega, Scalar};
use crate::error::{Error, Result};
use crate::kvalue::{KValue, Param, Value};
use crate::with_param;

/// Which scalar sequence.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Family {
    /// `J(n)`: seeds 0, 1, k − 1.
    Jacobsthal,
    /// `j(n)`: seeds 2, k − 1, k² + 1.
    Lucas,
    /// `T(n) = (k−1)J(n+1) + k·J(n)`.
    JacobsthalT,
    /// `t(n) = (k−1)j(n+1) + k·j(n)`.
    LucasT,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::Jacobsthal,
        Family::Lucas,
        Family::JacobsthalT,
        Family::LucasT,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            Family::Jacobsthal => "J",
            Family::Lucas => "j",
            Family::JacobsthalT => "T",
            Family::LucasT => "t",
        }
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "J" => Ok(Family::Jacobsthal),
            "j" => Ok(Family::Lucas),
            "T" => Ok(Family::JacobsthalT),
            "t" => Ok(Family::LucasT),
            _ => Err(Error::Usage(format!("unknown sequence family {s:?}"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// One evaluated term.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SequenceTerm {
    pub family: Family,
    pub index: i64,
    pub value: Value,
}

fn jac_seeds<S: Scalar>(p: &Param<S>) -> [S; 3] {
    [S::zero(), S::one(), p.k_minus_1().clone()]
}

fn lucas_seeds<S: Scalar>(p: &Param<S>) -> [S; 3] {
    [
        S::from_int(2),
        p.k_minus_1().clone(),
        p.k().square() + S::one(),
    ]
}

fn step_forward<S: Scalar>(p: &Param<S>, w: &[S; 3]) -> S {
    p.k_minus_1().clone() * (w[2].clone() + w[1].clone()) + p.k().clone() * w[0].clone()
}

/// `x(m−1) = k⁻¹·(x(m+2) − (k−1)x(m+1) − (k−1)x(m))`.
fn step_backward<S: Scalar>(p: &Param<S>, w: &[S; 3]) -> S {
    p.k_inv().clone() * (w[2].clone() - p.k_minus_1().clone() * (w[1].clone() + w[0].clone()))
}

/// Terms `from..=to` of the sequence with the given seeds at indices 0, 1, 2.
fn window<S: Scalar>(p: &Param<S>, seeds: [S; 3], from: i64, to: i64) -> Vec<S> {
    if from > to {
        return Vec::new();
    }
    // w holds x(base), x(base+1), x(base+2)
    let mut base = 0i64;
    let mut w = seeds;
    while base > from {
        let prev = step_backward(p, &w);
        w = [prev, w[0].clone(), w[1].clone()];
        base -= 1;
    }
    while base + 2 < from {
        let next = step_forward(p, &w);
        w = [w[1].clone(), w[2].clone(), next];
        base += 1;
    }
    let mut out = Vec::with_capacity((to - from + 1) as usize);
    let mut idx = base;
    loop {
        if idx >= from {
            out.push(w[0].clone());
        }
        if idx == to {
            break;
        }
        let next = step_forward(p, &w);
        w.rotate_left(1);
        w[2] = next;
        idx += 1;
    }
    out
}

/// `J(n)` by iterating the recurrence, O(|n|) ring operations.
pub fn jac3_term<S: Scalar>(p: &Param<S>, n: i64) -> S {
    single(p, jac_seeds(p), n)
}

/// `j(n)` by iterating the recurrence.
pub fn lucas3_term<S: Scalar>(p: &Param<S>, n: i64) -> S {
    single(p, lucas_seeds(p), n)
}

fn single<S: Scalar>(p: &Param<S>, seeds: [S; 3], n: i64) -> S {
    window(p, seeds, n, n).pop().expect("one term requested")
}

/// `T(n) = (k−1)J(n+1) + k·J(n)`, the same formula at every integer `n`.
pub fn jac3_t_term<S: Scalar>(p: &Param<S>, n: i64) -> S {
    let w = window(p, jac_seeds(p), n, n + 1);
    companion(p, &w)
}

/// `t(n) = (k−1)j(n+1) + k·j(n)`.
pub fn lucas3_t_term<S: Scalar>(p: &Param<S>, n: i64) -> S {
    let w = window(p, lucas_seeds(p), n, n + 1);
    companion(p, &w)
}

fn companion<S: Scalar>(p: &Param<S>, w: &[S]) -> S {
    p.k_minus_1().clone() * w[1].clone() + p.k().clone() * w[0].clone()
}

/// Terms `from..=to` of one family, computed in a single sweep.
pub fn family_range<S: Scalar>(p: &Param<S>, family: Family, from: i64, to: i64) -> Vec<S> {
    match family {
        Family::Jacobsthal => window(p, jac_seeds(p), from, to),
        Family::Lucas => window(p, lucas_seeds(p), from, to),
        Family::JacobsthalT | Family::LucasT => {
            let seeds = if family == Family::JacobsthalT {
                jac_seeds(p)
            } else {
                lucas_seeds(p)
            };
            let w = window(p, seeds, from, to + 1);
            w.windows(2).map(|pair| companion(p, pair)).collect()
        }
    }
}

pub fn family_term<S: Scalar>(p: &Param<S>, family: Family, n: i64) -> S {
    match family {
        Family::Jacobsthal => jac3_term(p, n),
        Family::Lucas => lucas3_term(p, n),
        Family::JacobsthalT => jac3_t_term(p, n),
        Family::LucasT => lucas3_t_term(p, n),
    }
}

/// `J(n)` from the closed form
/// `J(n) = [k^(n+1) − (Aω₁ⁿ − Bω₂ⁿ)/(ω₁ − ω₂)] / (k² + k + 1)`, `A = ω₁k − 1`, `B = ω₂k − 1`.
///
/// For `n < 0` the conjugate form `[k·k^(−|n|) + (Bω₁^|n| − Aω₂^|n|)/(ω₁ − ω₂)] / (k² + k + 1)`
/// is evaluated instead. The ω-component must cancel and the final division must
/// be exact; either failing is reported as a consistency error.
pub fn jac3_binet<S: Scalar>(p: &Param<S>, n: i64) -> Result<S> {
    let k = p.k();
    let a = Omega::omega1().scale(k) - Omega::one();
    let b = Omega::omega2().scale(k) - Omega::one();
    let m = n.unsigned_abs();
    let (w1, w2) = (Omega::<S>::omega1().pow(m), Omega::<S>::omega2().pow(m));
    let bracket = if n >= 0 {
        let frac = (a * w1 - b * w2).div_root_diff();
        Omega::from_base(p.k_pow(n + 1)) - frac
    } else {
        let frac = (b * w1 - a * w2).div_root_diff();
        Omega::from_base(k.clone() * p.k_pow(n)) + frac
    };
    let real = bracket.to_base().ok_or_else(|| {
        Error::Consistency(format!(
            "Binet bracket for J({n}) kept an omega part: {bracket}"
        ))
    })?;
    let denom = k.square() + k.clone() + S::one();
    real.exact_div(&denom)
        .map_err(|e| Error::Consistency(format!("Binet division for J({n}) failed: {e}")))
}

/// `KValue`-level entry point for any family.
pub fn term(k: &KValue, family: Family, n: i64) -> Result<SequenceTerm> {
    let value: Value = with_param!(k, |p| Ok::<_, Error>(family_term(p, family, n)))?;
    Ok(SequenceTerm {
        family,
        index: n,
        value,
    })
}

pub fn terms(k: &KValue, family: Family, from: i64, to: i64) -> Result<Vec<SequenceTerm>> {
    if from > to {
        return Err(Error::Usage(format!("empty index range {from}..{to}")));
    }
    let values: Vec<Value> = match k {
        KValue::Fixed(c) => {
            let p = Param::new(c.clone())?;
            family_range(&p, family, from, to)
                .into_iter()
                .map(Value::from)
                .collect()
        }
        KValue::Symbolic => {
            let p = Param::symbolic();
            family_range(&p, family, from, to)
                .into_iter()
                .map(Value::from)
                .collect()
        }
    };
    Ok((from..=to)
        .zip(values)
        .map(|(index, value)| SequenceTerm {
            family,
            index,
            value,
        })
        .collect())
}

pub fn binet(k: &KValue, n: i64) -> Result<Value> {
    with_param!(k, |p| jac3_binet(p, n))
}
