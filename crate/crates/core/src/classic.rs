//! The `k = 2` specializations: classic third-order Jacobsthal numbers,
//! the modified third-order Jacobsthal numbers `K(n)`, and the 3-periodic
//! corrections `Z(n)`, `Y(n)` that appear in their closed forms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `Z(n)`: 2, −3, 1 for `n ≡ 0, 1, 2 (mod 3)`.
pub fn z(n: i64) -> i64 {
    match n.rem_euclid(3) {
        0 => 2,
        1 => -3,
        _ => 1,
    }
}

/// `Y(n)`: 2 when `3 | n`, otherwise −1.
pub fn y(n: i64) -> i64 {
    if n.rem_euclid(3) == 0 {
        2
    } else {
        -1
    }
}

fn pow2(e: u64) -> BigInt {
    BigInt::one() << e
}

/// `J(n) = (2^(n+1) − Z(n)) / 7`.
pub fn jac3_classic(n: u64) -> BigInt {
    let num = pow2(n + 1) - BigInt::from(z(n as i64));
    let (q, r) = num.div_rem(&BigInt::from(7));
    debug_assert!(r.is_zero(), "7 must divide 2^(n+1) - Z(n)");
    q
}

/// `K(n) = 2ⁿ + Y(n)`.
pub fn modified_lucas_classic(n: u64) -> BigInt {
    pow2(n) + BigInt::from(y(n as i64))
}

/// Forward iteration of `x(n+3) = x(n+2) + x(n+1) + 2x(n)`.
fn classic_recurrence(seeds: [i64; 3], n: u64) -> BigInt {
    let mut w = seeds.map(BigInt::from);
    for _ in 0..n {
        let next = &w[2] + &w[1] + (&w[0] << 1u32);
        w.rotate_left(1);
        w[2] = next;
    }
    w[0].clone()
}

/// `J(n)` from seeds 0, 1, 1 by recurrence.
pub fn jac3_classic_recurrence(n: u64) -> BigInt {
    classic_recurrence([0, 1, 1], n)
}

/// `K(n)` from seeds 3, 1, 3 by recurrence.
pub fn modified_lucas_recurrence(n: u64) -> BigInt {
    classic_recurrence([3, 1, 3], n)
}

/// `J(r·n)` through the stride-`r` recurrence
/// `J(r(i+3)) = K(r)·J(r(i+2)) − (2ʳY(r) + 1)·J(r(i+1)) + 2ʳ·J(r·i)`
/// seeded with `J(0)`, `J(r)`, `J(2r)`.
///
/// `r = 0` is rejected: the stride-0 subsequence is constant and the
/// recurrence says nothing.
pub fn jac3_multi_index(r: i64, n: i64) -> Result<BigInt> {
    if r < 1 {
        return Err(Error::Domain(format!(
            "stride r must be at least 1, got {r}"
        )));
    }
    if n < 0 {
        return Err(Error::Domain(format!(
            "index n must be non-negative, got {n}"
        )));
    }
    let ru = r as u64;
    let kr = modified_lucas_recurrence(ru);
    let two_r = pow2(ru);
    let mid = &two_r * BigInt::from(y(r)) + BigInt::one();
    let mut w = [
        jac3_classic_recurrence(0),
        jac3_classic_recurrence(ru),
        jac3_classic_recurrence(2 * ru),
    ];
    for _ in 0..n {
        let next = &kr * &w[2] - &mid * &w[1] + &two_r * &w[0];
        w.rotate_left(1);
        w[2] = next;
    }
    Ok(w[0].clone())
}
