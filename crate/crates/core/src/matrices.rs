//! The four matrix families built from the generator
//!
//! ```text
//!        [ k−1  k−1  k ]
//!   M =  [  1    0   0 ]
//!        [  0    1   0 ]
//! ```
//!
//! `M(n)` and `N(n)` follow the matrix recurrence from literal seed matrices;
//! `J(n) = Mⁿ` and `j(n) = N(0)·Mⁿ` are computed by fast powering and are
//! defined for every integer `n`. The closed-form assemblies place scalar
//! sequence terms in fixed positions and act as a third route.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{Matrix3, Scalar};
use crate::error::{Error, Result};
use crate::kvalue::{KValue, MatrixValue, Param, Value};
use crate::sequences::{family_range, Family};
use crate::with_param;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum MatrixFamily {
    /// `M(n)` from the matrix recurrence, `n ≥ 0`.
    M,
    /// `N(n)` from the matrix recurrence, `n ≥ 0`.
    N,
    /// `J(n) = Mⁿ`, any integer `n`.
    JPower,
    /// `j(n) = N(0)·Mⁿ`, any integer `n`.
    LucasPower,
}

impl MatrixFamily {
    pub fn symbol(self) -> &'static str {
        match self {
            MatrixFamily::M => "M",
            MatrixFamily::N => "N",
            MatrixFamily::JPower => "Jn",
            MatrixFamily::LucasPower => "jn",
        }
    }
}

impl FromStr for MatrixFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "M" => Ok(MatrixFamily::M),
            "N" => Ok(MatrixFamily::N),
            "Jn" => Ok(MatrixFamily::JPower),
            "jn" => Ok(MatrixFamily::LucasPower),
            _ => Err(Error::Usage(format!("unknown matrix family {s:?}"))),
        }
    }
}

impl fmt::Display for MatrixFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// One evaluated matrix term.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatrixFamilyTerm {
    pub family: MatrixFamily,
    pub index: i64,
    pub k: KValue,
    pub matrix: MatrixValue,
}

fn ints<S: Scalar>(v: i64) -> S {
    S::from_int(v)
}

/// `M(1)`, the generator.
pub fn generator<S: Scalar>(p: &Param<S>) -> Matrix3<S> {
    let (k, km1) = (p.k().clone(), p.k_minus_1().clone());
    let (o, z) = (S::one(), S::zero());
    Matrix3::new([
        [km1.clone(), km1, k],
        [o.clone(), z.clone(), z.clone()],
        [z.clone(), o, z],
    ])
}

/// `M(2)` given literally, not computed as `M·M`.
fn m_seed_2<S: Scalar>(p: &Param<S>) -> Matrix3<S> {
    let k = p.k().clone();
    let km1 = p.k_minus_1().clone();
    let k2mk = k.square() - k.clone();
    Matrix3::new([
        [k2mk.clone(), k2mk.clone() + S::one(), k2mk],
        [km1.clone(), km1, k],
        [S::one(), S::zero(), S::zero()],
    ])
}

/// `N(0)`, rows `[k−1, 2k, 2k]`, `[2, 1−k, 2]`, `[2/k, 2/k, −(k²+k−2)/k]`.
pub fn lucas_seed<S: Scalar>(p: &Param<S>) -> Matrix3<S> {
    let k = p.k().clone();
    let km1 = p.k_minus_1().clone();
    let two = ints::<S>(2);
    let two_k = two.clone() * k.clone();
    let two_over_k = two.clone() * p.k_inv().clone();
    let corner = -(k.square() + k.clone() - two.clone()) * p.k_inv().clone();
    Matrix3::new([
        [km1.clone(), two_k.clone(), two_k],
        [two.clone(), -km1, two],
        [two_over_k.clone(), two_over_k, corner],
    ])
}

/// `N(1)` given literally.
fn n_seed_1<S: Scalar>(p: &Param<S>) -> Matrix3<S> {
    let k = p.k().clone();
    let km1 = p.k_minus_1().clone();
    let two = ints::<S>(2);
    let k2p1 = k.square() + S::one();
    Matrix3::new([
        [k2p1.clone(), k2p1, k.square() - k.clone()],
        [km1.clone(), two.clone() * k.clone(), two.clone() * k],
        [two.clone(), -km1, two],
    ])
}

/// `N(2)` given literally.
fn n_seed_2<S: Scalar>(p: &Param<S>) -> Matrix3<S> {
    let k = p.k().clone();
    let k3 = k.pow_u(3);
    let k2p1 = k.square() + S::one();
    let two_k = ints::<S>(2) * k.clone();
    Matrix3::new([
        [
            k3.clone() + k.clone(),
            k3.clone() - S::one(),
            k3 + k.clone(),
        ],
        [k2p1.clone(), k2p1, k.square() - k.clone()],
        [p.k_minus_1().clone(), two_k.clone(), two_k],
    ])
}

fn matrix_recurrence<S: Scalar>(p: &Param<S>, seeds: [Matrix3<S>; 3], n: u64) -> Matrix3<S> {
    let mut w = seeds;
    for _ in 0..n {
        let next = (w[2].clone() + w[1].clone()).scale(p.k_minus_1()) + w[0].scale(p.k());
        w.rotate_left(1);
        w[2] = next;
    }
    w[0].clone()
}

/// `M(n)` by the matrix recurrence from the seeds `I`, `M(1)`, `M(2)`.
pub fn m_matrix<S: Scalar>(p: &Param<S>, n: u64) -> Matrix3<S> {
    matrix_recurrence(p, [Matrix3::identity(), generator(p), m_seed_2(p)], n)
}

/// `N(n)` by the matrix recurrence from the seeds `N(0)`, `N(1)`, `N(2)`.
pub fn n_matrix<S: Scalar>(p: &Param<S>, n: u64) -> Matrix3<S> {
    matrix_recurrence(p, [lucas_seed(p), n_seed_1(p), n_seed_2(p)], n)
}

/// `J(n) = Mⁿ` by square-and-multiply.
pub fn jacobsthal_power<S: Scalar>(p: &Param<S>, n: i64) -> Matrix3<S> {
    generator(p)
        .pow(n)
        .expect("generator has determinant k, a unit")
}

/// `j(n) = N(0)·Mⁿ`.
pub fn lucas_power<S: Scalar>(p: &Param<S>, n: i64) -> Matrix3<S> {
    lucas_seed(p).mul_ref(&jacobsthal_power(p, n))
}

/// Rows `[x(n+1), y(n−1), k·x(n)]`, `[x(n), y(n−2), k·x(n−1)]`, `[x(n−1), y(n−3), k·x(n−2)]`
/// where `y` is the companion of `x`.
fn assemble<S: Scalar>(p: &Param<S>, base: Family, companion: Family, n: i64) -> Matrix3<S> {
    // x over n−2..=n+1, y over n−3..=n−1
    let x = family_range(p, base, n - 2, n + 1);
    let y = family_range(p, companion, n - 3, n - 1);
    let xi = |m: i64| x[(m - (n - 2)) as usize].clone();
    let yi = |m: i64| y[(m - (n - 3)) as usize].clone();
    let k = p.k().clone();
    Matrix3::from_fn(|r, c| {
        let shift = r as i64;
        match c {
            0 => xi(n + 1 - shift),
            1 => yi(n - 1 - shift),
            _ => k.clone() * xi(n - shift),
        }
    })
}

/// `J(n)` assembled from scalar `J` and `T` terms; valid for every integer `n`.
pub fn assemble_jacobsthal<S: Scalar>(p: &Param<S>, n: i64) -> Matrix3<S> {
    assemble(p, Family::Jacobsthal, Family::JacobsthalT, n)
}

/// `j(n)` assembled from scalar `j` and `t` terms.
pub fn assemble_lucas<S: Scalar>(p: &Param<S>, n: i64) -> Matrix3<S> {
    assemble(p, Family::Lucas, Family::LucasT, n)
}

/// `det J(n) = kⁿ`, cross-checked against the cofactor determinant of `Mⁿ`.
pub fn det_jacobsthal<S: Scalar>(p: &Param<S>, n: i64) -> Result<S> {
    let formula = p.k_pow(n);
    let direct = jacobsthal_power(p, n).det();
    if formula != direct {
        return Err(Error::Consistency(format!(
            "det J({n}): formula {formula} but cofactor expansion gives {direct}"
        )));
    }
    Ok(formula)
}

/// `det j(n) = (k+1)²(k²+k+2)k^(n−1)`, cross-checked against the cofactor determinant.
pub fn det_lucas<S: Scalar>(p: &Param<S>, n: i64) -> Result<S> {
    let k = p.k().clone();
    let kp1 = k.clone() + S::one();
    let formula = kp1.square() * (k.square() + k + ints::<S>(2)) * p.k_pow(n - 1);
    let direct = lucas_power(p, n).det();
    if formula != direct {
        return Err(Error::Consistency(format!(
            "det j({n}): formula {formula} but cofactor expansion gives {direct}"
        )));
    }
    Ok(formula)
}

/// `M³ − (k−1)M² − (k−1)M − k·I`, which must vanish.
pub fn characteristic_residual<S: Scalar>(p: &Param<S>) -> Matrix3<S> {
    let m = generator(p);
    let m2 = m.mul_ref(&m);
    let m3 = m2.mul_ref(&m);
    m3 - m2.scale(p.k_minus_1()) - m.scale(p.k_minus_1()) - Matrix3::scalar(p.k().clone())
}

/// `N(0)` rebuilt as `(k−1)I + 2k·M⁻¹ + 2k·M⁻²`.
pub fn lucas_seed_from_inverse_powers<S: Scalar>(p: &Param<S>) -> Matrix3<S> {
    let two_k = ints::<S>(2) * p.k().clone();
    Matrix3::scalar(p.k_minus_1().clone())
        + jacobsthal_power(p, -1).scale(&two_k)
        + jacobsthal_power(p, -2).scale(&two_k)
}

/// `N(0)` rebuilt as `2M + (1−k)I + 2M⁻¹`.
pub fn lucas_seed_symmetric<S: Scalar>(p: &Param<S>) -> Matrix3<S> {
    let two = ints::<S>(2);
    generator(p).scale(&two)
        + Matrix3::scalar(-p.k_minus_1().clone())
        + jacobsthal_power(p, -1).scale(&two)
}

/// `KValue`-level evaluation; `M` and `N` need `n ≥ 0`.
pub fn matrix(k: &KValue, family: MatrixFamily, n: i64) -> Result<MatrixFamilyTerm> {
    if matches!(family, MatrixFamily::M | MatrixFamily::N) && n < 0 {
        return Err(Error::Domain(format!(
            "{family} is defined by recurrence for n >= 0 only, got {n}"
        )));
    }
    let matrix: MatrixValue = with_param!(k, |p| Ok::<_, Error>(match family {
        MatrixFamily::M => m_matrix(p, n as u64),
        MatrixFamily::N => n_matrix(p, n as u64),
        MatrixFamily::JPower => jacobsthal_power(p, n),
        MatrixFamily::LucasPower => lucas_power(p, n),
    }))?;
    Ok(MatrixFamilyTerm {
        family,
        index: n,
        k: k.clone(),
        matrix,
    })
}

pub fn det_j_formula(k: &KValue, n: i64) -> Result<Value> {
    with_param!(k, |p| det_lucas(p, n))
}

pub fn det_jac_formula(k: &KValue, n: i64) -> Result<Value> {
    with_param!(k, |p| det_jacobsthal(p, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Laurent, Rational};
    use crate::sequences::jac3_term;

    fn l(t: &[(i64, i64)]) -> Laurent {
        Laurent::from_ints(t)
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn seeds_of_recurrences() {
        let s = Param::symbolic();
        assert_eq!(m_matrix(&s, 0), Matrix3::identity());
        assert_eq!(m_matrix(&s, 1), generator(&s));
        assert_eq!(m_matrix(&s, 2), generator(&s).mul_ref(&generator(&s)));
        let n2 = n_matrix(&s, 2);
        assert_eq!(
            n2.rows()[0],
            [
                l(&[(3, 1), (1, 1)]),
                l(&[(3, 1), (0, -1)]),
                l(&[(3, 1), (1, 1)])
            ]
        );
        let n0 = n_matrix(&s, 0);
        assert_eq!(
            n0.rows()[2],
            [
                l(&[(-1, 2)]),
                l(&[(-1, 2)]),
                l(&[(1, -1), (0, -1), (-1, 2)])
            ]
        );
    }

    #[test]
    fn products_of_seeds() {
        let s = Param::symbolic();
        assert_eq!(lucas_seed(&s).mul_ref(&generator(&s)), n_seed_1(&s));
        assert_eq!(generator(&s).mul_ref(&lucas_seed(&s)), n_seed_1(&s));
        assert_eq!(Matrix3::identity().mul_ref(&generator(&s)), generator(&s));
        let two = Param::rational(2);
        assert_eq!(m_matrix(&two, 4), jacobsthal_power(&two, 4));
        assert_eq!(
            n_matrix(&two, 3),
            lucas_seed(&two).mul_ref(&jacobsthal_power(&two, 3))
        );
        assert_eq!(jacobsthal_power(&two, 5), m_matrix(&two, 5));
    }

    #[test]
    fn lucas_seed_at_two() {
        let m = lucas_seed(&Param::rational(2));
        let want =
            Matrix3::from_fn(|i, j| Rational::from_int([[1, 4, 4], [2, -1, 2], [1, 1, -2]][i][j]));
        assert_eq!(m, want);
        assert_eq!(m.det(), Rational::from_int(36));
    }

    #[test]
    fn negative_powers() {
        let s = Param::symbolic();
        let inv = jacobsthal_power(&s, -1);
        let rendered = inv.rendered();
        assert_eq!(
            rendered[2],
            ["k^-1".to_string(), "-1 + k^-1".into(), "-1 + k^-1".into()]
        );
        assert_eq!(assemble_jacobsthal(&s, -1), inv);
        let two = Param::rational(2);
        // j(−1) = 2J(0) + (1−k)J(−1) + 2J(−2) at k = 2
        let rhs = Matrix3::identity().scale(&Rational::from_int(2))
            + jacobsthal_power(&two, -1).scale(&Rational::from_int(-1))
            + jacobsthal_power(&two, -2).scale(&Rational::from_int(2));
        assert_eq!(lucas_power(&two, -1), rhs);
    }

    #[test]
    fn closed_form_assembly() {
        let s = Param::symbolic();
        assert_eq!(assemble_jacobsthal(&s, 1), generator(&s));
        assert_eq!(assemble_lucas(&s, 1), n_seed_1(&s));
        assert_eq!(assemble_lucas(&s, 0), lucas_seed(&s));
        let two = Param::rational(2);
        assert_eq!(assemble_jacobsthal(&two, 6), jacobsthal_power(&two, 6));
        assert_eq!(assemble_lucas(&two, 4), lucas_power(&two, 4));
        for n in -10..=15 {
            assert_eq!(
                assemble_jacobsthal(&s, n),
                jacobsthal_power(&s, n),
                "J at {n}"
            );
            assert_eq!(assemble_lucas(&s, n), lucas_power(&s, n), "j at {n}");
        }
    }

    #[test]
    fn second_row_first_column_is_j() {
        let p = Param::new(q(7, 3)).unwrap();
        for n in -6..=9 {
            assert_eq!(jacobsthal_power(&p, n)[(1, 0)], jac3_term(&p, n));
        }
    }

    #[test]
    fn determinants() {
        let s = Param::symbolic();
        assert_eq!(det_jacobsthal(&s, 3), Ok(l(&[(3, 1)])));
        assert_eq!(det_jacobsthal(&s, -1), Ok(l(&[(-1, 1)])));
        assert_eq!(
            det_jacobsthal(&Param::rational(2), 3),
            Ok(Rational::from_int(8))
        );
        assert_eq!(
            det_lucas(&Param::rational(2), 0),
            Ok(Rational::from_int(36))
        );
        assert_eq!(
            det_lucas(&Param::rational(2), 1),
            Ok(Rational::from_int(72))
        );
        // (k+1)²(k²+k+2) = k⁴ + 3k³ + 5k² + 5k + 2
        assert_eq!(
            det_lucas(&s, 1),
            Ok(l(&[(4, 1), (3, 3), (2, 5), (1, 5), (0, 2)]))
        );
    }

    #[test]
    fn commutation_and_characteristic_relation() {
        let s = Param::symbolic();
        let (m, n0) = (generator(&s), lucas_seed(&s));
        assert_eq!(n0.mul_ref(&m), m.mul_ref(&n0));
        assert_eq!(characteristic_residual(&s), Matrix3::zero());
        assert_eq!(lucas_seed_from_inverse_powers(&s), n0);
        assert_eq!(lucas_seed_symmetric(&s), n0);
    }

    #[test]
    fn kvalue_entry_point() {
        let sym = KValue::Symbolic;
        let t = matrix(&sym, MatrixFamily::M, 0).unwrap();
        assert_eq!(t.matrix, MatrixValue::Laurent(Matrix3::identity()));
        assert!(matrix(&sym, MatrixFamily::N, -1).is_err());
        assert!(matrix(&sym, MatrixFamily::LucasPower, -3).is_ok());
        assert_eq!(
            det_j_formula(&KValue::int(2).unwrap(), 0)
                .unwrap()
                .to_string(),
            "36"
        );
    }
}
