use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use super::Scalar;
use crate::error::{Error, Result};

/// A 3×3 matrix over a base ring, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix3<S> {
    rows: [[S; 3]; 3],
}

impl<S: Scalar> Matrix3<S> {
    pub fn new(rows: [[S; 3]; 3]) -> Self {
        Matrix3 { rows }
    }

    pub fn from_fn(f: impl Fn(usize, usize) -> S) -> Self {
        Matrix3 {
            rows: std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))),
        }
    }

    pub fn zero() -> Self {
        Self::from_fn(|_, _| S::zero())
    }

    pub fn identity() -> Self {
        Self::scalar(S::one())
    }

    /// `c·I`.
    pub fn scalar(c: S) -> Self {
        Self::from_fn(|i, j| if i == j { c.clone() } else { S::zero() })
    }

    pub fn rows(&self) -> &[[S; 3]; 3] {
        &self.rows
    }

    pub fn map<T>(&self, f: impl Fn(&S) -> T) -> [[T; 3]; 3] {
        std::array::from_fn(|i| std::array::from_fn(|j| f(&self.rows[i][j])))
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_fn(|i, j| self.rows[i][j].clone() * c.clone())
    }

    pub fn mul_ref(&self, rhs: &Self) -> Self {
        Self::from_fn(|i, j| {
            (0..3).fold(S::zero(), |acc, t| {
                acc + self.rows[i][t].clone() * rhs.rows[t][j].clone()
            })
        })
    }

    /// Cofactor expansion along the first row.
    pub fn det(&self) -> S {
        let m = &self.rows;
        let c0 = m[1][1].clone() * m[2][2].clone() - m[1][2].clone() * m[2][1].clone();
        let c1 = m[1][0].clone() * m[2][2].clone() - m[1][2].clone() * m[2][0].clone();
        let c2 = m[1][0].clone() * m[2][1].clone() - m[1][1].clone() * m[2][0].clone();
        m[0][0].clone() * c0 - m[0][1].clone() * c1 + m[0][2].clone() * c2
    }

    /// Transpose of the cofactor matrix, so `A·adj(A) = det(A)·I`.
    pub fn adjugate(&self) -> Self {
        let m = &self.rows;
        let minor = |r: usize, c: usize| {
            let rs: Vec<usize> = (0..3).filter(|&x| x != r).collect();
            let cs: Vec<usize> = (0..3).filter(|&x| x != c).collect();
            m[rs[0]][cs[0]].clone() * m[rs[1]][cs[1]].clone()
                - m[rs[0]][cs[1]].clone() * m[rs[1]][cs[0]].clone()
        };
        Self::from_fn(|i, j| {
            let v = minor(j, i);
            if (i + j) % 2 == 0 {
                v
            } else {
                -v
            }
        })
    }

    /// Adjugate divided by the determinant; needs `det` to be a unit.
    pub fn inverse(&self) -> Result<Self> {
        let det = self.det();
        let inv = det
            .unit_inverse()
            .ok_or_else(|| Error::NonUnitDeterminant {
                det: det.to_string(),
            })?;
        Ok(self.adjugate().scale(&inv))
    }

    /// `selfⁿ` by square-and-multiply on `|n|`, inverting once when `n < 0`.
    pub fn pow(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.inverse()? } else { self.clone() };
        Ok(base.pow_u(n.unsigned_abs()))
    }

    fn pow_u(mut self, mut e: u64) -> Self {
        let mut acc = Self::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&self);
            }
            e >>= 1;
            if e > 0 {
                self = self.mul_ref(&self);
            }
        }
        acc
    }

    /// Rows of rendered entries, the JSON/CSV payload for the CLI.
    pub fn rendered(&self) -> [[String; 3]; 3] {
        self.map(|s| s.to_string())
    }

    /// Column-aligned text grid, one row per line, no trailing newline.
    pub fn pretty_grid(&self) -> String {
        let cells = self.rendered();
        let widths: [usize; 3] =
            std::array::from_fn(|j| (0..3).map(|i| cells[i][j].len()).max().unwrap_or(0));
        cells
            .iter()
            .map(|row| {
                let padded: Vec<String> = row
                    .iter()
                    .zip(widths)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect();
                format!("[ {} ]", padded.join("  "))
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl<S> Index<(usize, usize)> for Matrix3<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.rows[i][j]
    }
}

impl<S: Scalar> Mul for Matrix3<S> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl<'a, S: Scalar> Mul<&'a Matrix3<S>> for &'a Matrix3<S> {
    type Output = Matrix3<S>;
    fn mul(self, rhs: &'a Matrix3<S>) -> Matrix3<S> {
        self.mul_ref(rhs)
    }
}

impl<S: Scalar> Add for Matrix3<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| self.rows[i][j].clone() + rhs.rows[i][j].clone())
    }
}

impl<S: Scalar> Sub for Matrix3<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| self.rows[i][j].clone() - rhs.rows[i][j].clone())
    }
}

impl<S: Scalar> Neg for Matrix3<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::from_fn(|i, j| -self.rows[i][j].clone())
    }
}

impl<S: Scalar> fmt::Display for Matrix3<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.rendered();
        write!(
            f,
            "[[{}], [{}], [{}]]",
            r[0].join(", "),
            r[1].join(", "),
            r[2].join(", ")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Laurent, Rational};

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn qm(rows: [[i64; 3]; 3]) -> Matrix3<Rational> {
        Matrix3::from_fn(|i, j| Rational::from_int(rows[i][j]))
    }

    /// Generator matrix with rows [k−1, k−1, k], [1, 0, 0], [0, 1, 0].
    fn gen_sym() -> Matrix3<Laurent> {
        let k = Laurent::k();
        let km1 = k.clone() - Laurent::one();
        let (o, z) = (Laurent::one(), Laurent::zero());
        Matrix3::new([
            [km1.clone(), km1, k],
            [o.clone(), z.clone(), z.clone()],
            [z.clone(), o, z],
        ])
    }

    fn l(t: &[(i64, i64)]) -> Laurent {
        Laurent::from_ints(t)
    }

    #[test]
    fn determinant() {
        assert_eq!(gen_sym().det(), Laurent::k());
        assert_eq!(Matrix3::<Rational>::identity().det(), Rational::one());
        // N_{2,0}
        let n20 = qm([[1, 4, 4], [2, -1, 2], [1, 1, -2]]);
        assert_eq!(n20.det(), Rational::from_int(36));
    }

    #[test]
    fn inverse_of_generator() {
        let inv = gen_sym().inverse().unwrap();
        let (o, z) = (Laurent::one(), Laurent::zero());
        let one_minus_k_over_k = l(&[(-1, 1), (0, -1)]);
        let expected = Matrix3::new([
            [z.clone(), o.clone(), z.clone()],
            [z.clone(), z, o],
            [
                l(&[(-1, 1)]),
                one_minus_k_over_k.clone(),
                one_minus_k_over_k,
            ],
        ]);
        assert_eq!(inv, expected);
        assert_eq!(&gen_sym() * &inv, Matrix3::identity());
        assert_eq!(
            Matrix3::<Laurent>::identity().inverse().unwrap(),
            Matrix3::identity()
        );
    }

    #[test]
    fn singular_matrices_are_rejected() {
        assert!(matches!(
            Matrix3::<Rational>::zero().inverse(),
            Err(Error::NonUnitDeterminant { .. })
        ));
        // det = k + 1 is not a Laurent unit
        let m = Matrix3::new([
            [l(&[(1, 1), (0, 1)]), Laurent::zero(), Laurent::zero()],
            [Laurent::zero(), Laurent::one(), Laurent::zero()],
            [Laurent::zero(), Laurent::zero(), Laurent::one()],
        ]);
        assert!(m.inverse().is_err());
        assert!(Matrix3::<Rational>::zero().pow(-1).is_err());
    }

    #[test]
    fn powers() {
        let m = gen_sym();
        assert_eq!(m.pow(0).unwrap(), Matrix3::identity());
        let m2 = m.pow(2).unwrap();
        assert_eq!(m2, &m * &m);
        // first row of M_{k,2}: k² − k, k² − k + 1, k² − k
        assert_eq!(m2[(0, 0)], l(&[(2, 1), (1, -1)]));
        assert_eq!(m2[(0, 1)], l(&[(2, 1), (1, -1), (0, 1)]));
        assert_eq!(m2[(0, 2)], l(&[(2, 1), (1, -1)]));
        let m_2 = m.pow(-2).unwrap();
        // third row of M^{-2}: (1−k)/k², (1−k+k²)/k², (1−k)/k²
        assert_eq!(m_2[(2, 0)], l(&[(-2, 1), (-1, -1)]));
        assert_eq!(m_2[(2, 1)], l(&[(-2, 1), (-1, -1), (0, 1)]));
        assert_eq!(m_2[(2, 2)], l(&[(-2, 1), (-1, -1)]));
        assert_eq!(&m2 * &m_2, Matrix3::identity());
    }

    #[test]
    fn adjugate_identity() {
        let a = Matrix3::from_fn(|i, j| q((i * 3 + j) as i64 * 7 % 5 - 2, (j + 1) as i64));
        assert_eq!(&a * &a.adjugate(), Matrix3::scalar(a.det()));
    }

    #[test]
    fn rendering() {
        let m = qm([[1, 4, 4], [2, -1, 2], [1, 1, -2]]);
        assert_eq!(
            m.pretty_grid(),
            "[ 1   4   4 ]\n[ 2  -1   2 ]\n[ 1   1  -2 ]"
        );
        assert_eq!(m.to_string(), "[[1, 4, 4], [2, -1, 2], [1, 1, -2]]");
    }
}
