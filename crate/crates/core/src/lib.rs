//! Exact third-order k-Jacobsthal and k-Jacobsthal–Lucas numbers, their 3×3
//! matrix sequences, and a checker for the identities relating them.
//!
//! Two base domains are supported: a fixed positive rational `k`
//! ([`Rational`]) and a symbolic `k` ([`Laurent`] polynomials). All arithmetic
//! is exact, so every identity check compares with plain equality.

pub mod algebra;
pub mod classic;
pub mod error;
pub mod identities;
mod kvalue;
pub mod matrices;
pub mod sequences;

pub use algebra::{Laurent, Matrix3, Omega, Rational, Scalar};
pub use error::{Error, Result};
pub use kvalue::{KValue, MatrixValue, Param, Value};
