//! Exact commutative-ring arithmetic: rationals, Laurent polynomials in `k`,
//! the ω-extension, and 3×3 matrices.

mod laurent;
mod matrix;
mod omega;
mod rational;
mod scalar;

pub use laurent::Laurent;
pub use matrix::Matrix3;
pub use omega::Omega;
pub use rational::Rational;
pub use scalar::Scalar;
