//! Exact computer algebra for nilpotent (paragrassmannian) deformations of
//! sl(2).
//!
//! The crate builds finite-dimensional spin representations of the deformed
//! algebra over truncated series rings in one central nilpotent variable θ
//! (or two anticommuting ones), and mechanically verifies the structure
//! attached to them: commutation relations, graded component sums, the Hopf
//! axioms under the degree-truncating tensor product, the order-1 R-matrix
//! with its Yang-Baxter equation, Campbell-Baker-Hausdorff composition of
//! nilpotent exponentials, and the nonlinear large-n limit algebras. All
//! arithmetic is over arbitrary-precision rationals, so every verdict is
//! exact; failed identities are reported with a concrete witness entry.

pub mod bitheta;
pub mod cbh;
pub mod error;
pub mod hopf;
pub mod hpoly;
pub mod lambda;
pub mod limits;
pub mod matrix;
pub mod psi;
pub mod rational;
pub mod rep;
pub mod report;
pub mod ring;
pub mod rmatrix;
pub mod theta;

pub use error::{AlgebraError, Result};
pub use rational::Rational;
pub use ring::Ring;
