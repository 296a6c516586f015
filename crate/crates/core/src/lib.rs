//! Exact construction and verification of the differential equation
//! satisfied by a generic plane algebraic curve of degree `n`.
//!
//! Derivatives `D^i y = y^(i)/i!` are treated as elementary symmetric
//! functions of a formal alphabet. Eliminating the curve's coefficients
//! from `D^{n+1} u = … = D^{n(n+3)/2} u = 0` yields a determinant whose
//! entries are `Λ^i(k𝔸)`; expanding it gives the equation (Monge's for
//! conics). The [`invariants`] module checks the result against the
//! translation derivation and the power-sum form of the Monge and Halphen
//! invariants, and [`oracle`] verifies everything on random rational curves
//! by exact implicit differentiation.
//!
//! Polynomials, series and determinants are generic over a
//! [`Scalar`](scalar::Scalar) coefficient field; the aliases below fix it to
//! exact rationals, which is what every public pipeline uses.

pub mod curveode;
pub mod error;
pub mod invariants;
pub mod json;
pub mod oracle;
pub mod poly;
pub mod render;
pub mod scalar;
pub mod symfunc;

pub use error::{Error, Result};

/// Exact rational with arbitrary-precision numerator and denominator.
pub type Rational = num_rational::BigRational;
/// Polynomial over `Rational` in `Λ` variables and `x`.
pub type MultiPoly = poly::Polynomial<symfunc::VarId, Rational>;
/// Polynomial over `Rational` in the power sums `ψ_i`.
pub type PsiExpression = poly::Polynomial<symfunc::Psi, Rational>;
/// Elimination matrix with rational polynomial entries.
pub type PolyMatrix = curveode::LambdaMatrix<Rational>;
