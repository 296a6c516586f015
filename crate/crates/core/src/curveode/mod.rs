//! Elimination matrices, their determinants, and the normalized equation.

mod det;
mod matrix;
mod ode;

pub use det::{bareiss_determinant, evaluate_determinant, expand_determinant, laplace_determinant, DEFAULT_SYMBOLIC_CAP};
pub use matrix::{build_full_matrix, build_sylvester_matrix, columns, side, sylvester_top, top_order, LambdaMatrix, MatrixBasis};
pub use ode::{curve_ode, curve_ode_with_cap, sylvester_determinant, Basis, CurveOde, OdeForm, OdeJson};
