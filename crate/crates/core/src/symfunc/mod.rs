//! Symmetric-function calculus on formal alphabets.
//!
//! The normalized derivatives `D^i y = y^(i)/i!` are read as the elementary
//! symmetric functions `Λ^i 𝔸` of a formal alphabet 𝔸, so that powers of a
//! generating series realize multiples `k𝔸` of the alphabet and products
//! with `(1 + z x)^r` add letters.

mod newton;
mod reexpress;
mod series;
mod vars;

pub use newton::{expand_psi, lambda_table, lambda_to_psi, psi_table, psi_to_lambda, psi_weight, to_psi_basis, to_semi_invariant_psi};
pub use reexpress::reexpress;
pub use series::{lambda_of_multiple, series_of_alphabet, series_power, AlphabetSeries, MultiplePowers};
pub use vars::{Alphabet, Psi, VarId};
