//! Independent checks on concrete curves.
//!
//! Derivatives of an implicit branch are computed here by plain univariate
//! series arithmetic on rationals, with no use of the symmetric-function
//! machinery, so vanishing on these jets is a genuine test of the equations.

mod curve;
mod jet;
mod leibnitz;
mod verify;

pub use curve::{random_curve, CurveInstance, CurveJson};
pub use jet::{implicit_jet, DerivativeJet};
pub use leibnitz::leibnitz_check;
pub use verify::{check_vanishing, full_assignment, sylvester_assignment, verify_degree, verify_degree_with_cap, Failure, Mode, Report};
