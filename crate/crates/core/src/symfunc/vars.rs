use std::fmt;

use serde::{Deserialize, Serialize};

use crate::poly::Variable;

/// The three alphabets of the construction: 𝔸 (normalized derivatives of
/// `y`), 𝒟 (𝔸 shifted by two) and ℰ (𝒟 rescaled by `1/i!`).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Alphabet {
    A,
    D,
    E,
}

impl Alphabet {
    pub fn name(self) -> &'static str {
        match self {
            Alphabet::A => "A",
            Alphabet::D => "D",
            Alphabet::E => "E",
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An indeterminate of [`MultiPoly`](crate::MultiPoly).
///
/// Variants order as `Λ(A, i) < Λ(D, i) < Λ(E, i) < x < 1/x`, which is also
/// the canonical variable order of every polynomial.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum VarId {
    /// `Λ^index` of an alphabet.
    Lambda(Alphabet, u32),
    /// The auxiliary indeterminate `x`.
    X,
    /// The formal letter `1/x`; multiplying it by `x` gives the unit.
    XInv,
}

impl VarId {
    pub fn a(i: u32) -> Self {
        VarId::Lambda(Alphabet::A, i)
    }

    pub fn d(i: u32) -> Self {
        VarId::Lambda(Alphabet::D, i)
    }

    pub fn e(i: u32) -> Self {
        VarId::Lambda(Alphabet::E, i)
    }

    pub fn alphabet(&self) -> Option<Alphabet> {
        match self {
            VarId::Lambda(a, _) => Some(*a),
            _ => None,
        }
    }

    pub fn lambda_index(&self) -> Option<u32> {
        match self {
            VarId::Lambda(_, i) => Some(*i),
            _ => None,
        }
    }

    /// Tag and index used by the JSON form, e.g. `("A", 3)` or `("X", 0)`.
    pub fn tag(&self) -> (&'static str, u32) {
        match self {
            VarId::Lambda(a, i) => (a.name(), *i),
            VarId::X => ("X", 0),
            VarId::XInv => ("Xinv", 0),
        }
    }

    pub fn from_tag(tag: &str, index: u32) -> Option<Self> {
        match (tag, index) {
            ("A", i) => Some(VarId::a(i)),
            ("D", i) => Some(VarId::d(i)),
            ("E", i) => Some(VarId::e(i)),
            ("X", 0) => Some(VarId::X),
            ("Xinv", 0) => Some(VarId::XInv),
            _ => None,
        }
    }
}

impl Variable for VarId {
    fn inverse(&self) -> Option<Self> {
        match self {
            VarId::X => Some(VarId::XInv),
            VarId::XInv => Some(VarId::X),
            VarId::Lambda(..) => None,
        }
    }

    fn weight(&self) -> u32 {
        self.lambda_index().unwrap_or(0)
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarId::Lambda(a, i) => write!(f, "{}{}", a.name().to_ascii_lowercase(), i),
            VarId::X => f.write_str("x"),
            VarId::XInv => f.write_str("xinv"),
        }
    }
}

/// The power sum `ψ_i`, generator of a [`PsiExpression`](crate::PsiExpression).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Psi(pub u32);

impl Variable for Psi {
    fn weight(&self) -> u32 {
        self.0
    }
}

impl fmt::Display for Psi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "psi_{}", self.0)
    }
}
