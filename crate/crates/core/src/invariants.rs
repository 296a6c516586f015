//! Translation derivations, semi-invariants and the Monge and Halphen
//! invariants.
//!
//! The derivations act on the unital ring `Λ^0 = 1`: callers normalize with
//! [`dehomogenize`] first and go back with [`homogenize`].

use crate::error::{Error, Result};
use crate::poly::{Monomial, SubstituteWith};
use crate::scalar::Scalar;
use crate::symfunc::{expand_psi, Alphabet, Psi, VarId};
use crate::{MultiPoly, PsiExpression, Rational};

/// `∇_𝒟 : Λ^i ↦ i Λ^{i-1}` or `∇_ℰ : Λ^i ↦ Λ^{i-1}`, extended as a
/// derivation, with `Λ^0 = 1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Derivation {
    alphabet: Alphabet,
}

impl Derivation {
    pub fn new(alphabet: Alphabet) -> Self {
        assert!(alphabet != Alphabet::A, "translation derivations act on D or E");
        Derivation { alphabet }
    }

    pub fn nabla_d() -> Self {
        Self::new(Alphabet::D)
    }

    pub fn nabla_e() -> Self {
        Self::new(Alphabet::E)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    fn image(&self, i: u32) -> MultiPoly {
        let lower = if i == 1 { MultiPoly::one() } else { MultiPoly::var(VarId::Lambda(self.alphabet, i - 1)) };
        match self.alphabet {
            Alphabet::D => lower.scale(&Rational::from_u64_exact(i as u64)),
            _ => lower,
        }
    }

    pub fn apply(&self, p: &MultiPoly) -> Result<MultiPoly> {
        let vars = p.variables();
        for v in &vars {
            match v {
                VarId::Lambda(a, i) if *a == self.alphabet && *i >= 1 => {}
                other => {
                    return Err(Error::ForeignVariable {
                        var: other.to_string(),
                        alphabet: format!("{} (indices >= 1, Λ^0 normalized)", self.alphabet),
                    })
                }
            }
        }
        Ok(vars.iter().fold(MultiPoly::zero(), |acc, v| {
            let i = v.lambda_index().expect("checked");
            acc + &p.derivative(v) * &self.image(i)
        }))
    }
}

pub fn nabla(d: &Derivation, p: &MultiPoly) -> Result<MultiPoly> {
    d.apply(p)
}

pub fn is_semi_invariant(p: &MultiPoly, alphabet: Alphabet) -> Result<bool> {
    Ok(Derivation::new(alphabet).apply(p)?.is_zero())
}

/// Substitutes `Λ^0 := 1` in `alphabet`.
pub fn dehomogenize(p: &MultiPoly, alphabet: Alphabet) -> MultiPoly {
    let unit = VarId::Lambda(alphabet, 0);
    p.substitute(|v: &VarId| {
        if *v == unit {
            SubstituteWith::Poly(MultiPoly::one())
        } else {
            SubstituteWith::Var(*v)
        }
    })
}

/// Pads every monomial with powers of `Λ^0` up to `target` total degree in
/// `alphabet`.
pub fn homogenize(p: &MultiPoly, alphabet: Alphabet, target: u32) -> Result<MultiPoly> {
    let unit = VarId::Lambda(alphabet, 0);
    let mut out = MultiPoly::zero();
    for (m, c) in p.terms() {
        let degree = m.degree_in(|v| v.alphabet() == Some(alphabet));
        if degree > target {
            return Err(Error::HomogenizeDegree { degree, target });
        }
        out.add_term(m.mul(&Monomial::var_pow(unit, target - degree)), c.clone());
    }
    Ok(out)
}

/// Expands a ψ-expression in `alphabet` and homogenizes it.
pub fn homogenize_psi(expr: &PsiExpression, alphabet: Alphabet, target: u32) -> Result<MultiPoly> {
    homogenize(&expand_psi(expr, alphabet), alphabet, target)
}

fn psi_monomial(coeff: i64, factors: &[(u32, u32)]) -> PsiExpression {
    PsiExpression::term(
        Rational::from_integer(coeff.into()),
        Monomial::from_factors(factors.iter().map(|&(i, e)| (Psi(i), e))),
    )
}

/// `ψ_3`, whose vanishing in ℰ is the equation of conics.
pub fn monge_invariant() -> PsiExpression {
    PsiExpression::var(Psi(3))
}

/// `48ψ5ψ3 − 20ψ3²ψ2 − ψ2⁴ + 12ψ2²ψ4 − 36ψ4²`.
pub fn halphen_invariant() -> PsiExpression {
    [
        psi_monomial(48, &[(5, 1), (3, 1)]),
        psi_monomial(-20, &[(3, 2), (2, 1)]),
        psi_monomial(-1, &[(2, 4)]),
        psi_monomial(12, &[(2, 2), (4, 1)]),
        psi_monomial(-36, &[(4, 2)]),
    ]
    .into_iter()
    .fold(PsiExpression::zero(), |a, b| a + b)
}
