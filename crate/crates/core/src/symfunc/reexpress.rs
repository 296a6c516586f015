use crate::error::{Error, Result};
use crate::poly::{Polynomial, SubstituteWith};
use crate::scalar::{factorial, Scalar};
use crate::symfunc::vars::{Alphabet, VarId};

/// Rewrites `p` from one alphabet to another along the chain
/// `Λ^i 𝒟 = Λ^{i+2} 𝔸` and `Λ^i ℰ = Λ^i 𝒟 / i!`. Variables `x`, `1/x`
/// pass through unchanged.
pub fn reexpress<C: Scalar>(p: &Polynomial<VarId, C>, from: Alphabet, to: Alphabet) -> Result<Polynomial<VarId, C>> {
    for v in p.variables() {
        if let Some(a) = v.alphabet() {
            if a != from {
                return Err(Error::ForeignVariable { var: v.to_string(), alphabet: from.to_string() });
            }
            if from == Alphabet::A && to != Alphabet::A && v.lambda_index().unwrap() < 2 {
                return Err(Error::NotReexpressible(v.to_string()));
            }
        }
    }
    if from == to {
        return Ok(p.clone());
    }
    Ok(p.substitute(|v: &VarId| match *v {
        VarId::Lambda(_, i) => image(i, from, to),
        other => SubstituteWith::Var(other),
    }))
}

fn image<C: Scalar>(i: u32, from: Alphabet, to: Alphabet) -> SubstituteWith<VarId, C> {
    use Alphabet::*;
    // Walk to the 𝒟 index first, remembering the scalar picked up.
    let (d_index, to_d): (u32, C) = match from {
        A => (i - 2, C::one()),
        D => (i, C::one()),
        E => (i, C::one() / factorial::<C>(i)),
    };
    let (var, scalar) = match to {
        A => (VarId::a(d_index + 2), to_d),
        D => (VarId::d(d_index), to_d),
        E => (VarId::e(d_index), to_d * factorial::<C>(d_index)),
    };
    if scalar == C::one() {
        SubstituteWith::Var(var)
    } else {
        SubstituteWith::Poly(Polynomial::var(var).scale(&scalar))
    }
}
