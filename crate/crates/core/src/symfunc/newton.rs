//! Newton's identities between elementary symmetric functions `Λ^i` and
//! power sums `ψ_i`, in the unital convention `Λ^0 = 1`.


use crate::error::{Error, Result};
use crate::poly::{SubstituteWith, Variable};
use crate::symfunc::vars::{Alphabet, Psi, VarId};
use crate::{MultiPoly, PsiExpression, Rational};

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn sign(j: u32) -> Rational {
    if j % 2 == 1 {
        int(1)
    } else {
        int(-1)
    }
}

/// `[ψ_1, …, ψ_max]` written in `Λ^1…Λ^i` of `alphabet`.
pub fn psi_table(alphabet: Alphabet, max: u32) -> Vec<MultiPoly> {
    let e = |j: u32| MultiPoly::var(VarId::Lambda(alphabet, j));
    let mut psi: Vec<MultiPoly> = Vec::with_capacity(max as usize);
    for k in 1..=max {
        // ψ_k = Σ_{j<k} (-1)^{j-1} Λ^j ψ_{k-j} + (-1)^{k-1} k Λ^k
        let mut acc = e(k).scale(&(sign(k) * int(k as i64)));
        for j in 1..k {
            acc = acc + (&e(j) * &psi[(k - j - 1) as usize]).scale(&sign(j));
        }
        psi.push(acc);
    }
    psi
}

/// `[Λ^1, …, Λ^max]` written in `ψ_1…ψ_i`.
pub fn lambda_table(max: u32) -> Vec<PsiExpression> {
    let mut lam: Vec<PsiExpression> = vec![PsiExpression::one()];
    for k in 1..=max {
        // k Λ^k = Σ_{j=1}^{k} (-1)^{j-1} Λ^{k-j} ψ_j
        let mut acc = PsiExpression::zero();
        for j in 1..=k {
            acc = acc + (&lam[(k - j) as usize] * &PsiExpression::var(Psi(j))).scale(&sign(j));
        }
        lam.push(acc.scale(&Rational::new(1.into(), (k as i64).into())));
    }
    lam.remove(0);
    lam
}

/// `ψ_i` in the `Λ` variables of `alphabet`.
pub fn lambda_to_psi(alphabet: Alphabet, i: u32) -> MultiPoly {
    assert!(i >= 1, "power sums start at psi_1");
    psi_table(alphabet, i).pop().expect("nonempty table")
}

/// `Λ^i` as a polynomial in the power sums.
pub fn psi_to_lambda(i: u32) -> PsiExpression {
    assert!(i >= 1, "elementary functions start at index 1 here");
    lambda_table(i).pop().expect("nonempty table")
}

/// Expands a ψ-polynomial into the `Λ` variables of `alphabet`.
pub fn expand_psi(expr: &PsiExpression, alphabet: Alphabet) -> MultiPoly {
    let max = expr.variables().last().map_or(0, |p| p.0);
    let table = psi_table(alphabet, max);
    expr.substitute(|p: &Psi| SubstituteWith::Poly(table[p.0 as usize - 1].clone()))
}

/// Rewrites a polynomial in `Λ^1, Λ^2, …` of `alphabet` in the power-sum
/// basis. The polynomial must already be normalized to `Λ^0 = 1`.
pub fn to_psi_basis(p: &MultiPoly, alphabet: Alphabet) -> Result<PsiExpression> {
    let mut max = 0;
    for v in p.variables() {
        match v {
            VarId::Lambda(a, i) if a == alphabet && i >= 1 => max = max.max(i),
            other => {
                return Err(Error::ForeignVariable {
                    var: other.to_string(),
                    alphabet: format!("{alphabet} (indices >= 1)"),
                })
            }
        }
    }
    let table = lambda_table(max);
    Ok(p.substitute(|v: &VarId| {
        let i = v.lambda_index().expect("checked above");
        SubstituteWith::Poly(table[i as usize - 1].clone())
    }))
}

/// Like [`to_psi_basis`] but insists the result is free of `ψ_1`, i.e. lies
/// in the subring generated by `ψ_2, ψ_3, …`.
pub fn to_semi_invariant_psi(p: &MultiPoly, alphabet: Alphabet) -> Result<PsiExpression> {
    let expr = to_psi_basis(p, alphabet)?;
    if expr.variables().contains(&Psi(1)) {
        return Err(Error::NotInPsiSubring);
    }
    Ok(expr)
}

/// Total ψ-weight if every term has the same one.
pub fn psi_weight(expr: &PsiExpression) -> Option<u32> {
    if expr.is_zero() {
        return Some(0);
    }
    let mut ws = expr.terms().map(|(m, _)| m.factors().iter().map(|(p, e)| p.weight() * e).sum::<u32>());
    let first = ws.next()?;
    ws.all(|w| w == first).then_some(first)
}
