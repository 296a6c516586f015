//! Wire formats.
//!
//! A [`MultiPoly`] is written as
//! `{"vars":[["A",3],...],"terms":[{"coeff":"-3/2","monomial":[[0,2],...]}]}`:
//! `vars` lists the variables in canonical order, monomials refer to them by
//! position, coefficients are `p/q` strings and terms run from the greatest
//! monomial down. A [`PsiExpression`] is `{"terms":[{"coeff":"48/1",
//! "psis":[[5,1],[3,1]]}]}` with power sums listed by descending index.
//! Both forms round-trip byte for byte.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::curveode::{LambdaMatrix, MatrixBasis};
use crate::error::{Error, Result};
use crate::poly::Monomial;
use crate::scalar::{format_fraction, parse_rational};
use crate::symfunc::{Psi, VarId};
use crate::{MultiPoly, PolyMatrix, PsiExpression, Rational};

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct PolyJson {
    pub vars: Vec<(String, u32)>,
    pub terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct TermJson {
    pub coeff: String,
    pub monomial: Vec<(usize, u32)>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct PsiJson {
    pub terms: Vec<PsiTermJson>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct PsiTermJson {
    pub coeff: String,
    pub psis: Vec<(u32, u32)>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct MatrixJson {
    pub n: u32,
    pub basis: MatrixBasis,
    pub side: usize,
    pub entries: Vec<PolyJson>,
}

pub fn poly_to_json(p: &MultiPoly) -> PolyJson {
    let vars = p.variables();
    let position: BTreeMap<VarId, usize> = vars.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    PolyJson {
        vars: vars.iter().map(|v| {
            let (tag, i) = v.tag();
            (tag.to_string(), i)
        }).collect(),
        terms: p
            .terms_desc()
            .map(|(m, c)| TermJson {
                coeff: format_fraction(c),
                monomial: m.factors().iter().map(|(v, e)| (position[v], *e)).collect(),
            })
            .collect(),
    }
}

pub fn poly_from_json(j: &PolyJson) -> Result<MultiPoly> {
    let vars = j
        .vars
        .iter()
        .map(|(tag, i)| VarId::from_tag(tag, *i).ok_or_else(|| Error::Parse(format!("unknown variable [{tag:?}, {i}]"))))
        .collect::<Result<Vec<_>>>()?;
    let mut p = MultiPoly::zero();
    for t in &j.terms {
        let c = parse_coeff(&t.coeff)?;
        let factors = t
            .monomial
            .iter()
            .map(|(idx, e)| vars.get(*idx).map(|v| (*v, *e)).ok_or_else(|| Error::Parse(format!("variable index {idx} out of range"))))
            .collect::<Result<Vec<_>>>()?;
        p.add_term(Monomial::from_factors(factors), c);
    }
    Ok(p)
}

fn parse_coeff(s: &str) -> Result<Rational> {
    parse_rational(s).ok_or_else(|| Error::Parse(format!("bad coefficient {s:?}")))
}

pub fn poly_to_string(p: &MultiPoly) -> String {
    serde_json::to_string(&poly_to_json(p)).expect("serializable")
}

pub fn poly_from_str(s: &str) -> Result<MultiPoly> {
    let j: PolyJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    poly_from_json(&j)
}

/// Terms of a ψ-expression in display order: the factor lists, read from the
/// highest index down, compared lexicographically, greatest first.
pub fn psi_terms_display(expr: &PsiExpression) -> Vec<(Vec<(u32, u32)>, Rational)> {
    let mut terms: Vec<(Vec<(u32, u32)>, Rational)> = expr
        .terms()
        .map(|(m, c)| (m.factors().iter().rev().map(|(p, e)| (p.0, *e)).collect(), c.clone()))
        .collect();
    terms.sort_by(|a, b| b.0.cmp(&a.0));
    terms
}

pub fn psi_to_json(expr: &PsiExpression) -> PsiJson {
    PsiJson {
        terms: psi_terms_display(expr)
            .into_iter()
            .map(|(psis, c)| PsiTermJson { coeff: format_fraction(&c), psis })
            .collect(),
    }
}

pub fn psi_from_json(j: &PsiJson) -> Result<PsiExpression> {
    let mut p = PsiExpression::zero();
    for t in &j.terms {
        let c = parse_coeff(&t.coeff)?;
        if t.psis.iter().any(|(i, _)| *i == 0) {
            return Err(Error::Parse("power sums start at psi_1".into()));
        }
        p.add_term(Monomial::from_factors(t.psis.iter().map(|(i, e)| (Psi(*i), *e))), c);
    }
    Ok(p)
}

pub fn psi_to_string(expr: &PsiExpression) -> String {
    serde_json::to_string(&psi_to_json(expr)).expect("serializable")
}

pub fn psi_from_str(s: &str) -> Result<PsiExpression> {
    let j: PsiJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    psi_from_json(&j)
}

pub fn matrix_to_json(m: &PolyMatrix) -> MatrixJson {
    MatrixJson {
        n: m.degree(),
        basis: m.basis(),
        side: m.side(),
        entries: m.entries().iter().map(poly_to_json).collect(),
    }
}

pub fn matrix_from_json(j: &MatrixJson) -> Result<PolyMatrix> {
    if j.entries.len() != j.side * j.side {
        return Err(Error::Parse(format!("{} entries for side {}", j.entries.len(), j.side)));
    }
    let entries = j.entries.iter().map(poly_from_json).collect::<Result<Vec<_>>>()?;
    Ok(LambdaMatrix::from_entries(j.n, j.basis, j.side, entries))
}
