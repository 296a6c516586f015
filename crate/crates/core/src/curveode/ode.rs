use serde::{Deserialize, Serialize};

use crate::curveode::det::{expand_determinant, DEFAULT_SYMBOLIC_CAP};
use crate::curveode::matrix::build_sylvester_matrix;
use crate::error::{Error, Result};
use crate::invariants::dehomogenize;
use crate::json::{poly_to_json, psi_to_json, PolyJson, PsiJson};
use crate::render::{render_poly, render_psi, Notation, Style};
use crate::symfunc::{reexpress, to_semi_invariant_psi, Alphabet, VarId};
use crate::{MultiPoly, PsiExpression};

/// Basis an equation is presented in.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Basis {
    A,
    D,
    E,
    #[serde(rename = "psi")]
    Psi,
    #[serde(rename = "derivative")]
    Derivative,
}

#[derive(Clone, PartialEq, Debug)]
pub enum OdeForm {
    Lambda(MultiPoly),
    Psi(PsiExpression),
}

/// The differential equation of plane curves of degree `n`, normalized to
/// integer content 1 with a positive leading coefficient.
#[derive(Clone, PartialEq, Debug)]
pub struct CurveOde {
    pub n: u32,
    pub basis: Basis,
    pub form: OdeForm,
    /// The same equation in 𝒟, homogeneous with `Λ^0 𝒟` kept.
    pub d_form: MultiPoly,
    pub degree: u32,
    pub weight: u32,
}

impl CurveOde {
    pub fn lambda(&self) -> Option<&MultiPoly> {
        match &self.form {
            OdeForm::Lambda(p) => Some(p),
            OdeForm::Psi(_) => None,
        }
    }

    pub fn psi(&self) -> Option<&PsiExpression> {
        match &self.form {
            OdeForm::Psi(p) => Some(p),
            OdeForm::Lambda(_) => None,
        }
    }

    /// Left-hand side rendered in `style`, followed by `= 0`.
    pub fn render(&self, style: Style) -> String {
        let lhs = match (&self.form, self.basis) {
            (OdeForm::Psi(p), _) => render_psi(p, style),
            (OdeForm::Lambda(p), Basis::Derivative) => render_poly(p, style, Notation::Derivative),
            (OdeForm::Lambda(p), _) => render_poly(p, style, Notation::Lambda),
        };
        format!("{lhs} = 0")
    }

    pub fn to_json(&self) -> OdeJson {
        let (poly, psi) = match &self.form {
            OdeForm::Lambda(p) => (Some(poly_to_json(p)), None),
            OdeForm::Psi(p) => (None, Some(psi_to_json(p))),
        };
        OdeJson { n: self.n, basis: self.basis, degree: self.degree, weight: self.weight, poly, psi }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct OdeJson {
    pub n: u32,
    pub basis: Basis,
    pub degree: u32,
    pub weight: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub poly: Option<PolyJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub psi: Option<PsiJson>,
}

/// The expanded Sylvester determinant with `Λ^0 𝒟` symbolic.
pub fn sylvester_determinant(n: u32, cap: usize) -> Result<MultiPoly> {
    expand_determinant(&build_sylvester_matrix(n)?, cap)
}

pub fn curve_ode(n: u32, basis: Basis) -> Result<CurveOde> {
    curve_ode_with_cap(n, basis, DEFAULT_SYMBOLIC_CAP)
}

pub fn curve_ode_with_cap(n: u32, basis: Basis, cap: usize) -> Result<CurveOde> {
    let mut det = sylvester_determinant(n, cap)?;
    if n == 2 {
        // The conic determinant carries a spurious factor Λ^0𝒟 = y''/2.
        det = det
            .div_exact(&MultiPoly::var(VarId::d(0)))
            .ok_or_else(|| Error::NotDivisible("conic determinant by d0".into()))?;
    }
    let (_, d_form) = det.primitive_part();
    let is_d = |v: &VarId| v.alphabet() == Some(Alphabet::D);
    let degree = d_form.homogeneous_degree(is_d).expect("determinant is homogeneous");
    let weight = d_form.isobaric_weight().expect("determinant is isobaric");
    let form = match basis {
        Basis::D | Basis::Derivative => OdeForm::Lambda(d_form.clone()),
        Basis::A => OdeForm::Lambda(reexpress(&d_form, Alphabet::D, Alphabet::A)?.primitive_part().1),
        Basis::E => OdeForm::Lambda(reexpress(&d_form, Alphabet::D, Alphabet::E)?.primitive_part().1),
        Basis::Psi => {
            let unit = dehomogenize(&d_form, Alphabet::D);
            let e = reexpress(&unit, Alphabet::D, Alphabet::E)?;
            OdeForm::Psi(to_semi_invariant_psi(&e, Alphabet::E)?.primitive_part().1)
        }
    };
    Ok(CurveOde { n, basis, form, d_form, degree, weight })
}
