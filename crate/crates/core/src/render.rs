//! Human-readable renderings: plain text and LaTeX.

use num_traits::{One, Signed};

use crate::json::psi_terms_display;
use crate::poly::Monomial;
use crate::symfunc::{Alphabet, VarId};
use crate::{MultiPoly, PsiExpression, Rational};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Style {
    Text,
    Latex,
}

/// How `Λ` variables are spelled.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Notation {
    /// `d3`, `\Lambda_{3}` for 𝒟 and `\Lambda^{3}\mathbb{A}` otherwise.
    Lambda,
    /// 𝒟 variables as normalized derivatives, `(y'''/3!)` for `Λ^1 𝒟`.
    Derivative,
}

fn join_terms(terms: Vec<(Rational, String)>, style: Style) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (c, body)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let a = c.abs();
        if body.is_empty() {
            out.push_str(&coeff(&a, style));
        } else if a.is_one() {
            out.push_str(&body);
        } else {
            out.push_str(&coeff(&a, style));
            out.push_str(if style == Style::Text { "*" } else { " " });
            out.push_str(&body);
        }
    }
    out
}

fn coeff(a: &Rational, style: Style) -> String {
    match (style, a.is_integer()) {
        (_, true) => a.numer().to_string(),
        (Style::Text, false) => format!("{}/{}", a.numer(), a.denom()),
        (Style::Latex, false) => format!("\\frac{{{}}}{{{}}}", a.numer(), a.denom()),
    }
}

fn primes(k: u32) -> String {
    if k <= 4 {
        format!("y{}", "'".repeat(k as usize))
    } else {
        format!("y^({k})")
    }
}

fn factor(v: &VarId, e: u32, style: Style, notation: Notation) -> String {
    let base = match (style, notation, v) {
        (Style::Text, Notation::Derivative, VarId::Lambda(Alphabet::D, i)) => format!("({}/{}!)", primes(i + 2), i + 2),
        (Style::Latex, Notation::Derivative, VarId::Lambda(Alphabet::D, i)) => {
            let k = i + 2;
            let f = format!("\\frac{{y^{{({k})}}}}{{{k}!}}");
            return if e == 1 { f } else { format!("\\left({f}\\right)^{{{e}}}") };
        }
        (Style::Text, _, v) => v.to_string(),
        (Style::Latex, _, VarId::Lambda(Alphabet::D, i)) => format!("\\Lambda_{{{i}}}"),
        (Style::Latex, _, VarId::Lambda(a, i)) => {
            let letter = if *a == Alphabet::A { "\\mathbb{A}" } else { "\\mathcal{E}" };
            let f = format!("\\Lambda^{{{i}}}{letter}");
            return if e == 1 { f } else { format!("(\\Lambda^{{{i}}}{letter})^{{{e}}}") };
        }
        (Style::Latex, _, VarId::X) => "x".to_string(),
        (Style::Latex, _, VarId::XInv) => return format!("x^{{-{e}}}"),
    };
    match (e, style) {
        (1, _) => base,
        (_, Style::Text) => format!("{base}^{e}"),
        (_, Style::Latex) => format!("{base}^{{{e}}}"),
    }
}

fn monomial(m: &Monomial<VarId>, style: Style, notation: Notation) -> String {
    let sep = if style == Style::Text { "*" } else { "" };
    m.factors().iter().map(|(v, e)| factor(v, *e, style, notation)).collect::<Vec<_>>().join(sep)
}

pub fn render_poly(p: &MultiPoly, style: Style, notation: Notation) -> String {
    join_terms(
        p.terms_desc().map(|(m, c)| (c.clone(), monomial(m, style, notation))).collect(),
        style,
    )
}

pub fn render_psi(expr: &PsiExpression, style: Style) -> String {
    let terms = psi_terms_display(expr)
        .into_iter()
        .map(|(psis, c)| {
            let body = psis
                .iter()
                .map(|(i, e)| match (style, e) {
                    (Style::Text, 1) => format!("psi_{i}"),
                    (Style::Text, e) => format!("psi_{i}^{e}"),
                    (Style::Latex, 1) => format!("\\psi_{{{i}}}"),
                    (Style::Latex, e) => format!("\\psi_{{{i}}}^{{{e}}}"),
                })
                .collect::<Vec<_>>()
                .join(if style == Style::Text { "*" } else { "" });
            (c, body)
        })
        .collect();
    join_terms(terms, style)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(i: u32) -> MultiPoly {
        MultiPoly::var(VarId::d(i))
    }

    fn monge() -> MultiPoly {
        let int = |n: i64| Rational::from_integer(n.into());
        &(&d(0).pow(2) * &d(3)) - &(&(&d(0) * &d(1)) * &d(2)).scale(&int(3)) + d(1).pow(3).scale(&int(2))
    }

    #[test]
    fn monge_renderings() {
        assert_eq!(render_poly(&monge(), Style::Text, Notation::Lambda), "d0^2*d3 - 3*d0*d1*d2 + 2*d1^3");
        assert_eq!(
            render_poly(&monge(), Style::Text, Notation::Derivative),
            "(y''/2!)^2*(y^(5)/5!) - 3*(y''/2!)*(y'''/3!)*(y''''/4!) + 2*(y'''/3!)^3"
        );
        assert_eq!(
            render_poly(&monge(), Style::Latex, Notation::Lambda),
            "\\Lambda_{0}^{2}\\Lambda_{3} - 3 \\Lambda_{0}\\Lambda_{1}\\Lambda_{2} + 2 \\Lambda_{1}^{3}"
        );
    }

    #[test]
    fn psi_rendering_and_constants() {
        let h = crate::invariants::halphen_invariant();
        assert_eq!(render_psi(&h, Style::Text), "48*psi_5*psi_3 - 36*psi_4^2 + 12*psi_4*psi_2^2 - 20*psi_3^2*psi_2 - psi_2^4");
        assert_eq!(render_poly(&MultiPoly::zero(), Style::Text, Notation::Lambda), "0");
        let half = MultiPoly::constant(Rational::new((-1).into(), 2.into()));
        assert_eq!(render_poly(&half, Style::Latex, Notation::Lambda), "-\\frac{1}{2}");
    }
}
