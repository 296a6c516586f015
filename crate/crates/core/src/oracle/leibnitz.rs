use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::Monomial;
use crate::scalar::binomial;
use crate::symfunc::{series_of_alphabet, series_power, Alphabet, AlphabetSeries, VarId};
use crate::{MultiPoly, Rational};

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `f^(n)(x0)/n!` for `f` given by ascending coefficients.
fn taylor_coefficient(f: &[Rational], n: usize, x0: &Rational) -> Rational {
    f.iter()
        .enumerate()
        .skip(n)
        .map(|(d, c)| c * binomial::<Rational>(d as u64, n as u64) * num_traits::pow(x0.clone(), d - n))
        .fold(Rational::zero(), |a, b| a + b)
}

/// Checks `D^n(x^r y^k) = x^r Λ^n(k𝔸 + r/x)` at `x0` for the polynomial
/// `y(x) = Σ y_poly[i] x^i`.
///
/// The left side expands `x^r y^k` and reads off its Taylor coefficient.
/// The right side adds `r` copies of the formal letter `1/x` to `k𝔸`,
/// multiplies by `x^r` (which cancels every `1/x`), and evaluates with
/// `Λ^i 𝔸 = D^i y(x0)`.
pub fn leibnitz_check(n: u32, k: u32, r: u32, y_poly: &[Rational], x0: &Rational) -> Result<bool> {
    if r > 0 && x0.is_zero() {
        return Err(Error::ZeroBasePoint);
    }
    let n_us = n as usize;
    let mut product = vec![Rational::zero(); r as usize];
    product.push(Rational::from_integer(1.into()));
    for _ in 0..k {
        product = poly_mul(&product, y_poly);
    }
    let lhs = taylor_coefficient(&product, n_us, x0);

    let series = match k {
        0 => AlphabetSeries::one(n_us),
        k => series_power(&series_of_alphabet::<Rational>(Alphabet::A, n_us), k),
    };
    let shifted = series.add_letter(r, &MultiPoly::var(VarId::XInv))?;
    let rhs_poly = shifted.coeff(n as i64).mul_monomial(&Monomial::var_pow(VarId::X, r));
    let rhs = rhs_poly.evaluate(|v| match v {
        VarId::X => Some(x0.clone()),
        VarId::Lambda(Alphabet::A, i) => Some(taylor_coefficient(y_poly, *i as usize, x0)),
        _ => None,
    })?;
    Ok(lhs == rhs)
}
