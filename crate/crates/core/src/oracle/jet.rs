use num_traits::Zero;

use crate::oracle::curve::CurveInstance;
use crate::scalar::{binomial, factorial};
use crate::Rational;

/// Exact derivatives `y(x0), y'(x0), …, y^(order)(x0)` of the branch
/// through a curve's base point.
#[derive(Clone, PartialEq, Debug)]
pub struct DerivativeJet {
    values: Vec<Rational>,
}

impl DerivativeJet {
    pub fn from_values(values: Vec<Rational>) -> Self {
        assert!(!values.is_empty());
        DerivativeJet { values }
    }

    pub fn order(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// `D^i y = y^(i)/i!`.
    pub fn normalized(&self, i: usize) -> Rational {
        self.values[i].clone() / factorial::<Rational>(i as u32)
    }
}

fn mul_trunc(a: &[Rational], b: &[Rational], len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (j, y) in b.iter().enumerate().take(len.saturating_sub(i)) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Taylor coefficients of `y(x0 + t)` solved order by order from
/// `u(x0 + t, y(x0 + t)) = 0`: at order `k` the unknown coefficient enters
/// linearly through `∂u/∂y(x0, y0)`, which is nonzero.
pub fn implicit_jet(curve: &CurveInstance, order: usize) -> DerivativeJet {
    assert!(order >= 1, "jet order must be at least 1");
    let (x0, y0) = curve.base_point().clone();
    let n = curve.degree() as usize;
    // Coefficients of u(x0 + t, y0 + w) in t^p w^q.
    let mut shifted = vec![vec![Rational::zero(); n + 1]; n + 1];
    for (&(i, j), c) in curve.coefficients() {
        for p in 0..=i {
            for q in 0..=j {
                shifted[p as usize][q as usize] += c
                    * binomial::<Rational>(i as u64, p as u64)
                    * num_traits::pow(x0.clone(), (i - p) as usize)
                    * binomial::<Rational>(j as u64, q as u64)
                    * num_traits::pow(y0.clone(), (j - q) as usize);
            }
        }
    }
    let slope = shifted[0][1].clone();
    let len = order + 1;
    let mut w = vec![Rational::zero(); len];
    for k in 1..=order {
        let mut residual = Rational::zero();
        let mut w_pow = {
            let mut one = vec![Rational::zero(); len];
            one[0] = Rational::from_integer(1.into());
            one
        };
        #[allow(clippy::needless_range_loop)]
        for q in 0..=n {
            for p in 0..=k.min(n) {
                if !shifted[p][q].is_zero() {
                    residual += &shifted[p][q] * &w_pow[k - p];
                }
            }
            w_pow = mul_trunc(&w_pow, &w, len);
        }
        w[k] = -residual / &slope;
    }
    let mut values: Vec<Rational> = w.iter().enumerate().map(|(k, a)| a * factorial::<Rational>(k as u32)).collect();
    values[0] = y0;
    DerivativeJet { values }
}
