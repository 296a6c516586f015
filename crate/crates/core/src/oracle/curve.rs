use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::format_fraction;
use crate::Rational;

const MAX_ATTEMPTS: u32 = 100;

/// A plane curve `u(x, y) = Σ c_ij x^i y^j = 0` of total degree at most `n`
/// with a smooth, non-vertical rational point on it.
#[derive(Clone, PartialEq, Debug)]
pub struct CurveInstance {
    n: u32,
    coefficients: BTreeMap<(u32, u32), Rational>,
    base_point: (Rational, Rational),
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct CurveJson {
    pub n: u32,
    /// `[i, j, "p/q"]` for the coefficient of `x^i y^j`.
    pub coefficients: Vec<(u32, u32, String)>,
    pub base_point: (String, String),
}

fn pow(x: &Rational, e: u32) -> Rational {
    num_traits::pow(x.clone(), e as usize)
}

impl CurveInstance {
    /// Checks `u(x0, y0) = 0`, `∂u/∂y(x0, y0) ≠ 0` and the degree bound.
    pub fn new(n: u32, coefficients: BTreeMap<(u32, u32), Rational>, base_point: (Rational, Rational)) -> Result<Self> {
        let coefficients: BTreeMap<_, _> = coefficients.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        if let Some(((i, j), _)) = coefficients.iter().find(|((i, j), _)| i + j > n) {
            return Err(Error::InvalidCurve(format!("term x^{i} y^{j} exceeds degree {n}")));
        }
        let c = CurveInstance { n, coefficients, base_point };
        let (x0, y0) = &c.base_point;
        if !c.value(x0, y0).is_zero() {
            return Err(Error::InvalidCurve("base point is not on the curve".into()));
        }
        if c.dy(x0, y0).is_zero() {
            return Err(Error::InvalidCurve("du/dy vanishes at the base point".into()));
        }
        Ok(c)
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn coefficients(&self) -> &BTreeMap<(u32, u32), Rational> {
        &self.coefficients
    }

    pub fn base_point(&self) -> &(Rational, Rational) {
        &self.base_point
    }

    /// Whether the `y^n` coefficient is exactly 1.
    pub fn is_monic(&self) -> bool {
        self.coefficients.get(&(0, self.n)).is_some_and(|c| c.is_one())
    }

    pub fn value(&self, x: &Rational, y: &Rational) -> Rational {
        self.coefficients
            .iter()
            .map(|(&(i, j), c)| c * pow(x, i) * pow(y, j))
            .fold(Rational::zero(), |a, b| a + b)
    }

    pub fn dy(&self, x: &Rational, y: &Rational) -> Rational {
        self.coefficients
            .iter()
            .filter(|(&(_, j), _)| j > 0)
            .map(|(&(i, j), c)| c * Rational::from_integer(j.into()) * pow(x, i) * pow(y, j - 1))
            .fold(Rational::zero(), |a, b| a + b)
    }

    pub fn to_json(&self) -> CurveJson {
        CurveJson {
            n: self.n,
            coefficients: self.coefficients.iter().map(|(&(i, j), c)| (i, j, format_fraction(c))).collect(),
            base_point: (format_fraction(&self.base_point.0), format_fraction(&self.base_point.1)),
        }
    }
}

fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-3i64..=3).into(), rng.gen_range(1i64..=3).into())
}

/// A random curve monic in `y^n` with integer coefficients in
/// `[-coeff_bound, coeff_bound]`, except for the constant term, which is
/// shifted so that a random rational point lies on the curve.
pub fn random_curve(n: u32, seed: u64, coeff_bound: i64) -> Result<CurveInstance> {
    if n < 1 {
        return Err(Error::DegreeTooSmall { min: 1, got: n });
    }
    assert!(coeff_bound >= 1, "coefficient bound must be positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let mut coefficients = BTreeMap::new();
        for total in 0..=n {
            for j in 0..=total {
                let c = if (total, j) == (n, n) { 1 } else { rng.gen_range(-coeff_bound..=coeff_bound) };
                coefficients.insert((total - j, j), Rational::from_integer(c.into()));
            }
        }
        let x0 = small_rational(&mut rng);
        let y0 = small_rational(&mut rng);
        let probe = CurveInstance { n, coefficients: coefficients.clone(), base_point: (x0.clone(), y0.clone()) };
        let offset = probe.value(&x0, &y0);
        *coefficients.get_mut(&(0, 0)).expect("constant term present") -= offset;
        // Degenerate points are resampled, never perturbed.
        if let Ok(c) = CurveInstance::new(n, coefficients, (x0, y0)) {
            return Ok(c);
        }
    }
    Err(Error::ResamplingExhausted(MAX_ATTEMPTS))
}
