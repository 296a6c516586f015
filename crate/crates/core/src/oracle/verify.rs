use std::collections::BTreeMap;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::curveode::{
    build_full_matrix, build_sylvester_matrix, curve_ode_with_cap, evaluate_determinant, top_order, Basis, CurveOde, OdeForm,
    DEFAULT_SYMBOLIC_CAP,
};
use crate::error::{Error, Result};
use crate::invariants::homogenize_psi;
use crate::oracle::curve::{random_curve, CurveJson};
use crate::oracle::jet::{implicit_jet, DerivativeJet};
use crate::scalar::{factorial, format_fraction};
use crate::symfunc::{Alphabet, VarId};
use crate::{MultiPoly, PolyMatrix, Rational};

const COEFF_BOUND: i64 = 5;
const DISCRIMINATION_RESAMPLES: u32 = 10;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Symbolic,
    Numeric,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub trial: u32,
    pub curve: CurveJson,
    pub value: String,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub n: u32,
    pub mode: Mode,
    pub trials: u32,
    pub passes: u32,
    pub discrimination_nonzero: u32,
    pub accidental_zeros: u32,
    pub seed: u64,
    pub failures: Vec<Failure>,
}

impl Report {
    /// Accidental zeros must stay under a fifth of the trials.
    pub fn discrimination_ok(&self) -> bool {
        self.accidental_zeros * 5 < self.trials
    }

    pub fn is_success(&self) -> bool {
        self.failures.is_empty() && self.passes == self.trials && self.discrimination_ok()
    }
}

/// Value of `D^i y` under the identification used by `alphabet`.
fn lambda_value(jet: &DerivativeJet, alphabet: Alphabet, i: u32) -> Rational {
    match alphabet {
        Alphabet::A => jet.normalized(i as usize),
        Alphabet::D => jet.normalized(i as usize + 2),
        Alphabet::E => jet.normalized(i as usize + 2) / factorial::<Rational>(i),
    }
}

fn highest_order(p: &MultiPoly) -> Result<usize> {
    let mut top = 0;
    for v in p.variables() {
        match v {
            VarId::Lambda(Alphabet::A, i) => top = top.max(i as usize),
            VarId::Lambda(_, i) => top = top.max(i as usize + 2),
            other => return Err(Error::ForeignVariable { var: other.to_string(), alphabet: "A, D or E".into() }),
        }
    }
    Ok(top)
}

/// Evaluates an equation on a curve jet; zero means the curve satisfies it.
pub fn check_vanishing(ode: &CurveOde, jet: &DerivativeJet) -> Result<Rational> {
    let poly = match &ode.form {
        OdeForm::Lambda(p) => p.clone(),
        OdeForm::Psi(expr) => homogenize_psi(expr, Alphabet::E, ode.degree)?,
    };
    let need = highest_order(&poly)?;
    if jet.order() < need {
        return Err(Error::JetTooShort { have: jet.order(), need });
    }
    poly.evaluate(|v| match v {
        VarId::Lambda(a, i) => Some(lambda_value(jet, *a, *i)),
        _ => None,
    })
}

/// `Λ^i 𝔸 = D^i y` for `i = 0..=order`, optionally forcing `y = y' = 0`.
pub fn full_assignment(jet: &DerivativeJet, order: usize, drop_low: bool) -> BTreeMap<VarId, Rational> {
    (0..=order)
        .map(|i| {
            let v = if drop_low && i < 2 { Rational::zero() } else { jet.normalized(i) };
            (VarId::a(i as u32), v)
        })
        .collect()
}

/// `Λ^i 𝒟 = D^{i+2} y` for `i = 0..=order-2`.
pub fn sylvester_assignment(jet: &DerivativeJet, order: usize) -> BTreeMap<VarId, Rational> {
    (0..=order - 2).map(|i| (VarId::d(i as u32), jet.normalized(i + 2))).collect()
}

enum Evaluator {
    Symbolic(CurveOde),
    Numeric { full: PolyMatrix, sylvester: PolyMatrix },
}

impl Evaluator {
    /// First nonzero value among the routes, or zero.
    fn value(&self, jet: &DerivativeJet, order: usize) -> Result<Rational> {
        match self {
            Evaluator::Symbolic(ode) => check_vanishing(ode, jet),
            Evaluator::Numeric { full, sylvester } => {
                let f = evaluate_determinant(full, &full_assignment(jet, order, false))?;
                if !f.is_zero() {
                    return Ok(f);
                }
                evaluate_determinant(sylvester, &sylvester_assignment(jet, order))
            }
        }
    }
}


pub fn verify_degree(n: u32, trials: u32, seed: u64, mode: Mode) -> Result<Report> {
    verify_degree_with_cap(n, trials, seed, mode, DEFAULT_SYMBOLIC_CAP)
}

/// Runs `trials` random degree-`n` curves through the degree-`n` equation
/// (all must vanish) and as many degree-`n+1` curves (which must not).
pub fn verify_degree_with_cap(n: u32, trials: u32, seed: u64, mode: Mode, cap: usize) -> Result<Report> {
    let order = top_order(n);
    let evaluator = match mode {
        Mode::Symbolic => Evaluator::Symbolic(curve_ode_with_cap(n, Basis::D, cap)?),
        Mode::Numeric => Evaluator::Numeric { full: build_full_matrix(n)?, sylvester: build_sylvester_matrix(n)? },
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = Report {
        n,
        mode,
        trials,
        passes: 0,
        discrimination_nonzero: 0,
        accidental_zeros: 0,
        seed,
        failures: Vec::new(),
    };
    for trial in 0..trials {
        let curve_seed: u64 = rng.gen();
        let discrimination_seed: u64 = rng.gen();

        let curve = random_curve(n, curve_seed, COEFF_BOUND)?;
        let value = evaluator.value(&implicit_jet(&curve, order), order)?;
        if value.is_zero() {
            report.passes += 1;
        } else {
            report.failures.push(Failure { trial, curve: curve.to_json(), value: format_fraction(&value) });
        }

        let mut resample = ChaCha8Rng::seed_from_u64(discrimination_seed);
        for _ in 0..DISCRIMINATION_RESAMPLES {
            let higher = random_curve(n + 1, resample.gen(), COEFF_BOUND)?;
            if evaluator.value(&implicit_jet(&higher, order), order)?.is_zero() {
                report.accidental_zeros += 1;
            } else {
                report.discrimination_nonzero += 1;
                break;
            }
        }
    }
    Ok(report)
}
