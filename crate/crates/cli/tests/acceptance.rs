//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use planode::curveode::{
    build_full_matrix, build_sylvester_matrix, columns, curve_ode, evaluate_determinant, side, sylvester_determinant,
    top_order, Basis, DEFAULT_SYMBOLIC_CAP,
};
use planode::invariants::{dehomogenize, halphen_invariant, homogenize_psi, monge_invariant, Derivation};
use planode::json::poly_from_str;
use planode::oracle::{full_assignment, implicit_jet, leibnitz_check, random_curve, verify_degree, Mode};
use planode::poly::Monomial;
use planode::symfunc::{expand_psi, lambda_to_psi, reexpress, Alphabet, VarId};
use planode::{MultiPoly, PolyMatrix, Rational};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const GOLDEN: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/../core/tests/golden/cubic_sylvester.txt"));

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn frac(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn var(v: VarId) -> MultiPoly {
    MultiPoly::var(v)
}

fn mono(factors: &[(VarId, u32)]) -> Monomial<VarId> {
    Monomial::from_factors(factors.iter().cloned())
}

/// `d0^2 d3 - 3 d0 d1 d2 + 2 d1^3`, written out by hand.
fn monge_d() -> MultiPoly {
    let d = VarId::d;
    MultiPoly::from_terms([
        (mono(&[(d(0), 2), (d(3), 1)]), q(1)),
        (mono(&[(d(0), 1), (d(1), 1), (d(2), 1)]), q(-3)),
        (mono(&[(d(1), 3)]), q(2)),
    ])
}

fn planode(args: &str) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_planode")).args(args.split_whitespace()).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
    )
}

fn emitted_poly(args: &str) -> Result<(serde_json::Value, MultiPoly), String> {
    let (code, out, err) = planode(args);
    if code != 0 {
        return Err(format!("`{args}` exited {code}: {err}"));
    }
    let v: serde_json::Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    let p = poly_from_str(&v["poly"].to_string()).map_err(|e| e.to_string())?;
    Ok((v, p))
}

fn within(t: Instant, limit: Duration) -> Result<Duration, String> {
    let e = t.elapsed();
    if e < limit {
        Ok(e)
    } else {
        Err(format!("took {e:.2?}, limit {limit:?}"))
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    frac(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}

/// Parses lines such as `-30 L2^4*L1^2*L5` into a polynomial in `Λ^i 𝒟`.
fn parse_golden(text: &str) -> Result<(MultiPoly, usize), String> {
    let mut p = MultiPoly::zero();
    let mut count = 0;
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        let (coeff, factors) = line.split_once(' ').ok_or_else(|| format!("bad line {line:?}"))?;
        let c: i64 = coeff.trim_start_matches('+').parse().map_err(|_| format!("bad coefficient in {line:?}"))?;
        let mut m = Monomial::one();
        for f in factors.split('*') {
            let f = f.strip_prefix('L').ok_or_else(|| format!("bad factor {f:?}"))?;
            let (i, e) = f.split_once('^').unwrap_or((f, "1"));
            let i: u32 = i.parse().map_err(|_| format!("bad index in {line:?}"))?;
            let e: u32 = e.parse().map_err(|_| format!("bad exponent in {line:?}"))?;
            m = m.mul(&Monomial::var_pow(VarId::d(i), e));
        }
        p = p + MultiPoly::term(q(c), m);
        count += 1;
    }
    Ok((p, count))
}

/// `∇_ℰ` written directly as `Σ Λ^{i-1} ∂/∂Λ^i` with `Λ^0 = 1`.
fn nabla_e_oracle(p: &MultiPoly) -> MultiPoly {
    p.variables().iter().fold(MultiPoly::zero(), |acc, v| {
        let i = v.lambda_index().unwrap();
        let lower = if i == 1 { MultiPoly::one() } else { var(VarId::e(i - 1)) };
        acc + p.derivative(v) * lower
    })
}

/// `∇_𝒟` written directly as `Σ i Λ^{i-1} ∂/∂Λ^i` with `Λ^0 = 1`.
fn nabla_d_oracle(p: &MultiPoly) -> MultiPoly {
    p.variables().iter().fold(MultiPoly::zero(), |acc, v| {
        let i = v.lambda_index().unwrap();
        let lower = if i == 1 { MultiPoly::one() } else { var(VarId::d(i - 1)) };
        acc + (p.derivative(v) * lower).scale(&q(i as i64))
    })
}

/// Power sums of the `E` alphabet from Newton's identities, `Λ^0 = 1`.
fn newton_power_sums(max: u32) -> Vec<MultiPoly> {
    let e = |i: u32| if i == 0 { MultiPoly::one() } else { var(VarId::e(i)) };
    let sign = |k: u32| if k.is_multiple_of(2) { q(1) } else { q(-1) };
    let mut psi = vec![MultiPoly::zero()];
    for k in 1..=max {
        let mut p = e(k).scale(&(sign(k - 1) * q(k as i64)));
        for i in 1..k {
            p = p + (e(k - i) * psi[i as usize].clone()).scale(&sign(k - 1 + i));
        }
        psi.push(p);
    }
    psi
}

fn criterion_1() -> Outcome {
    let t = Instant::now();
    let (code, text, _) = planode("emit --degree 2 --basis D");
    ensure(code == 0, || format!("exit {code}"))?;
    ensure(text == "d0^2*d3 - 3*d0*d1*d2 + 2*d1^3 = 0\n", || format!("text output {text:?}"))?;
    let (_, p) = emitted_poly("emit --degree 2 --basis D --format json")?;
    ensure(p == monge_d(), || format!("json polynomial {p:?}"))?;
    let e = within(t, Duration::from_secs(1))?;
    Ok(format!("Monge equation reproduced in {e:.2?}"))
}

fn criterion_2() -> Outcome {
    let t = Instant::now();
    let (golden, count) = parse_golden(GOLDEN)?;
    ensure(count == 109, || format!("golden file has {count} terms"))?;
    ensure(golden.len() == 109, || format!("golden terms collapse to {}", golden.len()))?;
    let det = sylvester_determinant(3, DEFAULT_SYMBOLIC_CAP).map_err(|e| e.to_string())?;
    let unit = dehomogenize(&det, Alphabet::D);
    let sign = if unit == golden {
        "+1"
    } else if unit == -golden.clone() {
        "-1"
    } else {
        let diff = &unit - &golden;
        let sum = &unit + &golden;
        return Err(format!("mismatch: {} terms differ with sign +1, {} with sign -1", diff.len(), sum.len()));
    };
    let e = within(t, Duration::from_secs(30))?;
    Ok(format!("109 terms match with global sign {sign} in {e:.2?}"))
}

fn criterion_3() -> Outcome {
    let (v, p) = emitted_poly("emit --degree 3 --basis D --format json")?;
    ensure(v["degree"] == 10 && v["weight"] == 15, || format!("reported degree {} weight {}", v["degree"], v["weight"]))?;
    ensure(!p.is_zero(), || "empty equation".into())?;
    for (m, _) in p.terms() {
        let degree: u32 = m.factors().iter().map(|(_, e)| e).sum();
        let weight: u32 = m.factors().iter().map(|(v, e)| v.lambda_index().unwrap() * e).sum();
        ensure(degree == 10 && weight == 15, || format!("monomial {m:?} has degree {degree}, weight {weight}"))?;
    }
    Ok(format!("all {} monomials have degree 10 and weight 15", p.len()))
}

fn criterion_4() -> Outcome {
    let t = Instant::now();
    let nabla_e = Derivation::nabla_e();
    let nabla_d = Derivation::nabla_d();
    let oracle_psi = newton_power_sums(8);
    for i in 1..=8u32 {
        let psi = lambda_to_psi(Alphabet::E, i);
        ensure(psi == oracle_psi[i as usize], || format!("psi_{i} disagrees with Newton's identities"))?;
        let image = nabla_e.apply(&psi).map_err(|e| e.to_string())?;
        ensure(image == nabla_e_oracle(&psi), || format!("nabla_E(psi_{i}) disagrees with the direct formula"))?;
        let expected = if i == 1 { MultiPoly::one() } else { MultiPoly::zero() };
        ensure(image == expected, || format!("nabla_E(psi_{i}) = {image:?}"))?;
    }
    let halphen = expand_psi(&halphen_invariant(), Alphabet::E);
    let image = nabla_e.apply(&halphen).map_err(|e| e.to_string())?;
    ensure(image.is_zero() && nabla_e_oracle(&halphen).is_zero(), || "Halphen invariant not in the kernel".into())?;
    for n in 2..=3 {
        let ode = curve_ode(n, Basis::D).map_err(|e| e.to_string())?;
        let unit = dehomogenize(&ode.d_form, Alphabet::D);
        let image = nabla_d.apply(&unit).map_err(|e| e.to_string())?;
        ensure(image.is_zero() && nabla_d_oracle(&unit).is_zero(), || format!("degree-{n} equation not in the kernel"))?;
    }
    let e = within(t, Duration::from_secs(10))?;
    Ok(format!("psi_1 -> 1, psi_2..psi_8, Halphen, degree 2 and 3 equations -> 0 in {e:.2?}"))
}

fn criterion_5() -> Outcome {
    let h = homogenize_psi(&monge_invariant(), Alphabet::E, 3).map_err(|e| e.to_string())?;
    let in_d = reexpress(&h, Alphabet::E, Alphabet::D).map_err(|e| e.to_string())?;
    let ode = curve_ode(2, Basis::D).map_err(|e| e.to_string())?;
    let half = ode.d_form.scale(&frac(1, 2));
    ensure(in_d == half, || format!("rescaled psi_3 is {in_d:?}"))?;
    ensure(in_d == monge_d().scale(&frac(1, 2)), || "disagrees with the hand-written Monge form".into())?;
    Ok("homogenized psi_3 in D equals 1/2 of the conic equation".into())
}

fn criterion_6() -> Outcome {
    let t = Instant::now();
    let runs = [(2, 20, 11, Mode::Symbolic), (3, 10, 12, Mode::Symbolic), (4, 5, 13, Mode::Numeric)];
    let mut summary = Vec::new();
    for (n, trials, seed, mode) in runs {
        let r = verify_degree(n, trials, seed, mode).map_err(|e| e.to_string())?;
        ensure(r.passes == trials && r.failures.is_empty(), || format!("degree {n}: failures {:?}", r.failures))?;
        summary.push(format!("{}/{} degree {n} ({mode:?})", r.passes, trials));
    }
    let e = within(t, Duration::from_secs(60))?;
    Ok(format!("{} vanish in {e:.2?}", summary.join(", ")))
}

fn criterion_7() -> Outcome {
    let mut summary = Vec::new();
    for n in 2..=3 {
        let r = verify_degree(n, 20, 21 + n as u64, Mode::Symbolic).map_err(|e| e.to_string())?;
        ensure(r.discrimination_nonzero == 20, || format!("degree {n}: only {} nonzero", r.discrimination_nonzero))?;
        ensure(r.accidental_zeros * 5 < 20, || format!("degree {n}: {} accidental zeros", r.accidental_zeros))?;
        summary.push(format!("degree {} curves in degree {n} equation: 20/20 nonzero, {} zeros", n + 1, r.accidental_zeros));
    }
    Ok(summary.join("; "))
}

fn criterion_8() -> Outcome {
    for n in 2..=8 {
        let want = (n * (n + 1) / 2) as usize;
        let full: PolyMatrix = build_full_matrix(n).map_err(|e| e.to_string())?;
        let syl: PolyMatrix = build_sylvester_matrix(n).map_err(|e| e.to_string())?;
        ensure(side(n) == want && full.side() == want && syl.side() == want && columns(n).len() == want, || {
            format!("degree {n}: side is not {want}")
        })?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for n in 2..=3 {
        let full: PolyMatrix = build_full_matrix(n).unwrap();
        let order = top_order(n);
        for trial in 0..5 {
            let mut a: BTreeMap<VarId, Rational> = (0..=order as u32).map(|i| (VarId::a(i), random_rational(&mut rng))).collect();
            let base = evaluate_determinant(&full, &a).map_err(|e| e.to_string())?;
            a.insert(VarId::a(0), random_rational(&mut rng));
            a.insert(VarId::a(1), random_rational(&mut rng));
            let moved = evaluate_determinant(&full, &a).map_err(|e| e.to_string())?;
            ensure(base == moved, || format!("degree {n} trial {trial}: determinant depends on a0, a1"))?;

            let curve = random_curve(n + 1, rng.gen(), 5).map_err(|e| e.to_string())?;
            let jet = implicit_jet(&curve, order);
            let with = evaluate_determinant(&full, &full_assignment(&jet, order, false)).map_err(|e| e.to_string())?;
            let without = evaluate_determinant(&full, &full_assignment(&jet, order, true)).map_err(|e| e.to_string())?;
            ensure(with == without, || format!("degree {n} trial {trial}: jet replay depends on y, y'"))?;
        }
    }
    let mut signs = Vec::new();
    for n in 2..=4 {
        let full: PolyMatrix = build_full_matrix(n).unwrap();
        let syl: PolyMatrix = build_sylvester_matrix(n).unwrap();
        let order = top_order(n);
        let mut sign: Option<Rational> = None;
        for trial in 0..4 {
            let d: Vec<Rational> = (0..=order - 2).map(|_| random_rational(&mut rng)).collect();
            let mut a: BTreeMap<VarId, Rational> = BTreeMap::from([(VarId::a(0), q(0)), (VarId::a(1), q(0))]);
            let mut dd = BTreeMap::new();
            for (i, v) in d.iter().enumerate() {
                a.insert(VarId::a(i as u32 + 2), v.clone());
                dd.insert(VarId::d(i as u32), v.clone());
            }
            let f = evaluate_determinant(&full, &a).map_err(|e| e.to_string())?;
            let s = evaluate_determinant(&syl, &dd).map_err(|e| e.to_string())?;
            ensure(!s.is_zero(), || format!("degree {n} trial {trial}: Sylvester determinant vanished"))?;
            let ratio = f / s;
            ensure(ratio.abs().is_one(), || format!("degree {n} trial {trial}: ratio {ratio}"))?;
            if let Some(prev) = &sign {
                ensure(*prev == ratio, || format!("degree {n}: sign changes between trials"))?;
            }
            sign = Some(ratio);
        }
        signs.push(format!("n={n}: {}", sign.unwrap()));
    }
    Ok(format!("sides n(n+1)/2 for n=2..8; a0, a1 irrelevant; full/Sylvester sign {}", signs.join(", ")))
}

fn criterion_9() -> Outcome {
    let det = sylvester_determinant(2, DEFAULT_SYMBOLIC_CAP).map_err(|e| e.to_string())?;
    let quotient = det.div_exact(&var(VarId::d(0))).ok_or("not divisible by d0")?;
    let sign = if quotient == monge_d() {
        "+"
    } else if quotient == -monge_d() {
        "-"
    } else {
        return Err(format!("quotient {quotient:?}"));
    };
    Ok(format!("3x3 determinant = {sign}d0 * Monge"))
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut checks = 0;
    for _ in 0..3 {
        let degree = rng.gen_range(2..=4);
        let y: Vec<Rational> = (0..=degree).map(|_| random_rational(&mut rng)).collect();
        let x0 = loop {
            let x = random_rational(&mut rng);
            if !x.is_zero() {
                break x;
            }
        };
        for n in 0..=6 {
            for k in 0..=4 {
                for r in 0..=4 {
                    let ok = leibnitz_check(n, k, r, &y, &x0).map_err(|e| e.to_string())?;
                    ensure(ok, || format!("fails at n={n} k={k} r={r} for y={y:?} x0={x0}"))?;
                    checks += 1;
                }
            }
        }
    }
    Ok(format!("{checks} grid points hold"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("Monge reproduction", criterion_1),
        ("golden cubic", criterion_2),
        ("degree and weight", criterion_3),
        ("kernel suite", criterion_4),
        ("Monge and psi_3", criterion_5),
        ("oracle vanishing", criterion_6),
        ("discrimination", criterion_7),
        ("structural properties", criterion_8),
        ("conic factor", criterion_9),
        ("Leibnitz identity", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
