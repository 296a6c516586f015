//! `planode`: emit, check and verify the differential equations of plane
//! curves.
//!
//! Exit codes: 0 success, 1 a mathematical check failed, 2 usage error,
//! 3 symbolic expansion refused by the size cap.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use planode::curveode::{
    build_full_matrix, build_sylvester_matrix, curve_ode_with_cap, Basis, DEFAULT_SYMBOLIC_CAP,
};
use planode::invariants::{dehomogenize, halphen_invariant, is_semi_invariant, monge_invariant};
use planode::json::{matrix_to_json, poly_to_json, psi_to_json};
use planode::oracle::{verify_degree_with_cap, Mode};
use planode::render::{render_poly, render_psi, Notation, Style};
use planode::symfunc::{expand_psi, lambda_to_psi, Alphabet};
use planode::{Error, PolyMatrix};

#[derive(Parser, Debug)]
#[command(name = "planode", version, about = "Differential equations of plane algebraic curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the differential equation of curves of the given degree.
    Emit(EmitArgs),
    /// Check kernel membership of the equations and invariants.
    Check(CheckArgs),
    /// Verify the equation on random curves.
    Verify(VerifyArgs),
    /// Dump the elimination matrix (basis A: full, D: Sylvester).
    Matrix(MatrixArgs),
    /// Print the Halphen invariant.
    Halphen(InvariantArgs),
    /// Print the Monge invariant.
    Monge(InvariantArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BasisArg {
    #[value(name = "A")]
    A,
    #[value(name = "D")]
    D,
    #[value(name = "E")]
    E,
    #[value(name = "psi")]
    Psi,
    #[value(name = "derivative")]
    Derivative,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Basis {
        match b {
            BasisArg::A => Basis::A,
            BasisArg::D => Basis::D,
            BasisArg::E => Basis::E,
            BasisArg::Psi => Basis::Psi,
            BasisArg::Derivative => Basis::Derivative,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Symbolic,
    Numeric,
}

#[derive(Args, Debug)]
struct EmitArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
    degree: u32,
    #[arg(long, value_enum, default_value = "D")]
    basis: BasisArg,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Largest matrix side expanded symbolically.
    #[arg(long, default_value_t = DEFAULT_SYMBOLIC_CAP)]
    cap: usize,
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("target").required(true).multiple(true).args(["degree", "halphen"]))]
struct CheckArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
    degree: Option<u32>,
    /// Check the power sums and the Halphen invariant.
    #[arg(long)]
    halphen: bool,
    #[arg(long, default_value_t = DEFAULT_SYMBOLIC_CAP)]
    cap: usize,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
    degree: u32,
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
    trials: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "symbolic")]
    mode: ModeArg,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long, default_value_t = DEFAULT_SYMBOLIC_CAP)]
    cap: usize,
}

#[derive(Args, Debug)]
struct MatrixArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
    degree: u32,
    #[arg(long, value_enum, default_value = "D")]
    basis: BasisArg,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct InvariantArgs {
    /// `psi` for the power-sum form, `E` for its expansion in Λℰ.
    #[arg(long, value_enum, default_value = "psi")]
    basis: BasisArg,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

enum Failure {
    Usage(String),
    Math(String),
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::SymbolicCap { .. } => Failure::Cap(e.to_string()),
            Error::DegreeTooSmall { .. } => Failure::Usage(e.to_string()),
            other => Failure::Math(other.to_string()),
        }
    }
}

fn style(format: Format) -> Style {
    if format == Format::Latex {
        Style::Latex
    } else {
        Style::Text
    }
}

fn emit(args: &EmitArgs) -> Result<String, Failure> {
    let ode = curve_ode_with_cap(args.degree, args.basis.into(), args.cap)?;
    Ok(match args.format {
        Format::Json => serde_json::to_string(&ode.to_json()).expect("serializable"),
        f => ode.render(style(f)),
    })
}

fn verdict(out: &mut Vec<String>, ok: bool, label: String) -> bool {
    out.push(format!("{}  {label}", if ok { "pass" } else { "FAIL" }));
    ok
}

fn check(args: &CheckArgs) -> Result<(String, bool), Failure> {
    let mut lines = Vec::new();
    let mut all = true;
    if let Some(n) = args.degree {
        let ode = curve_ode_with_cap(n, Basis::D, args.cap)?;
        let unit = dehomogenize(&ode.d_form, Alphabet::D);
        let ok = is_semi_invariant(&unit, Alphabet::D)?;
        all &= verdict(&mut lines, ok, format!("degree-{n} equation in ker nabla_D (d0 = 1)"));
    }
    for i in 2..=8 {
        let ok = is_semi_invariant(&lambda_to_psi(Alphabet::E, i), Alphabet::E)?;
        all &= verdict(&mut lines, ok, format!("psi_{i} in ker nabla_E"));
    }
    let ok = is_semi_invariant(&expand_psi(&halphen_invariant(), Alphabet::E), Alphabet::E)?;
    all &= verdict(&mut lines, ok, "halphen invariant in ker nabla_E".to_string());
    Ok((lines.join("\n"), all))
}

fn verify(args: &VerifyArgs) -> Result<(String, bool), Failure> {
    let mode = match args.mode {
        ModeArg::Symbolic => Mode::Symbolic,
        ModeArg::Numeric => Mode::Numeric,
    };
    let report = verify_degree_with_cap(args.degree, args.trials, args.seed, mode, args.cap)?;
    let ok = report.is_success();
    let text = match args.format {
        Format::Json => serde_json::to_string(&report).expect("serializable"),
        _ => {
            let mut s = format!(
                "n={} mode={} trials={} passes={} discrimination_nonzero={} accidental_zeros={} seed={}",
                report.n,
                if mode == Mode::Symbolic { "symbolic" } else { "numeric" },
                report.trials,
                report.passes,
                report.discrimination_nonzero,
                report.accidental_zeros,
                report.seed
            );
            for f in &report.failures {
                s.push_str(&format!("\nfailure trial={} value={}", f.trial, f.value));
            }
            s.push_str(if ok { "\nPASS" } else { "\nFAIL" });
            s
        }
    };
    Ok((text, ok))
}

fn matrix(args: &MatrixArgs) -> Result<String, Failure> {
    let m: PolyMatrix = match args.basis {
        BasisArg::A => build_full_matrix(args.degree)?,
        BasisArg::D => build_sylvester_matrix(args.degree)?,
        other => return Err(Failure::Usage(format!("matrix basis must be A or D, got {other:?}"))),
    };
    Ok(match args.format {
        Format::Json => serde_json::to_string(&matrix_to_json(&m)).expect("serializable"),
        Format::Text => (0..m.side())
            .map(|r| {
                m.row(r).iter().map(|p| render_poly(p, Style::Text, Notation::Lambda)).collect::<Vec<_>>().join(" | ")
            })
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Latex => {
            let rows: Vec<String> = (0..m.side())
                .map(|r| m.row(r).iter().map(|p| render_poly(p, Style::Latex, Notation::Lambda)).collect::<Vec<_>>().join(" & "))
                .collect();
            format!("\\begin{{vmatrix}}\n{}\n\\end{{vmatrix}}", rows.join(" \\\\\n"))
        }
    })
}

fn invariant(expr: planode::PsiExpression, args: &InvariantArgs) -> Result<String, Failure> {
    match args.basis {
        BasisArg::Psi => Ok(match args.format {
            Format::Json => serde_json::to_string(&psi_to_json(&expr)).expect("serializable"),
            f => render_psi(&expr, style(f)),
        }),
        BasisArg::E => {
            let p = expand_psi(&expr, Alphabet::E);
            Ok(match args.format {
                Format::Json => serde_json::to_string(&poly_to_json(&p)).expect("serializable"),
                f => render_poly(&p, style(f), Notation::Lambda),
            })
        }
        other => Err(Failure::Usage(format!("invariants are printed in basis psi or E, got {other:?}"))),
    }
}

fn run(cli: &Cli) -> Result<(String, bool), Failure> {
    match &cli.command {
        Command::Emit(a) => emit(a).map(|s| (s, true)),
        Command::Check(a) => check(a),
        Command::Verify(a) => verify(a),
        Command::Matrix(a) => matrix(a).map(|s| (s, true)),
        Command::Halphen(a) => invariant(halphen_invariant(), a).map(|s| (s, true)),
        Command::Monge(a) => invariant(monge_invariant(), a).map(|s| (s, true)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, ok)) => {
            println!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Math(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
