use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use quiverrep::artheory::{ar_quiver, enumerate_indecomposables, Caps, EnumerationStatus};
use quiverrep::auslander::{
    global_dimension, strata_report, theorem48_cases, theorem48_report, torsion_report, tower_report, AlgebraRef,
    Report,
};
use quiverrep::fixtures::{self, BoundQuiver};
use quiverrep::linalg::{Field, FieldSpec, PrimeField, Rationals};
use quiverrep::rep::ModuleCategory;

const EXIT_CONSTRUCTION: u8 = 2;
const EXIT_CAP: u8 = 3;
const EXIT_VERIFY: u8 = 4;

/// Bound quiver algebras, Auslander-Reiten quivers and higher Auslander checks.
#[derive(Parser)]
#[command(name = "quiverrep", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an algebra and print its dimension and Cartan matrix.
    Build(AlgebraArgs),
    /// Enumerate indecomposable modules by knitting almost split sequences.
    Enumerate {
        #[command(flatten)]
        alg: AlgebraArgs,
        /// Write the Auslander-Reiten quiver in DOT format.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Run a verification suite and print a JSON report.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[command(flatten)]
        alg: AlgebraArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Torsion,
    Strata,
    Tower,
    Theorem48,
}

#[derive(Args, Clone)]
struct AlgebraArgs {
    /// The algebra A_m^n given by Q_m^n and its relations.
    #[arg(long, num_args = 2, value_names = ["M", "N"], conflicts_with = "fixture")]
    iyama: Option<Vec<usize>>,
    /// A named algebra: example-2.8, example-3.5(n) or kA(m).
    #[arg(long)]
    fixture: Option<String>,
    /// `q` for the rationals or `fp:P` for a prime field.
    #[arg(long, default_value = "q")]
    field: String,
    #[arg(long, default_value_t = Caps::default().max_modules)]
    max_modules: usize,
    #[arg(long, default_value_t = Caps::default().max_total_dim)]
    max_dim: usize,
    #[arg(long, default_value_t = 2813)]
    seed: u64,
    /// Also write the JSON output to this file.
    #[arg(long)]
    json: Option<PathBuf>,
}

impl AlgebraArgs {
    fn caps(&self) -> Caps {
        Caps { max_modules: self.max_modules, max_total_dim: self.max_dim }
    }

    fn iyama_pair(&self) -> Option<(usize, usize)> {
        self.iyama.as_ref().map(|v| (v[0], v[1]))
    }

    fn source(&self) -> Result<(BoundQuiver, AlgebraRef)> {
        if let Some((m, n)) = self.iyama_pair() {
            return Ok((fixtures::iyama(m, n)?, AlgebraRef::Iyama { m, n }));
        }
        match &self.fixture {
            Some(name) => Ok((fixtures::by_name(name)?, AlgebraRef::Fixture { fixture: name.clone() })),
            None => bail!("an algebra is required: pass --iyama M N or --fixture NAME"),
        }
    }
}

/// How a command finished when it did not fail outright.
enum Outcome {
    Success,
    CapExceeded,
    VerificationFailed,
}

fn write_json(path: &Path, value: &serde_json::Value) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    std::fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))
}

fn build<F: Field>(field: F, alg: &AlgebraArgs) -> Result<Outcome> {
    let (bq, name) = alg.source()?;
    let a = bq.build(field)?;
    let s = a.summary();
    println!("algebra: {}", name.name());
    println!("field: {}", s.field.label());
    println!("vertices: {}", s.vertices.len());
    println!("arrows: {}", s.arrows.len());
    println!("dimension: {}", s.dimension);
    println!("vanishing degree: {}", s.vanishing_degree);
    println!("cartan:");
    for row in &s.cartan {
        let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
        println!("  {}", cells.join(" "));
    }
    if let Some(path) = &alg.json {
        write_json(path, &json!({ "schema": 1, "algebra": s }))?;
    }
    Ok(Outcome::Success)
}

fn enumerate<F: Field>(field: F, alg: &AlgebraArgs, dot: Option<&Path>) -> Result<Outcome> {
    let (bq, name) = alg.source()?;
    let cat = ModuleCategory::new(bq.build(field)?)?;
    let en = enumerate_indecomposables(&cat, alg.caps(), alg.seed)?;
    match &en.status {
        EnumerationStatus::Complete => println!("Complete: {}", en.len()),
        EnumerationStatus::ExceededCap(why) => println!("ExceededCap: {} modules found ({why})", en.len()),
    }
    if let Some(path) = &alg.json {
        write_json(path, &serde_json::to_value(en.to_json(&cat))?)?;
    }
    if let Some(path) = dot {
        if en.is_complete() {
            let q = ar_quiver(&cat, &en)?;
            std::fs::write(path, q.to_dot(&name.name())).with_context(|| format!("writing {}", path.display()))?;
        } else {
            eprintln!("enumeration incomplete; no AR quiver written");
        }
    }
    Ok(if en.is_complete() { Outcome::Success } else { Outcome::CapExceeded })
}

fn verify<F: Field>(field: F, suite: Suite, alg: &AlgebraArgs) -> Result<Outcome> {
    let caps = alg.caps();
    let seed = alg.seed;
    let (suite_name, reports): (&str, Vec<Report>) = match suite {
        Suite::Torsion | Suite::Strata => {
            let (bq, name) = alg.source()?;
            let cat = ModuleCategory::new(bq.build(field.clone())?)?;
            let en = enumerate_indecomposables(&cat, caps, seed)?;
            if matches!(suite, Suite::Torsion) {
                // the base of A_m^n is A_m^{n-1}
                let base_gld = match name {
                    AlgebraRef::Iyama { m, n } if n >= 2 => {
                        let base = ModuleCategory::new(fixtures::iyama(m, n - 1)?.build(field.clone())?)?;
                        global_dimension(&base)
                    }
                    _ => None,
                };
                ("torsion", vec![torsion_report(&cat, &en, name, base_gld, seed)])
            } else {
                ("strata", vec![strata_report(&cat, &en, name, seed)])
            }
        }
        Suite::Tower => {
            let cases = match alg.iyama_pair() {
                Some(c) => vec![c],
                None => vec![(2, 2), (2, 3), (3, 2), (3, 3), (4, 2)],
            };
            ("tower", cases.into_iter().map(|(m, n)| tower_report(&field, m, n, caps, seed)).collect())
        }
        Suite::Theorem48 => {
            let cases = match alg.iyama_pair() {
                Some(c) => vec![c],
                None => theorem48_cases(),
            };
            ("theorem48", theorem48_report(&field, &cases, caps, seed)?)
        }
    };
    let pass = reports.iter().all(|r| r.pass());
    for r in &reports {
        let failed: Vec<&str> = r.formulas.iter().filter(|f| !f.pass).map(|f| f.name.as_str()).collect();
        if failed.is_empty() {
            eprintln!("{}: pass", r.algebra.name());
        } else {
            eprintln!("{}: FAIL ({})", r.algebra.name(), failed.join(", "));
        }
    }
    let out = json!({ "schema": 1, "suite": suite_name, "pass": pass, "reports": reports });
    println!("{}", serde_json::to_string_pretty(&out)?);
    if let Some(path) = &alg.json {
        write_json(path, &out)?;
    }
    Ok(if pass { Outcome::Success } else { Outcome::VerificationFailed })
}

fn dispatch<F: Field>(field: F, cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Build(alg) => build(field, alg),
        Command::Enumerate { alg, dot } => enumerate(field, alg, dot.as_deref()),
        Command::Verify { suite, alg } => verify(field, *suite, alg),
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let alg = match &cli.command {
        Command::Build(a) | Command::Enumerate { alg: a, .. } | Command::Verify { alg: a, .. } => a,
    };
    match FieldSpec::parse(&alg.field)? {
        FieldSpec::Rationals => dispatch(Rationals, &cli.command),
        FieldSpec::PrimeField(p) => dispatch(PrimeField::new(p)?, &cli.command),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::CapExceeded) => ExitCode::from(EXIT_CAP),
        Ok(Outcome::VerificationFailed) => ExitCode::from(EXIT_VERIFY),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_CONSTRUCTION)
        }
    }
}
