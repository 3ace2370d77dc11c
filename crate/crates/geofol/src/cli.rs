use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use geofol_core::closed_form;
use geofol_core::verify::{verify_lemma_divergence_against, SamplerConfig, Statement, Suite};
use geofol_core::{Approx, FamilyName, FrameVector, GeometryReport, Rational, SchemaParams, Structure};

use crate::document::parse_document;
use crate::error::{exit, CliError};
use crate::outcome::outcome_json;
use crate::report::{render_json, render_text};
use crate::scan::{parse_fix, parse_grid_arg, write_csv, ScanSpec, Target};

/// Environment variable overriding the float-mode scan tolerance.
pub const FLOAT_TOL_ENV: &str = "GEO_FLOAT_TOL";

#[derive(Debug, Parser)]
#[command(name = "geo", version, about = "Foliations and almost Hermitian structures on 4-dimensional Lie groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the full geometry of one algebra.
    Report {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
    },
    /// Run the randomized verification suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Swaps in a deliberately wrong closed form to exercise failure reporting.
        #[arg(long, value_enum, hide = true)]
        fault: Option<Fault>,
    },
    /// Evaluate a predicate over a parameter grid and write CSV.
    Scan {
        #[arg(long, conflicts_with = "schema", required_unless_present = "schema")]
        family: Option<String>,
        #[arg(long)]
        schema: bool,
        /// Fixed parameter `k=v`; unlisted parameters are 0.
        #[arg(long = "fix", value_name = "K=V")]
        fix: Vec<String>,
        /// Grid axis `p=lo..hi/steps`; several may be comma separated.
        #[arg(long = "grid", value_name = "SPEC", required = true)]
        grid: Vec<String>,
        #[arg(long)]
        predicate: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = ScanFormat::Csv)]
        format: ScanFormat,
        /// Evaluate in binary64 even when every literal is rational.
        #[arg(long)]
        float: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ScanFormat {
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Fault {
    /// Negates the W component of the divergence closed form.
    FlipLemmaSign,
}

fn flipped_divergence(p: &SchemaParams<Rational>, k: Structure) -> FrameVector<Rational> {
    let d = closed_form::divergence(p, k);
    FrameVector::new(d.x().clone(), d.y().clone(), d.z().clone(), -d.w().clone())
}

/// Parses arguments, runs the command and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { exit::INPUT } else { exit::OK };
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn execute(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Report { file, format } => cmd_report(&file, format),
        Command::Verify { suite, samples, seed, fault } => cmd_verify(&suite, samples, seed, fault),
        Command::Scan { family, schema: _, fix, grid, predicate, out, format: ScanFormat::Csv, float } => {
            cmd_scan(family, &fix, &grid, &predicate, &out, float)
        }
    }
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

pub fn cmd_report(file: &PathBuf, format: ReportFormat) -> Result<i32, CliError> {
    let alg = parse_document(&read(file)?)?;
    let report = GeometryReport::new(&alg);
    let rendered = match format {
        ReportFormat::Json => render_json(&report),
        ReportFormat::Text => render_text(&report),
    };
    print!("{rendered}");
    match &report.cross_check {
        Some(c) if !c.agrees() => Err(CliError::Internal(c.mismatches.join(", "))),
        _ => Ok(exit::OK),
    }
}

pub fn cmd_verify(suite: &str, samples: usize, seed: u64, fault: Option<Fault>) -> Result<i32, CliError> {
    let suite: Suite = suite.parse().map_err(CliError::Input)?;
    if samples == 0 {
        return Err(CliError::input("--samples must be at least 1"));
    }
    let cfg = SamplerConfig::new(seed, samples);
    let mut outcomes = suite.run(&cfg);
    if fault == Some(Fault::FlipLemmaSign) {
        for o in outcomes.iter_mut().filter(|o| o.statement == Statement::LemmaDivergence) {
            *o = verify_lemma_divergence_against(&cfg, flipped_divergence);
        }
    }
    let mut failed = false;
    for o in &outcomes {
        println!("{}", outcome_json(o, seed));
        if !o.passed() {
            failed = true;
            match o.counterexamples.first() {
                Some(c) => {
                    let params: Vec<String> = c.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    eprintln!(
                        "{}: {} counterexample(s); first at {}: expected {}, got {}",
                        o.statement,
                        o.counterexamples.len(),
                        params.join(" "),
                        c.expected,
                        c.got
                    );
                }
                None => eprintln!(
                    "{}: too few samples ({} tested, {} on locus, {} required)",
                    o.statement, o.samples, o.on_locus, o.min_on_locus
                ),
            }
        }
    }
    Ok(if failed { exit::COUNTEREXAMPLE } else { exit::OK })
}

pub fn float_tolerance() -> Result<f64, CliError> {
    match std::env::var(FLOAT_TOL_ENV) {
        Err(_) => Ok(Approx::DEFAULT_TOL),
        Ok(s) => match s.trim().parse::<f64>() {
            Ok(t) if t.is_finite() && t >= 0.0 => Ok(t),
            _ => Err(CliError::input(format!("{FLOAT_TOL_ENV}={s:?} is not a non-negative number"))),
        },
    }
}

fn cmd_scan(
    family: Option<String>,
    fix: &[String],
    grid: &[String],
    predicate: &str,
    out: &PathBuf,
    float: bool,
) -> Result<i32, CliError> {
    let target = match family {
        Some(name) => Target::Family(name.parse::<FamilyName>()?),
        None => Target::Schema,
    };
    let mut axes = Vec::new();
    for g in grid {
        axes.extend(parse_grid_arg(g)?);
    }
    let spec = ScanSpec {
        target,
        fixed: fix.iter().map(|f| parse_fix(f)).collect::<Result<_, _>>()?,
        grid: axes,
        predicate: predicate.parse()?,
        predicate_name: predicate.to_string(),
        force_float: float,
        tolerance: Approx::DEFAULT_TOL,
    };
    let spec = if spec.is_exact() { spec } else { ScanSpec { tolerance: float_tolerance()?, ..spec } };
    let result = spec.run()?;
    let io = |source| CliError::Io { path: out.display().to_string(), source };
    let file = fs::File::create(out).map_err(io)?;
    write_csv(&spec, &result, std::io::BufWriter::new(file))?;
    Ok(exit::OK)
}
