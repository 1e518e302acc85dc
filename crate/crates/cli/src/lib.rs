//! The `semiperm` command line.
//!
//! [`run`] does all the work and returns what the binary should print and its
//! exit status, so tests can drive it without spawning a process.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use semiperm::axioms::{check_axioms, default_samples, NonIdempotentControl};
use semiperm::verify::{
    run_suite, search_counterexample, CheckReport, GenSpec, Profile, SearchTarget, Suite, SuiteRun,
};
use semiperm::{adj, parse_matrix, permanent, to_canonical, Algorithm, Caps, Error, IndexTuple, Matrix, Semiring};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_CAP: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "semiperm",
    version,
    about = "Permanents and adjoints over idempotent semirings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the permanent of a square matrix.
    Per {
        file: PathBuf,
        #[arg(long, default_value = "dp")]
        alg: Algorithm,
        /// Row tuple for Laplace expansion, or the row for row expansion.
        #[arg(long, value_delimiter = ',')]
        alpha: Option<Vec<usize>>,
        /// Expected semiring; a different one in the file is an error.
        #[arg(long)]
        semiring: Option<Semiring>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the adjoint matrix.
    Adj {
        file: PathBuf,
        #[arg(long)]
        semiring: Option<Semiring>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the L-th power of a square matrix.
    Pow {
        file: PathBuf,
        l: u32,
        #[arg(long)]
        semiring: Option<Semiring>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite on seeded random instances.
    Check {
        suite: Suite,
        #[arg(long, default_value = "max_times")]
        semiring: Semiring,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "dense")]
        profile: Profile,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search seeded random instances for a counterexample.
    Search {
        statement: SearchTarget,
        #[arg(long, default_value = "max_times")]
        semiring: Semiring,
        /// Defaults to 2 for strict_2_3 and 3 otherwise.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "dense")]
        profile: Profile,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the semiring axioms on samples, or on the whole carrier if finite.
    Axioms {
        /// A semiring id, or `ordinary_rationals` for the non-idempotent control.
        semiring: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// What the binary prints and returns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

/// Errors from matrix files are input errors; the rest are usage errors.
fn from_file(e: Error) -> Failure {
    match e {
        Error::CapExceeded { .. } => Failure {
            code: EXIT_CAP,
            message: e.to_string(),
        },
        Error::Parse(_)
        | Error::CarrierMismatch { .. }
        | Error::UnknownSemiring(_)
        | Error::NotSquare { .. }
        | Error::EmptyMatrix
        | Error::ShapeMismatch { .. }
        | Error::TooSmall { .. } => Failure::input(e.to_string()),
        _ => Failure::usage(e.to_string()),
    }
}

fn from_args(e: Error) -> Failure {
    match e {
        Error::CapExceeded { .. } => Failure {
            code: EXIT_CAP,
            message: e.to_string(),
        },
        _ => Failure::usage(e.to_string()),
    }
}

fn load(path: &Path, expected: Option<Semiring>) -> Result<Matrix, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
    let m = parse_matrix(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    if let Some(s) = expected {
        if s != m.semiring() {
            return Err(Failure::usage(format!(
                "semiring mismatch: --semiring is {s} but {} holds a {} matrix",
                path.display(),
                m.semiring()
            )));
        }
    }
    Ok(m)
}

fn write_out(path: &Option<PathBuf>, contents: &str) -> Result<(), Failure> {
    if let Some(path) = path {
        fs::write(path, contents).map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

fn report_code(report: &CheckReport) -> i32 {
    if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

fn search_text(report: &CheckReport) -> String {
    let n = report.n.map(|n| format!(" n={n}")).unwrap_or_default();
    let head = format!("{} {}{} (seed {})", report.statement, report.semiring, n, report.seed);
    match &report.counterexample {
        None => format!("{head}: not found in {} trials\n", report.trials),
        Some(cx) => format!(
            "{head}: {} witnesses in {} trials, first at trial {}\n{cx}",
            report.failures(),
            report.trials,
            cx.trial
        ),
    }
}

fn execute(command: Command) -> Result<Output, Failure> {
    match command {
        Command::Per {
            file,
            alg,
            alpha,
            semiring,
            out,
        } => {
            let caps = Caps::from_env().map_err(from_args)?;
            let m = load(&file, semiring)?;
            let n = m.order().map_err(from_file)?;
            let alpha = alpha.map(|a| IndexTuple::new(n, a)).transpose().map_err(from_args)?;
            let result = permanent(&m, alg, alpha.as_ref(), caps).map_err(|e| match e {
                Error::Invalid(_) | Error::IndexOutOfRange { .. } => Failure::usage(e.to_string()),
                e => from_file(e),
            })?;
            let doc = serde_json::json!({
                "algorithm": result.algorithm.name(),
                "n": result.n,
                "value": result.value.to_string(),
            });
            write_out(
                &out,
                &format!(
                    "{}\n",
                    serde_json::to_string_pretty(&doc).expect("json values serialize")
                ),
            )?;
            Ok(Output::ok(format!("{}\n", result.value)))
        }
        Command::Adj { file, semiring, out } => {
            let m = load(&file, semiring)?;
            let text = to_canonical(&adj(&m).map_err(from_file)?);
            write_out(&out, &text)?;
            Ok(Output::ok(text))
        }
        Command::Pow { file, l, semiring, out } => {
            let m = load(&file, semiring)?;
            let text = to_canonical(&m.pow(l).map_err(from_file)?);
            write_out(&out, &text)?;
            Ok(Output::ok(text))
        }
        Command::Check {
            suite,
            semiring,
            n,
            trials,
            seed,
            profile,
            out,
        } => {
            let run = SuiteRun {
                semiring,
                n,
                trials,
                seed,
                profile,
            };
            let report = run_suite(suite, &run).map_err(from_args)?;
            write_out(&out, &format!("{}\n", report.to_json()))?;
            Ok(Output {
                code: report_code(&report),
                stdout: report.to_string(),
                stderr: String::new(),
            })
        }
        Command::Search {
            statement,
            semiring,
            n,
            trials,
            seed,
            profile,
            out,
        } => {
            let n = n.unwrap_or(if statement == SearchTarget::Strict23 { 2 } else { 3 });
            let spec = GenSpec::new(semiring, n, seed, profile);
            let report = search_counterexample(statement, &spec, trials).map_err(from_args)?;
            write_out(&out, &format!("{}\n", report.to_json()))?;
            Ok(Output::ok(search_text(&report)))
        }
        Command::Axioms { semiring, out } => {
            let report = if semiring == "ordinary_rationals" {
                let control = NonIdempotentControl;
                check_axioms(&control, &default_samples(&Semiring::MaxTimes))
            } else {
                let s: Semiring = semiring.parse().map_err(from_args)?;
                check_axioms(&s, &default_samples(&s))
            }
            .map_err(from_args)?;
            let json = serde_json::to_string_pretty(&report).expect("reports serialize");
            write_out(&out, &format!("{json}\n"))?;
            let code = if report.passed() { EXIT_OK } else { EXIT_CHECK_FAILED };
            Ok(Output {
                code,
                stdout: report.to_string(),
                stderr: String::new(),
            })
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Output::ok(text)
            };
        }
    };
    execute(cli.command).unwrap_or_else(|f| Output {
        code: f.code,
        stdout: String::new(),
        stderr: format!("error: {}\n", f.message),
    })
}
