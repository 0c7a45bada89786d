mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use wfdim_core::approx::MIN_PRECISION_BITS;
use wfdim_core::verify::{self, VerifyConfig, SUITES};
use wfdim_core::{bridge, classifier, corpus, oracle, zspace, Error, FieldDescriptor};

use input::{JsonField, Parsed};
use report::SuiteJson;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] Error),
    #[error("routes disagree")]
    Disagreement,
    #[error("{0} verification check(s) failed")]
    VerifyFailed(usize),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) | CliError::Io { .. } => 2,
            CliError::Core(Error::DegreeTooSmall(_)) => 3,
            CliError::Core(Error::RouteDisagreement(_) | Error::IdentityFailed(_)) | CliError::Disagreement => 4,
            CliError::Core(
                Error::CoincidentPoints | Error::InvalidInput(_) | Error::InvalidField(_) | Error::FieldMismatch(..),
            ) => 2,
            CliError::Core(_) | CliError::VerifyFailed(_) => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "wfdim", version, about = "Dimension and basis of W(f) by three exact routes")]
struct Cli {
    /// Human-readable output instead of the command's default format.
    #[arg(long, global = true)]
    pretty: bool,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Seed for every randomized command.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Working precision of the approximate cross-check.
    #[arg(long, global = true, env = "WFDIM_PRECISION_BITS", default_value_t = 128)]
    precision_bits: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute W(f) for the polynomial described in a JSON file.
    Dim { spec: PathBuf },
    /// Regenerate the degree 4, 5 and 6 table with seeded witnesses.
    Table,
    /// Run the property suites.
    Verify {
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: Option<String>,
        #[arg(long, default_value_t = 100)]
        corpus_size: usize,
        #[arg(long, default_value_t = 12)]
        max_degree: usize,
    },
    /// Dimension of Z(eta, omega; s, k) from inline data.
    Zdim {
        /// Comma-separated scalars: `p`, `p/q`, or `a|b` for a + b√d.
        #[arg(long, allow_hyphen_values = true)]
        eta: String,
        #[arg(long, allow_hyphen_values = true)]
        omega: String,
        #[arg(short, long)]
        k: usize,
        /// Work in Q(√d).
        #[arg(long, allow_hyphen_values = true)]
        d: Option<i64>,
    },
}

impl Cli {
    fn format(&self, default: Format) -> Format {
        if self.pretty {
            Format::Text
        } else {
            self.format.unwrap_or(default)
        }
    }
}

fn json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

fn cmd_dim(cli: &Cli, path: &PathBuf) -> Result<(String, bool), CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })?;
    let start = Instant::now();
    let (spec, parsed) = input::parse_spec(&text)?;
    let bits = spec.precision_bits.unwrap_or(cli.precision_bits).max(MIN_PRECISION_BITS);
    let envelope = match parsed {
        Parsed::Factored(fi) => {
            let r = classifier::classify(&fi)?;
            let f = fi.expand();
            let approx = match bridge::to_z_problem(&fi) {
                Ok(z) => Some(zspace::z_report_embedded(&z, bits)),
                Err(Error::NoSimpleRoots) => None,
                Err(e) => return Err(e.into()),
            };
            let us = start.elapsed().as_micros() as u64;
            report::factored_envelope(report::echo(spec.field, Some(&fi), &f), &r, approx.as_ref(), us)
        }
        Parsed::Coefficients(f) => {
            let k = oracle::wf_kernel(&f)?;
            let degree = f.degree().unwrap_or(0);
            let us = start.elapsed().as_micros() as u64;
            report::oracle_envelope(report::echo(spec.field, None, &f), degree, k.dimension, &k.basis, us)
        }
    };
    let out = match cli.format(Format::Json) {
        Format::Json => json(&envelope),
        Format::Text => report::envelope_text(&envelope),
        Format::Csv => report::envelope_csv(&envelope),
    };
    Ok((out, envelope.route_agreement))
}

fn cmd_table(cli: &Cli) -> Result<String, CliError> {
    let rows = report::table_rows(&corpus::small_degree_table(cli.seed)?);
    Ok(match cli.format(Format::Csv) {
        Format::Csv => report::table_csv(&rows),
        Format::Json => json(&rows),
        Format::Text => report::table_text(&rows),
    })
}

fn cmd_verify(
    cli: &Cli,
    suite: Option<&str>,
    corpus_size: usize,
    max_degree: usize,
) -> Result<(String, usize), CliError> {
    let cfg = VerifyConfig {
        seed: cli.seed,
        corpus_size,
        max_degree: max_degree.max(4),
        precision_bits: cli.precision_bits.max(MIN_PRECISION_BITS),
    };
    let results = match suite {
        Some(name) => vec![verify::run_suite(name, &cfg)?],
        None => verify::run_all(&cfg),
    };
    let results: Vec<SuiteJson> = results.iter().map(SuiteJson::from).collect();
    let failed = results.iter().map(|r| r.failed).sum();
    let out = match cli.format(Format::Text) {
        Format::Text => report::suites_text(&results),
        Format::Json => json(&results),
        Format::Csv => report::suites_csv(&results),
    };
    Ok((out, failed))
}

fn cmd_zdim(cli: &Cli, eta: &str, omega: &str, k: usize, d: Option<i64>) -> Result<String, CliError> {
    let field = match d {
        None => FieldDescriptor::Rational,
        Some(d) => JsonField::Quadratic { d }.descriptor()?,
    };
    let eta = input::inline_list(eta, field)?;
    let omega = input::inline_list(omega, field)?;
    if eta.len() != omega.len() {
        return Err(CliError::Parse(format!(
            "eta has {} entries, omega has {}",
            eta.len(),
            omega.len()
        )));
    }
    let z = zspace::ZProblem::new(eta, omega, k)?;
    let m = zspace::associated_matrix(&z);
    let rep = zspace::z_report(&z);
    let approx = zspace::z_report_embedded(&z, cli.precision_bits.max(MIN_PRECISION_BITS));
    if approx.dimension != rep.dimension {
        return Err(CliError::Disagreement);
    }
    let out = report::z_report_json(&z, &m, &rep, &approx);
    Ok(match cli.format(Format::Json) {
        Format::Json | Format::Csv => json(&out),
        Format::Text => report::z_report_text(&out),
    })
}

fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Dim { spec } => {
            let (out, agree) = cmd_dim(cli, spec)?;
            if !agree {
                print!("{out}");
                return Err(CliError::Disagreement);
            }
            Ok(out)
        }
        Command::Table => cmd_table(cli),
        Command::Verify {
            suite,
            corpus_size,
            max_degree,
        } => {
            let (out, failed) = cmd_verify(cli, suite.as_deref(), *corpus_size, *max_degree)?;
            if failed > 0 {
                print!("{out}");
                return Err(CliError::VerifyFailed(failed));
            }
            Ok(out)
        }
        Command::Zdim { eta, omega, k, d } => cmd_zdim(cli, eta, omega, *k, *d),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("wfdim: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
