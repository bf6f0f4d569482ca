//! Command-line surface over the polyclass library: classification,
//! multiplier-sequence checks, discriminants, Archimedean Newton polygons,
//! amoeba experiments, and seeded verification suites.
//!
//! Exit codes: 0 success, 1 domain or verification failure, 2 usage error.
//! Runs with identical flags and seed write byte-identical output.

mod amoeba_cmd;
mod randgen;
mod report;
mod suites;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "polyclass",
    version,
    about = "Real-rooted polynomial classes, multiplier sequences, \
             discriminants, and discriminant amoebas"
)]
struct Cli {
    /// Output file; stdout when omitted.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output format; every command has a natural default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a polynomial: class flags, root report, lower hull,
    /// discriminant value, and cone memberships.
    Classify {
        /// Coefficients "a0,a1,..." ascending, rationals as "n/d".
        #[arg(long)]
        poly: String,
    },
    /// Multiplier-sequence test of the given kind.
    MsCheck {
        /// Sequence entries "g0,g1,..." as rationals.
        #[arg(long)]
        gamma: String,
        #[arg(long, value_enum)]
        kind: KindArg,
    },
    /// Discriminant of a polynomial, or its symbolic expansion in degree k.
    Discriminant {
        #[arg(long)]
        poly: Option<String>,
        /// Emit the full expansion of the degree-k discriminant (2..=5).
        #[arg(long, value_name = "K", conflicts_with = "poly")]
        symbolic: Option<usize>,
    },
    /// Archimedean Newton polygon (lower hull of coefficient heights).
    Archnewt {
        #[arg(long)]
        poly: String,
    },
    /// Discriminant amoeba experiments.
    #[command(subcommand)]
    Amoeba(amoeba_cmd::AmoebaCmd),
    /// Seeded verification suites over the library's stated properties.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random instances to draw; each suite has its own default.
        #[arg(long)]
        n: Option<usize>,
        /// Oracle samples per instance; each suite has its own default.
        #[arg(long)]
        samples: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    #[value(name = "kind1_finite")]
    Kind1Finite,
    #[value(name = "kind2_finite")]
    Kind2Finite,
    #[value(name = "kind3")]
    Kind3,
    #[value(name = "thm2_literal")]
    Thm2Literal,
    #[value(name = "thm2_normalized")]
    Thm2Normalized,
}

impl From<KindArg> for polyclass::multiplier::MsKind {
    fn from(k: KindArg) -> Self {
        use polyclass::multiplier::MsKind as M;
        match k {
            KindArg::Kind1Finite => M::Kind1Finite,
            KindArg::Kind2Finite => M::Kind2Finite,
            KindArg::Kind3 => M::Kind3,
            KindArg::Thm2Literal => M::Thm2Literal,
            KindArg::Thm2Normalized => M::Thm2Normalized,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    #[value(name = "thmA")]
    ThmA,
    #[value(name = "thmB")]
    ThmB,
    Thm1,
    Thm2,
    Cor1,
    Lemma1,
    Lemma2,
    Cones,
    Amoeba,
    All,
}

/// Failures split by exit code: usage errors (bad flag values) exit 2,
/// domain errors and failed verifications exit 1.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => f.write_str(m),
        }
    }
}

impl From<polyclass::Error> for CliError {
    fn from(e: polyclass::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Domain(format!("io: {e}"))
    }
}

/// One rendered output artifact plus whether the run counts as a success.
pub struct Rendered {
    pub body: String,
    pub ok: bool,
}

impl Rendered {
    pub fn ok(body: String) -> Self {
        Rendered { body, ok: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    let rendered = match run(cli.command, format) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return match e {
                CliError::Usage(_) => ExitCode::from(2),
                CliError::Domain(_) => ExitCode::from(1),
            };
        }
    };
    let io = match cli.out {
        Some(path) => std::fs::write(path, rendered.body.as_bytes()),
        None => std::io::stdout().write_all(rendered.body.as_bytes()),
    };
    if let Err(e) = io {
        eprintln!("error: io: {e}");
        return ExitCode::from(1);
    }
    if rendered.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(command: Command, format: Option<Format>) -> Result<Rendered, CliError> {
    match command {
        Command::Classify { poly } => {
            expect_format(format, Format::Json, "classify")?;
            report::classify(&poly)
        }
        Command::MsCheck { gamma, kind } => {
            expect_format(format, Format::Json, "ms-check")?;
            report::ms_check(&gamma, kind.into())
        }
        Command::Discriminant { poly, symbolic } => {
            expect_format(format, Format::Json, "discriminant")?;
            match (poly, symbolic) {
                (Some(p), None) => report::discriminant(&p),
                (None, Some(k)) => report::symbolic_discriminant(k),
                _ => Err(CliError::Usage(
                    "discriminant needs exactly one of --poly or --symbolic".into(),
                )),
            }
        }
        Command::Archnewt { poly } => report::archnewt(&poly, format),
        Command::Amoeba(cmd) => amoeba_cmd::run(cmd, format),
        Command::Verify { suite, seed, n, samples } => {
            expect_format(format, Format::Json, "verify")?;
            suites::run(suite, seed, n, samples)
        }
    }
}

/// Rejects --format values a command cannot produce.
pub fn expect_format(
    format: Option<Format>,
    natural: Format,
    command: &str,
) -> Result<(), CliError> {
    match format {
        None => Ok(()),
        Some(f) if f == natural => Ok(()),
        Some(f) => Err(CliError::Usage(format!(
            "{command} emits {natural:?} output, not {f:?}"
        ))),
    }
}

/// Serializes a JSON document with a trailing newline.
pub fn to_json<T: serde::Serialize>(value: &T) -> Result<String, CliError> {
    let mut body = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Domain(format!("serialization: {e}")))?;
    body.push('\n');
    Ok(body)
}

/// Parses a user-supplied value, mapping failures to usage errors.
pub fn parse_arg<T: std::str::FromStr>(text: &str, what: &str) -> Result<T, CliError>
where
    T::Err: std::fmt::Display,
{
    text.trim()
        .parse()
        .map_err(|e| CliError::Usage(format!("cannot parse {what} {text:?}: {e}")))
}
