//! symsurf: decide when a second homology class of a closed symplectic
//! 4-manifold provably cannot be represented by an embedded, possibly
//! disconnected, symplectic surface.

mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use input::CliError;
use report::{InputEcho, Report, ReportResults, SearchResult};
use symsurf::{cover, obstruction, Manifold4};

#[derive(Parser)]
#[command(
    name = "symsurf",
    version,
    about = "Exact obstructions to embedded symplectic surface representatives"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ManifoldSource {
    /// Built-in manifold: k3, t4, cp2, s2xs2.
    #[arg(
        long,
        conflicts_with = "manifold",
        required_unless_present = "manifold"
    )]
    preset: Option<String>,
    /// Manifold description file (JSON: name, gram, K, spin, omega?).
    #[arg(long)]
    manifold: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Rank, signature, parity, K^2 and validation summary.
    Invariants {
        #[command(flatten)]
        source: ManifoldSource,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Invariants of the d-fold cyclic cover branched along a surface in
    /// class d*A.
    Cover {
        #[command(flatten)]
        source: ManifoldSource,
        /// Branch class A as comma-separated coefficients.
        #[arg(long, allow_hyphen_values = true)]
        class: String,
        /// Covering degree d >= 1.
        #[arg(long, allow_negative_numbers = true)]
        divisor: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Test every factorization B = d*A for an obstruction.
    Obstruct {
        #[command(flatten)]
        source: ManifoldSource,
        /// The class B as comma-separated coefficients.
        #[arg(long, allow_hyphen_values = true)]
        class: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Scan all classes supported on the given indices with bounded
    /// coefficients for obstructed (A, d) pairs.
    Search {
        #[command(flatten)]
        source: ManifoldSource,
        /// Comma-separated 0-based basis indices spanning the box.
        #[arg(long)]
        indices: String,
        /// Coefficient bound R >= 1 (box [-R, R] per index).
        #[arg(long, allow_negative_numbers = true)]
        bound: i64,
        /// Largest covering degree to try (from 2).
        #[arg(long, allow_negative_numbers = true)]
        dmax: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(command: Command) -> Result<String, CliError> {
    match command {
        Command::Invariants { source, format } => {
            let m = load(&source)?;
            let report = Report {
                command: "invariants".into(),
                input_echo: InputEcho::manifold_only(&m),
                results: ReportResults::Invariants(report::invariants_result(&m)?),
                warnings: vec![],
            };
            Ok(render(&report, format))
        }
        Command::Cover {
            source,
            class,
            divisor,
            format,
        } => {
            let m = load(&source)?;
            let a = input::parse_class(&class)?;
            let inv = cover::invariants(&m, &a, divisor)?;
            let report = Report {
                command: "cover".into(),
                input_echo: InputEcho {
                    class: Some(a.coeffs().to_vec()),
                    divisor: Some(divisor),
                    ..InputEcho::manifold_only(&m)
                },
                results: ReportResults::Cover(inv),
                warnings: vec![],
            };
            Ok(render(&report, format))
        }
        Command::Obstruct {
            source,
            class,
            format,
        } => {
            let m = load(&source)?;
            let b = input::parse_class(&class)?;
            let check = obstruction::check_class(&m, &b)?;
            let sw = obstruction::sw_vanishing_report(&m, &b, &check)?;
            let mut warnings = Vec::new();
            if m.omega_positive(&b)? == Some(false) {
                warnings.push(
                    "omega does not evaluate positively on B: no symplectic representative \
                     exists with this orientation"
                        .to_string(),
                );
            }
            let results = report::obstruct_result(&m, &b, check, sw)?;
            let report = Report {
                command: "obstruct".into(),
                input_echo: InputEcho {
                    class: Some(b.coeffs().to_vec()),
                    ..InputEcho::manifold_only(&m)
                },
                results: ReportResults::Obstruct(results),
                warnings,
            };
            Ok(render(&report, format))
        }
        Command::Search {
            source,
            indices,
            bound,
            dmax,
            format,
        } => {
            let m = load(&source)?;
            let idx = input::parse_indices(&indices)?;
            let hits = obstruction::search(&m, &idx, bound, dmax)?;
            let report = Report {
                command: "search".into(),
                input_echo: InputEcho {
                    indices: Some(idx),
                    bound: Some(bound),
                    dmax: Some(dmax),
                    ..InputEcho::manifold_only(&m)
                },
                results: ReportResults::Search(SearchResult {
                    count: hits.len(),
                    hits,
                }),
                warnings: vec![],
            };
            Ok(render(&report, format))
        }
    }
}

fn load(source: &ManifoldSource) -> Result<Manifold4, CliError> {
    input::load_manifold(source.preset.as_deref(), source.manifold.as_deref())
}

fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Text => report::render_text(report),
        Format::Json => report::render_json(report),
    }
}
