//! `dextral`: checks algebra and graph files, exports catalog entries and
//! runs the verification suite.
//!
//! Exit codes: 0 when no check fails, 1 when at least one fails, 2 on
//! input errors.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use dextral_core::dextral::SearchConfig;
use dextral_core::exactlin::FieldSpec;
use dextral_core::verify::VerifyOptions;

use crate::report::Report;

#[derive(Parser)]
#[command(name = "dextral", version, about = "Dextral symmetry, series and Leavitt path algebra checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Search {
    /// 1: basis triples; 2: also pair sums; 3: also the {-1,0,1} grid.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(1..=3))]
    witness_depth: u8,
    /// Maximum number of grid triples at depth 3.
    #[arg(long, default_value_t = 100_000)]
    triple_budget: u64,
    /// Enumerate all triples over GF(p) when p^(3 dim) is at most this.
    #[arg(long, default_value_t = 10_000_000)]
    enumeration_budget: u64,
}

impl Search {
    fn config(&self) -> SearchConfig {
        SearchConfig {
            depth: self.witness_depth,
            triple_budget: self.triple_budget,
            enumeration_budget: self.enumeration_budget,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Identities, dextral decision, series and predicates for an algebra file.
    Check {
        path: PathBuf,
        /// Write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Read the structure constants over this field (rational or gf:<p>).
        #[arg(long)]
        field: Option<FieldSpec>,
        #[command(flatten)]
        search: Search,
    },
    /// Classify the Leavitt path algebra of a graph file.
    Leavitt {
        path: PathBuf,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Browse and export the built-in catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Run the full verification suite.
    Verify {
        #[arg(long)]
        json: Option<PathBuf>,
        /// A module name or a criterion number.
        #[arg(long)]
        only: Option<String>,
        /// Integer samples for rational parameters, e.g. -2..2.
        #[arg(long, default_value = "-2..2", allow_hyphen_values = true, value_parser = commands::parse_range)]
        param_samples: (i64, i64),
        #[command(flatten)]
        search: Search,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// One line per entry.
    List,
    /// Products, expected properties and notes of an entry.
    Show { id: String },
    /// Print an entry as an algebra file.
    Export {
        id: String,
        /// Parameter value, e.g. --param alpha=1/2.
        #[arg(long = "param")]
        params: Vec<String>,
        #[arg(long)]
        field: Option<FieldSpec>,
        /// Write to this file instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn finish(report: Report, json: Option<PathBuf>) -> anyhow::Result<ExitCode> {
    print!("{}", commands::summary(&report));
    if let Some(path) = json {
        report.write(&path)?;
    }
    Ok(if report.failed() { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Check { path, json, field, search } => finish(commands::check(&path, field, &search.config())?, json),
        Command::Leavitt { path, json } => finish(commands::leavitt(&path)?, json),
        Command::Verify { json, only, param_samples, search } => {
            let opts = VerifyOptions { param_range: param_samples, only, search: search.config(), ..Default::default() };
            finish(commands::verify(&opts)?, json)
        }
        Command::Catalog { action } => {
            match action {
                CatalogAction::List => print!("{}", commands::catalog_list()),
                CatalogAction::Show { id } => print!("{}", commands::catalog_show(&id)?),
                CatalogAction::Export { id, params, field, output } => {
                    let text = commands::catalog_export(&id, &params, field)?;
                    match output {
                        Some(p) => std::fs::write(&p, text)?,
                        None => print!("{text}"),
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
