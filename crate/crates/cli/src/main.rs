//! `stabkit` — stabilizer-code workbench CLI.
//!
//! Subcommands: `catalog`, `verify`, `encode`, `distance`, `bloch`, `export`.
//! Code-consuming subcommands take `--code <catalog-name>` or `--file <path>`
//! and `--json` for the machine-readable report. Exit codes: 0 success, 1
//! verification failure (or discrepancy under `--strict`), 2 usage or input
//! errors.

mod document;
mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};
use document::{load_definition, CodeDefinitionDocument, DocumentError};
use stabkit::StabilizerCode;
use report::{
    to_json, BlochReport, CatalogReport, DistanceReport, EncodeReport, VerifyReport, TOOL_VERSION,
};
use stabkit::code::validate_definition;
use stabkit::dephasing::{
    bloch_coordinates, genus5_closed_form, DephasingError, DephasingModel, DephasingSpec,
};
use stabkit::distance::{
    cross_validate_distance, kl_distance, symplectic_distance, DistanceError,
};
use stabkit::state::encode_zero;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "stabkit",
    version,
    about = "Stabilizer-code workbench: catalog, structural verification, \
             minimum-weight distance search, and dephasing analysis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Where the code definition comes from: a catalog name or a document file.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Catalog code name (see `stabkit catalog`)
    #[arg(long)]
    code: Option<String>,
    /// Path to a code-definition document
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Copy, Clone, ValueEnum)]
enum MethodArg {
    /// Knill–Laflamme matrix route over the logical basis
    Kl,
    /// GF(2) symplectic commutant route
    Symplectic,
    /// Run both and cross-validate
    Both,
}

#[derive(Copy, Clone, ValueEnum)]
enum ModelArg {
    /// One shared fluctuating field
    Global,
    /// Independent per-qubit fields
    Local,
}

#[derive(Subcommand)]
enum Command {
    /// List the built-in codes with their claimed parameters
    Catalog {
        /// Emit the machine-readable report
        #[arg(long)]
        json: bool,
    },
    /// Structural verification: commutation, rank, logical pairs, claims
    Verify {
        #[command(flatten)]
        source: Source,
        /// Emit the machine-readable report
        #[arg(long)]
        json: bool,
        /// Accepted for symmetry; `verify` already fails on any discrepancy
        #[arg(long)]
        strict: bool,
    },
    /// Prepare the all-zeros logical state and dump its support
    Encode {
        #[command(flatten)]
        source: Source,
        /// Emit the machine-readable report
        #[arg(long)]
        json: bool,
    },
    /// Minimum-weight undetectable-operator search
    Distance {
        #[command(flatten)]
        source: Source,
        /// Search route
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
        /// Highest weight to examine (default: all n qubits)
        #[arg(long)]
        max_weight: Option<usize>,
        /// Emit the machine-readable report
        #[arg(long)]
        json: bool,
        /// Exit 1 when the found distance disagrees with the claimed one
        #[arg(long)]
        strict: bool,
    },
    /// Dephased logical Bloch vector at one parameter point
    Bloch {
        #[command(flatten)]
        source: Source,
        /// Noise model
        #[arg(long, value_enum)]
        model: ModelArg,
        /// Noise strength γ ≥ 0
        #[arg(long)]
        gamma: f64,
        /// Elapsed time t ≥ 0
        #[arg(long)]
        time: f64,
        /// Initial polar angle θ ∈ [0, π]
        #[arg(long)]
        theta: f64,
        /// Initial azimuth φ ∈ [0, 2π]
        #[arg(long)]
        phi: f64,
        /// Logical pair index
        #[arg(long, default_value_t = 0)]
        pair: usize,
        /// Also print the closed-form prediction and the deviation
        #[arg(long)]
        compare_closed_form: bool,
        /// Emit the machine-readable report
        #[arg(long)]
        json: bool,
    },
    /// Write a code-definition document
    Export {
        #[command(flatten)]
        source: Source,
        /// Output path (standard output when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Accepted for symmetry; documents are always JSON
        #[arg(long)]
        json: bool,
    },
}

/// Failure destined for stderr, carrying its exit code.
struct Failure {
    exit: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            exit: 2,
            message: message.into(),
        }
    }

    fn verification(message: impl Into<String>) -> Self {
        Failure {
            exit: 1,
            message: message.into(),
        }
    }
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        match e {
            // A well-formed document that fails code validation is a
            // verification failure; everything else is bad input.
            DocumentError::Build(_) => Failure::verification(e.to_string()),
            _ => Failure::usage(e.to_string()),
        }
    }
}

fn build_code(source: &Source) -> Result<StabilizerCode, Failure> {
    match (&source.code, &source.file) {
        (Some(name), None) => stabkit::catalog::build_by_name(name).map_err(|e| match e {
            stabkit::catalog::CatalogError::Build(inner) => {
                Failure::verification(inner.to_string())
            }
            other => Failure::usage(other.to_string()),
        }),
        (None, Some(path)) => Ok(document::import_code_from_path(path)?),
        _ => unreachable!("argument parsing enforces exactly one source"),
    }
}

fn main() {
    let cli = Cli::parse();
    let exit = match run(cli.command) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            failure.exit
        }
    };
    std::process::exit(exit);
}

fn run(command: Command) -> Result<i32, Failure> {
    match command {
        Command::Catalog { json } => {
            let report = CatalogReport::collect();
            if json {
                println!("{}", to_json(&report));
            } else {
                println!("{}", report.render_text());
            }
            Ok(0)
        }

        Command::Verify {
            source,
            json,
            strict: _,
        } => {
            let def = load_definition(&source.code, &source.file)?;
            let report =
                VerifyReport::from_definition_report(&validate_definition(&def), def.expected.as_ref());
            if json {
                println!("{}", to_json(&report));
            } else {
                println!("{}", report.render_text());
            }
            Ok(if report.pass() { 0 } else { 1 })
        }

        Command::Encode { source, json } => {
            let code = build_code(&source)?;
            let state =
                encode_zero(&code).map_err(|e| Failure::verification(e.to_string()))?;
            if json {
                println!("{}", to_json(&EncodeReport::from_state(&code, &state)));
            } else {
                for line in state.dump_lines() {
                    println!("{line}");
                }
            }
            Ok(0)
        }

        Command::Distance {
            source,
            method,
            max_weight,
            json,
            strict,
        } => {
            let code = build_code(&source)?;
            let max_weight = max_weight.unwrap_or_else(|| code.n());
            let result = match method {
                MethodArg::Kl => kl_distance(&code, max_weight),
                MethodArg::Symplectic => symplectic_distance(&code, max_weight),
                MethodArg::Both => cross_validate_distance(&code, max_weight),
            }
            .map_err(|e| match e {
                DistanceError::InvalidMaxWeight { .. } => Failure::usage(e.to_string()),
                other => Failure::verification(other.to_string()),
            })?;
            let report = DistanceReport::from_result(&code, &result);
            if json {
                println!("{}", to_json(&report));
            } else {
                println!("{}", report.render_text());
            }
            Ok(if strict && !report.agrees_with_expected {
                1
            } else {
                0
            })
        }

        Command::Bloch {
            source,
            model,
            gamma,
            time,
            theta,
            phi,
            pair,
            compare_closed_form,
            json,
        } => {
            let code = build_code(&source)?;
            let model = match model {
                ModelArg::Global => DephasingModel::Global,
                ModelArg::Local => DephasingModel::Local,
            };
            let spec = DephasingSpec {
                model,
                gamma,
                t: time,
                theta,
                phi,
                pair_index: pair,
            };
            let bloch = bloch_coordinates(&code, &spec).map_err(|e| match e {
                DephasingError::InvalidParameter { .. } => Failure::usage(e.to_string()),
                DephasingError::State(ref inner)
                    if matches!(inner, stabkit::state::StateError::ParameterOutOfRange { .. }
                        | stabkit::state::StateError::PairIndexOutOfRange { .. }
                        | stabkit::state::StateError::MissingLogicalPairs { .. }) =>
                {
                    Failure::usage(e.to_string())
                }
                other => Failure::verification(other.to_string()),
            })?;
            let mut report = BlochReport {
                version: TOOL_VERSION,
                code: code.name().to_string(),
                model: model.to_string(),
                gamma,
                time,
                theta,
                phi,
                pair_index: pair,
                r_x: bloch.r_x,
                r_y: bloch.r_y,
                r_z: bloch.r_z,
                closed_form: None,
            };
            if compare_closed_form {
                report = report.with_closed_form(genus5_closed_form(theta, phi, gamma, time));
            }
            if json {
                println!("{}", to_json(&report));
            } else {
                println!("{}", report.render_text());
            }
            Ok(0)
        }

        Command::Export {
            source,
            out,
            json: _,
        } => {
            let def = load_definition(&source.code, &source.file)?;
            let text = CodeDefinitionDocument::from_definition(&def).render();
            match out {
                Some(path) => std::fs::write(&path, format!("{text}\n")).map_err(|e| {
                    Failure::usage(format!("{}: {e}", path.display()))
                })?,
                None => println!("{text}"),
            }
            Ok(0)
        }
    }
}
