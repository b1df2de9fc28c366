use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand};

use gkm_cli::commands;
use gkm_cli::doc::{load_document, save_document, to_json};
use gkm_cli::dot::export_dot;
use gkm_cli::fixtures::emit_fixture;

/// Equivariant cohomology of GKM graphs, in exact rational arithmetic.
#[derive(Parser)]
#[command(name = "gkm", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Graded dimensions of the graph algebra up to a maximum degree.
    Hilbert {
        /// Graph document (JSON).
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 6)]
        max_degree: u32,
        /// Machine-readable output.
        #[arg(long)]
        json: bool,
    },
    /// Explicit polynomial basis of one graded slice.
    Basis {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        json: bool,
    },
    /// Cross-validate a non-abelian graph against the invariant part of
    /// an abelian graph. Exits 0 iff all degrees agree.
    Oracle {
        /// Non-abelian graph document.
        #[arg(long)]
        nonabelian: PathBuf,
        /// Abelian graph document.
        #[arg(long)]
        abelian: PathBuf,
        /// Vertex action document for the abelian graph.
        #[arg(long)]
        action: PathBuf,
        #[arg(long, default_value_t = 6)]
        max_degree: u32,
        #[arg(long)]
        json: bool,
    },
    /// Build the orbit graph of a weight under a Weyl group.
    BuildOrbit {
        /// Root system family: A, B, C, D or G.
        #[arg(long)]
        family: String,
        #[arg(long)]
        rank: usize,
        /// Comma-separated rational coordinates, e.g. "1,1".
        #[arg(long)]
        weight: String,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Emit a shipped fixture document.
    Fixture {
        name: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Render a graph document as Graphviz DOT text.
    ExportDot {
        #[arg(long)]
        graph: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a graph document; exits 0 iff valid.
    Validate {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

fn emit(text: &str, output: Option<&PathBuf>) -> Result<()> {
    match output {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{}", text),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Hilbert {
            graph,
            max_degree,
            json,
        } => {
            print!("{}", commands::hilbert_output(&graph, max_degree, json)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Basis {
            graph,
            degree,
            json,
        } => {
            print!("{}", commands::basis_output(&graph, degree, json)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle {
            nonabelian,
            abelian,
            action,
            max_degree,
            json,
        } => {
            let (text, agree) =
                commands::oracle_output(&nonabelian, &abelian, &action, max_degree, json)?;
            print!("{}", text);
            Ok(if agree {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::BuildOrbit {
            family,
            rank,
            weight,
            output,
        } => {
            let doc = commands::build_orbit_document(&family, rank, &weight)?;
            match output {
                Some(path) => save_document(&doc, &path)?,
                None => print!("{}", to_json(&doc)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Fixture { name, output } => {
            let doc = emit_fixture(&name).map_err(anyhow::Error::msg)?;
            match output {
                Some(path) => save_document(&doc, &path)?,
                None => print!("{}", to_json(&doc)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::ExportDot { graph, output } => {
            let doc = load_document(&graph)?;
            emit(&export_dot(&doc), output.as_ref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Validate { graph, json } => {
            let (text, ok) = commands::validate_output(&graph, json)?;
            print!("{}", text);
            Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::FAILURE
        }
    }
}
