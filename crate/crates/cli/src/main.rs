//! `pgsym`: validate, analyze, construct and enumerate finite partial
//! groups and partial groupoids stored as JSON documents.

mod commands;
mod document;
mod error;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use report::Report;

#[derive(Debug, Parser)]
#[command(
    name = "pgsym",
    version,
    about = "Finite partial groups as truncated symmetric sets"
)]
pub struct Cli {
    /// Print a machine-readable JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Accepted for compatibility; every command is deterministic and
    /// uses no randomness.
    #[arg(long, global = true)]
    pub seedless_deterministic: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a document loads and describes a valid object.
    Validate { file: PathBuf },
    /// Dimension, p-invariant, spininess, groupoid and group tests,
    /// components and nondegenerate counts of a symmetric set.
    Info { file: PathBuf },
    /// The n-skeleton of a symmetric set.
    Skeleton {
        file: PathBuf,
        #[arg(short = 'n', long = "degree")]
        n: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Eilenberg–Zilber factorization of one simplex, chosen as
    /// DEGREE:INDEX in the sorted listing of all simplices of that degree.
    Ez {
        file: PathBuf,
        #[arg(long)]
        simplex: String,
    },
    /// Nerve of a group given by its multiplication table.
    NerveGroup {
        table: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Nerve of a groupoid given by a composition table.
    NerveGroupoid {
        presentation: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Nerve of the transporter groupoid of a group on a subgroup
    /// collection.
    Transporter {
        spec: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// Reject a collection that is not closed under conjugation
        /// instead of closing it with a warning.
        #[arg(long)]
        strict_delta: bool,
    },
    /// Product of two partial groupoids.
    Product {
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// One-point union of two partial groups.
    Wedge {
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Split a partial group into wedge-indecomposable factors.
    Decompose {
        file: PathBuf,
        /// Write each factor to this directory.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Count or list the im-partial subgroups of a partial group.
    Subgroups(SubgroupArgs),
    /// All partial groups of a given cardinality up to isomorphism.
    Enumerate {
        /// Number of elements, identity included.
        #[arg(long)]
        card: usize,
        #[arg(long, default_value_t = pgsym_core::enumeration::DEFAULT_ENUMERATION_CAP)]
        cap: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct SubgroupArgs {
    pub file: PathBuf,
    /// Only count (the default).
    #[arg(long, conflicts_with = "list")]
    pub count: bool,
    /// Write every subgroup to the output directory.
    #[arg(long, requires = "output")]
    pub list: bool,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Info { .. } => "info",
            Command::Skeleton { .. } => "skeleton",
            Command::Ez { .. } => "ez",
            Command::NerveGroup { .. } => "nerve-group",
            Command::NerveGroupoid { .. } => "nerve-groupoid",
            Command::Transporter { .. } => "transporter",
            Command::Product { .. } => "product",
            Command::Wedge { .. } => "wedge",
            Command::Decompose { .. } => "decompose",
            Command::Subgroups(_) => "subgroups",
            Command::Enumerate { .. } => "enumerate",
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut report = Report::new(cli.command.name());
    let code = match commands::run(&cli.command, &mut report) {
        Ok(()) => 0,
        Err(e) => {
            report.fail(&e);
            e.exit_code()
        }
    };
    let mut stdout = std::io::stdout().lock();
    if cli.json {
        let _ = stdout.write_all(report.to_json().as_bytes());
    } else {
        let (out, err) = report.to_text();
        let _ = stdout.write_all(out.as_bytes());
        let _ = std::io::stderr().write_all(err.as_bytes());
    }
    ExitCode::from(code as u8)
}
