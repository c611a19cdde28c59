//! `a2web`: command-line access to growth diagrams, webs, lattices and
//! hulls.
//!
//! Exit status is 0 on success, 1 when the input is well formed but a
//! computation fails or a check does not pass, and 2 on usage errors.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use a2web::growth::TypeWord;
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "a2web", version, about = "Growth diagrams, diskoids and sl3 webs, combinatorially and in the A2 building")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Tikz,
}

impl Format {
    fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Dot => "dot",
            Format::Tikz => "tex",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FieldArg {
    #[value(name = "Q")]
    Q,
    #[value(name = "Fp")]
    Fp,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension of the invariant space of a type word.
    Dim { word: TypeWord },
    /// Growth diagrams of a type word, in enumeration order.
    Diagrams {
        word: TypeWord,
        /// Print only the number of diagrams.
        #[arg(long)]
        count: bool,
        /// Print a JSON array instead of the text form.
        #[arg(long, conflicts_with = "count")]
        json: bool,
    },
    /// Non-elliptic webs of a type word, one per growth diagram.
    Webs {
        word: TypeWord,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Write one file per web into this directory instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dual web of a diskoid given as JSON.
    Dualize {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Reduces a web given as JSON to a combination of non-elliptic webs.
    Reduce { file: PathBuf },
    /// Promotion of a growth diagram given as JSON.
    Promote { file: PathBuf },
    /// Distance between lattices I and J (0-based) of a JSON lattice list.
    Distance { file: PathBuf, i: usize, j: usize },
    /// Hull of a JSON lattice list and its induced complex.
    #[command(group(ArgGroup::new("kind").required(true).args(["min", "max", "conv"])))]
    Hull {
        #[arg(long)]
        min: bool,
        #[arg(long)]
        max: bool,
        #[arg(long)]
        conv: bool,
        /// Print the induced complex as DOT instead of JSON.
        #[arg(long)]
        dot: bool,
        file: PathBuf,
    },
    /// Samples a polygon of lattice classes realizing one growth diagram.
    Realize {
        word: TypeWord,
        /// Index of the diagram in enumeration order.
        #[arg(long)]
        component: usize,
        /// Base seed; the component index selects a ChaCha stream.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "Fp")]
        field: FieldArg,
        /// Prime for the finite field.
        #[arg(long, default_value_t = a2web::series::DEFAULT_PRIME)]
        p: u32,
        #[arg(long, default_value_t = 1000)]
        max_retries: usize,
    },
    /// Checks the diagram/diskoid/web correspondence for every component.
    Verify {
        word: TypeWord,
        /// Also realize each component in the building and compare hulls.
        #[arg(long)]
        geometric: bool,
        #[arg(long, default_value_t = 1000)]
        max_retries: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
