//! `springer-levels`: tables, classification, point counts and invariant
//! checks for enhanced and exotic nilpotent cones of level r.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage error
//! (bad arguments or input, refused budget).

mod commands;
mod verify;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use springer_levels::partitions::{Case, LevelComposition, MultiPartition, Partition};
use springer_levels::pointcount::DEFAULT_BUDGET;

#[derive(Parser, Debug)]
#[command(name = "springer-levels", version, about = "Springer correspondence data for level-r enhanced and exotic cones")]
pub struct Cli {
    /// Seed for every random draw.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Refuse point enumerations larger than this.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u128,
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum CaseArg {
    Exotic,
    Enhanced,
}

impl From<CaseArg> for Case {
    fn from(c: CaseArg) -> Case {
        match c {
            CaseArg::Exotic => Case::Exotic,
            CaseArg::Enhanced => Case::Enhanced,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Combinatorics,
    Identities,
    Classifier,
    Counting,
    All,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Springer table rows (irreducible dimensions and stratum data).
    Table {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum)]
        case: CaseArg,
        /// One level composition, e.g. `1,2,0`; all of them if omitted.
        #[arg(long)]
        m: Option<LevelComposition>,
        /// Write `table.csv` and `table.json` into this directory.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Type of a point read from a JSON file.
    Classify {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    /// Tally types over all vectors for a Jordan representative of each ν.
    Count {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: usize,
        /// Jordan type of x, e.g. `2,1`; repeatable. Defaults to all ν ⊢ n.
        #[arg(long)]
        nu: Vec<Partition>,
        /// Field size; repeatable.
        #[arg(long, required = true)]
        q: Vec<u64>,
    },
    /// Run an invariant suite and report each check.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        /// Cap on n for every check in the suite.
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Standard (or seeded semi-standard) witness of a type.
    StandardElement {
        /// e.g. `(2;1,1)` or `(1;-;1)`.
        #[arg(long)]
        label: MultiPartition,
        #[arg(long)]
        q: u64,
        /// Draw random admissible coefficients from `--seed`.
        #[arg(long)]
        semi: bool,
    },
}

pub enum Outcome {
    Ok(String),
    ChecksFailed(String),
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    match &cli.command {
        Command::Table { n, r, case, m, out_dir } => {
            commands::table(cli, *n, *r, (*case).into(), m.as_ref(), out_dir.as_deref()).map(Outcome::Ok)
        }
        Command::Classify { input } => commands::classify(cli, input).map(Outcome::Ok),
        Command::Count { n, r, nu, q } => commands::count(cli, *n, *r, nu, q).map(Outcome::Ok),
        Command::StandardElement { label, q, semi } => commands::standard(cli, label, *q, *semi).map(Outcome::Ok),
        Command::Verify { suite, max_n } => verify::run(cli, *suite, *max_n),
    }
}

fn emit(cli: &Cli, text: &str) -> std::io::Result<()> {
    match &cli.output {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, code) = match run(&cli) {
        Ok(Outcome::Ok(text)) => (text, ExitCode::SUCCESS),
        Ok(Outcome::ChecksFailed(text)) => (text, ExitCode::from(1)),
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = emit(&cli, &text) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    code
}
