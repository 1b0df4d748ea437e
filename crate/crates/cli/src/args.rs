use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "chowcalc",
    version,
    about = "Chern-class calculus for Chow rings of plane curve moduli"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run every check (relation formulas, presentations, tautological classes) over a range of d.
    Verify {
        /// Degree or inclusive range, e.g. 7 or 4..20.
        #[arg(long)]
        d: String,
        #[command(flatten)]
        batch: BatchArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compare the relation ideals with the expected quotient rings.
    Present {
        #[arg(long)]
        d: String,
        #[command(flatten)]
        batch: BatchArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Coefficients A, B, C of lambda3 in the monomial-symmetric basis.
    Table {
        #[arg(long, conflicts_with = "d")]
        from: Option<u64>,
        #[arg(long, conflicts_with = "d")]
        to: Option<u64>,
        #[arg(long)]
        d: Option<String>,
        #[command(flatten)]
        batch: BatchArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Pullbacks of delta and lambda1..lambda3 at one degree.
    Lambda {
        #[arg(long)]
        d: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Evaluate an expression, e.g. "push(h^2 * euler_twist(d-1))".
    Eval {
        expr: String,
        /// Treat d as an indeterminate (the default).
        #[arg(long, conflicts_with = "d")]
        generic: bool,
        /// Fix d to a rational value.
        #[arg(long)]
        d: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args, Debug, Clone)]
pub struct BatchArgs {
    /// Worker threads; 0 picks the number of CPUs.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    /// Largest degree accepted in a range.
    #[arg(long, default_value_t = 64)]
    pub max_d: u64,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}
