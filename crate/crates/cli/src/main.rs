//! `superalg`: command-line front end. Every verb writes one JSON report.

mod inputs;
mod job;
mod report;
mod verbs;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use report::Failure;

#[derive(Debug, Parser)]
#[command(name = "superalg", version, about = "Exact super linear algebra toolkit")]
pub struct Cli {
    /// Seed for randomized harnesses.
    #[arg(long, global = true, default_value_t = superalg::random::DEFAULT_SEED)]
    pub seed: u64,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(Debug, Clone, Args, Default)]
pub struct Source {
    /// Input JSON document.
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
    /// Build the input from a parameter string instead, e.g. `osp(1|2)`.
    #[arg(long)]
    pub params: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Verb {
    /// Lie superalgebras.
    #[command(subcommand)]
    Algebra(AlgebraVerb),
    /// Jordan superalgebras.
    #[command(subcommand)]
    Jordan(JordanVerb),
    /// kan(J) with its graded dimensions.
    Kan(Source),
    /// Rebuild J from kan(J) and compare.
    Roundtrip(Source),
    /// The Chevalley–Eilenberg field of a Lie superalgebra.
    Ce(Source),
    /// Decide [X, X] = 0 for a field, or for the CE field of an algebra.
    HomologicalCheck(Source),
    /// Derived bracket on Π(g₋₁).
    DerivedBracket(Source),
    /// Divergence of a field on 0|n.
    Divergence(Source),
    /// Supertrace of a matrix.
    Str(Source),
    /// Berezinian of a matrix.
    Ber(Source),
    /// Queer trace of a matrix.
    Qtr(Source),
    /// Queer determinant of a matrix.
    Qet(Source),
    /// Cross-ratio invariants of a quadruple.
    Crossratio(CrossArgs),
    /// Randomized Möbius invariance harness.
    Invariance(InvarianceArgs),
    /// Execute a job file.
    Run {
        #[arg(long)]
        job: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum AlgebraVerb {
    Build {
        #[arg(long)]
        params: String,
    },
    Check(Source),
}

#[derive(Debug, Subcommand)]
pub enum JordanVerb {
    Build {
        #[arg(long)]
        params: String,
    },
    Check(Source),
}

#[derive(Debug, Clone, Args)]
pub struct CrossArgs {
    #[arg(long)]
    pub variant: String,
    #[arg(long)]
    pub order: Option<usize>,
    #[arg(long = "in")]
    pub input: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct InvarianceArgs {
    #[arg(long)]
    pub variant: String,
    /// Signature `(m|n)`.
    #[arg(long)]
    pub params: String,
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
    #[arg(long)]
    pub order: Option<usize>,
    #[arg(long, default_value_t = 4)]
    pub odd_generators: usize,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (seed, out) = (cli.seed, cli.out.clone());
    let outcome = match cli.verb {
        Verb::Run { job } => job::run_job(&job),
        verb => verbs::dispatch(verb, seed),
    };
    let (doc, code) = match outcome {
        Ok(outcome) => {
            let code = if outcome.passed { 0 } else { 1 };
            (outcome.document, code)
        }
        Err(f) => {
            eprintln!("superalg: {}", f.message);
            (f.document(), f.code)
        }
    };
    if let Err(e) = report::write(&doc, out.as_deref()) {
        eprintln!("superalg: cannot write report: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}

pub type Outcome = std::result::Result<report::Completed, Failure>;
