//! `affschub`: compute and verify affine Schubert calculus identities.
//!
//! Exit codes: 0 success, 1 counterexample, 2 usage or configuration error.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Environment variable overriding the ball enumeration cap.
pub const BUDGET_ENV: &str = "AFFSCHUB_BALL_CAP";

#[derive(Parser, Debug)]
#[command(name = "affschub", version, about = "Affine Schubert calculus: localization, coproducts, type-A polynomials")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Cartan type letter (A-G).
    #[arg(long = "type", global = true, default_value = "A")]
    pub cartan_type: String,
    #[arg(long, global = true, default_value_t = 2)]
    pub rank: usize,
    /// JSON file `{"cartan": [[...]], "labels": [...]}`; overrides --type/--rank.
    #[arg(long, global = true)]
    pub cartan: Option<PathBuf>,
    #[arg(long, global = true, default_value = "H")]
    pub theory: TheoryArg,
    #[arg(long, global = true, default_value = "text")]
    pub format: Format,
    /// Recorded in JSON output; every command is deterministic.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TheoryArg {
    #[value(name = "K", alias = "k")]
    K,
    #[value(name = "H", alias = "h")]
    H,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Elements of length at most --max-length.
    Ball {
        #[arg(long, default_value_t = 2)]
        max_length: usize,
    },
    /// Values of the Schubert class of --w on a ball.
    Localize {
        #[arg(long, value_parser = parse_word)]
        w: Word,
        /// Radius of the ball (defaults to the length of w).
        #[arg(long)]
        max_length: Option<usize>,
        /// Ideal-sheaf class instead of the structure sheaf (K only).
        #[arg(long)]
        ideal: bool,
    },
    /// Factorizations w = w1 w2 (H) or w1 * w2 = w (K) with finite w2.
    CoproductTerms {
        #[arg(long, value_parser = parse_word)]
        w: Word,
    },
    /// Pointwise verification of identities.
    Verify(VerifyArgs),
    /// Grassmannian expansion of theta applied to the Schubert class of --w.
    ExpandGrassmannian {
        #[arg(long, value_parser = parse_word)]
        w: Word,
        #[arg(long)]
        radius: Option<usize>,
    },
    /// Truncated Peterson element of a Grassmannian element.
    Peterson {
        #[arg(long, value_parser = parse_word)]
        w: Word,
        /// Truncation length (defaults to the support radius).
        #[arg(long)]
        max_length: Option<usize>,
    },
    /// Type-A symmetric functions and polynomials.
    Poly(PolyArgs),
    /// Monomial positivity of affine Schubert polynomials.
    Positivity {
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// A single element; otherwise every element up to --max-length.
        #[arg(long, value_parser = parse_word)]
        w: Option<Word>,
        #[arg(long, default_value_t = 3)]
        max_length: usize,
    },
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(subcommand)]
    pub identity: Identity,
    /// Keep going after the first counterexample.
    #[arg(long, global = true)]
    pub exhaust: bool,
    /// Radius of the Schubert table (each identity has its own default).
    #[arg(long, global = true)]
    pub radius: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Identity {
    /// Coproduct formula for every w up to --max-length.
    Coproduct {
        #[arg(long, default_value_t = 3)]
        max_length: usize,
        #[arg(long, default_value = "both")]
        variant: VariantArg,
    },
    /// Endomorphisms, commutations, generator actions, Grassmannian bullet
    /// action and cup products.
    Suite {
        #[arg(long, default_value_t = 3)]
        max_length: usize,
        #[arg(long)]
        max_translation: Option<usize>,
    },
    /// Rebuild Schubert classes from Grassmannian ones.
    Recursion {
        #[arg(long, default_value_t = 3)]
        max_length: usize,
        #[arg(long, default_value_t = 4)]
        compare: usize,
    },
    /// Reflection classes at translations.
    Divisor {
        #[arg(long, default_value_t = 4)]
        max_translation: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    StructureSheaf,
    IdealSheaf,
    Both,
}

#[derive(Args, Debug)]
pub struct PolyArgs {
    pub family: Family,
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    #[arg(long, value_parser = parse_word)]
    pub w: Word,
    /// Truncation degree of symmetric functions (defaults to the length of w).
    #[arg(long)]
    pub degree: Option<u32>,
    /// Basis for symmetric functions in text output (default: automatic).
    #[arg(long)]
    pub basis: Option<BasisArg>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    AffineSchubert,
    AffineGrothendieck,
    AffineStanley,
    StableGrothendieck,
    Schubert,
    Grothendieck,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    M,
    H,
    E,
    S,
}

/// A word in the simple reflections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word(pub Vec<usize>);

/// `2,1,0`; `e` or the empty string is the identity.
fn parse_word(s: &str) -> Result<Word, String> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(Word(Vec::new()));
    }
    s.split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|e| format!("bad letter {x:?}: {e}")))
        .collect::<Result<_, _>>()
        .map(Word)
}

/// How a command ended.
pub enum Outcome {
    Success,
    Counterexample,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(2),
            };
        }
    };
    match commands::run(&cli) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::Counterexample) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
