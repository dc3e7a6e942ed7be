use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use unambig_core::explorer::ScanTarget;
use unambig_core::{Budget, Morphism, Pattern};

#[derive(Debug, Parser)]
#[command(name = "unambig", version, about = "Ambiguity of morphisms with respect to patterns")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Emit one JSON object per line.
    #[arg(long, global = true)]
    pub json: bool,

    /// Maximum solver nodes per search.
    #[arg(long, global = true, value_name = "N", default_value_t = Budget::DEFAULT_NODES)]
    pub budget: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a morphism is ambiguous with respect to a pattern.
    CheckAmbiguity {
        #[arg(long, value_parser = parse_pattern)]
        pattern: Pattern,
        #[arg(long, value_parser = parse_morphism)]
        morphism: Morphism,
        /// Only count nonerasing alternatives.
        #[arg(long)]
        nonerasing_only: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Decide whether a pattern is a fixed point of a nontrivial morphism.
    FixedPoint {
        #[arg(long, value_parser = parse_pattern)]
        pattern: Pattern,
        #[command(flatten)]
        common: Common,
    },
    /// Find the first pair i < j with an unambiguous sigma_ij.
    SearchSigmaIj {
        #[arg(long, value_parser = parse_pattern)]
        pattern: Pattern,
        #[command(flatten)]
        common: Common,
    },
    /// Find an unambiguous 1-uniform morphism into K letters.
    SearchUniform {
        #[arg(long, value_parser = parse_pattern)]
        pattern: Pattern,
        #[arg(long, value_name = "K")]
        alphabet_size: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Print words and patterns of the constructed families.
    Generate {
        #[command(subcommand)]
        family: Family,
        #[command(flatten)]
        common: Common,
    },
    /// Sweep canonical patterns and write one JSON record per pattern.
    Scan {
        #[arg(long, value_parser = parse_target)]
        target: ScanTarget,
        #[arg(long, value_name = "L")]
        max_len: usize,
        /// Worker threads; 0 picks one per core.
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, value_name = "FILE.jsonl")]
        out: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Run a named consistency check (thue, shortest, pi-db, pair-theorem, un-factors, prolix).
    Verify {
        name: String,
        #[arg(long, value_parser = parse_range)]
        m: Option<RangeInclusive<u32>>,
        #[arg(long, value_parser = parse_range)]
        n: Option<RangeInclusive<u32>>,
        #[arg(long, value_parser = parse_range)]
        k: Option<RangeInclusive<u32>>,
        #[arg(long)]
        max_len: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Subcommand)]
pub enum Family {
    /// Prefix of the square-free Thue word.
    Thue {
        #[arg(long)]
        length: usize,
    },
    /// Thue word prefix with every letter doubled.
    Doubled {
        #[arg(long)]
        length: usize,
    },
    /// The pattern x1 x1 x2 x2 ... xm xm.
    AlphaM {
        #[arg(long)]
        m: u32,
    },
    /// Exponent pattern for a square-free exponent sequence.
    Exponent {
        #[arg(long, value_parser = parse_exponents)]
        beta: Exponents,
    },
    /// Shortest succinct pattern on n variables with its binary morphism.
    Shortest {
        #[arg(long)]
        n: u32,
    },
    /// Lexicographically least non-cyclic de Bruijn word, or all of them.
    Debruijn {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        enumerate: bool,
    },
    /// Patterns built from non-cyclic de Bruijn words of order 2.
    PiDb {
        #[arg(long)]
        k: u32,
    },
}

/// Exponent list as given on the command line.
#[derive(Debug, Clone)]
pub struct Exponents(pub Vec<u32>);

fn parse_pattern(s: &str) -> Result<Pattern, String> {
    unambig_core::parse_pattern(s).map_err(|e| e.to_string())
}

fn parse_morphism(s: &str) -> Result<Morphism, String> {
    unambig_core::parse_morphism(s).map_err(|e| e.to_string())
}

fn parse_target(s: &str) -> Result<ScanTarget, String> {
    s.parse().map_err(|e: unambig_core::Error| e.to_string())
}

fn parse_exponents(s: &str) -> Result<Exponents, String> {
    s.split_whitespace()
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| format!("invalid token `{t}`: expected a positive integer"))
        })
        .collect::<Result<_, _>>()
        .map(Exponents)
}

/// `a`, `a..b` or `a..=b`; both ends inclusive.
pub fn parse_range(s: &str) -> Result<RangeInclusive<u32>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<u32>()
            .map_err(|_| format!("invalid token `{t}`: expected a number"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("invalid token `{s}`: empty range"));
    }
    Ok(lo..=hi)
}
