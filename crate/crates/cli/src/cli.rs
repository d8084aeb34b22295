use std::collections::BTreeSet;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "normbundle",
    version,
    about = "Normal bundle splitting types of rational monomial curves"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the splitting type of one curve.
    Type {
        #[command(flatten)]
        curve: CurveArgs,
        /// Emit the JSON envelope instead of text.
        #[arg(long)]
        json: bool,
    },

    /// Print φ(k) and its second differences.
    Phi {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long)]
        json: bool,
    },

    /// Compute the splitting type and check it against the exact-rank oracle.
    Verify {
        #[command(flatten)]
        curve: CurveArgs,
        /// Only evaluate the oracle for k <= KMAX.
        #[arg(long)]
        kmax: Option<usize>,
        #[arg(long)]
        json: bool,
    },

    /// Tabulate splitting types of every monomial curve of degree d in P^s.
    Enumerate {
        #[arg(long)]
        degree: usize,
        #[arg(long = "s")]
        s: usize,
        #[arg(long, env = "NORMBUNDLE_JOBS")]
        jobs: Option<usize>,
        /// Write JSON lines here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Decide whether a splitting type occurs for some monomial curve.
    Achievable {
        #[arg(long)]
        degree: usize,
        #[arg(long = "s")]
        s: usize,
        /// Candidate type as a comma-separated list.
        #[arg(long = "type", value_parser = parse_list)]
        candidate: IntList,
        #[arg(long, env = "NORMBUNDLE_JOBS")]
        jobs: Option<usize>,
    },
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    #[arg(long)]
    pub degree: usize,

    /// Exponents i of the monomials x^(d-i) y^i spanning the center.
    #[arg(
        long,
        value_parser = parse_exponents,
        conflicts_with = "curve",
        required_unless_present = "curve"
    )]
    pub center: Option<IntList>,

    /// Exponents of the monomials parametrizing the curve.
    #[arg(long, value_parser = parse_exponents)]
    pub curve: Option<IntList>,
}

/// A parsed comma-separated list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntList(pub Vec<usize>);

/// Comma-separated non-negative integers, in any order.
pub fn parse_list(raw: &str) -> Result<IntList, String> {
    raw.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| format!("'{s}' is not a non-negative integer"))
        })
        .collect::<Result<_, _>>()
        .map(IntList)
}

/// Like [`parse_list`], but repeated exponents are an error.
pub fn parse_exponents(raw: &str) -> Result<IntList, String> {
    let list = parse_list(raw)?;
    let mut seen = BTreeSet::new();
    for &i in &list.0 {
        if !seen.insert(i) {
            return Err(format!("exponent {i} is listed twice"));
        }
    }
    Ok(list)
}
