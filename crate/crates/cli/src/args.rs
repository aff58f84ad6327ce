use clap::{Args, Parser, Subcommand, ValueEnum};

use nearcentral::genchar::Method;
use nearcentral::starcount::ClosedCase;
use nearcentral::{MarkedPartition, Partition};

/// Exact computation in the centralizer Z1(n) of the symmetric group algebra.
///
/// Every command prints a single JSON document on stdout (character tables and
/// tableaux can optionally be printed as CSV / plain text). Diagnostics go to
/// stderr.
#[derive(Debug, Parser)]
#[command(name = "nearcentral", version)]
pub struct Cli {
    #[command(flatten)]
    pub guard: GuardArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GuardArgs {
    /// Largest n for which S_n is enumerated (overrides NEARCENTRAL_MAX_N).
    #[arg(long, global = true, value_name = "N")]
    pub guard_n: Option<usize>,

    /// Largest number of factor sequences enumerated literally.
    #[arg(long, global = true, value_name = "COUNT")]
    pub guard_sequences: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the partitions (or marked partitions) of n with class sizes.
    Partitions {
        #[arg(long)]
        n: usize,
        /// List marked partitions λ@i instead.
        #[arg(long)]
        marked: bool,
    },
    /// List the standard Young tableaux of a shape.
    Tableaux {
        #[arg(long, value_parser = parse_partition)]
        shape: Partition,
        /// Only tableaux with n at the end of a row of length i.
        #[arg(long)]
        mark: Option<usize>,
        #[arg(long, value_enum, default_value_t = TableauFormat::Json)]
        format: TableauFormat,
    },
    /// Print the character table of S_n.
    Chartable {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Json)]
        format: TableFormat,
    },
    /// Evaluate a generalized character γ^{μ,j}_{λ,i}.
    Genchar {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long)]
        j: usize,
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long)]
        i: usize,
        /// Closed form, character sum or group-algebra extraction; by default
        /// the closed form is used when one exists.
        #[arg(long, value_parser = parse_method)]
        method: Option<Method>,
    },
    /// Structure constant [K_target] K_a K_b of Z1(n).
    Connection {
        #[arg(long, value_parser = parse_marked)]
        a: MarkedPartition,
        #[arg(long, value_parser = parse_marked)]
        b: MarkedPartition,
        #[arg(long, value_parser = parse_marked)]
        target: MarkedPartition,
        #[arg(long, value_enum, default_value_t = ConnectionMethod::Characters)]
        method: ConnectionMethod,
    },
    /// Count factorizations into star transpositions (j, n).
    Starfact {
        #[command(subcommand)]
        command: Starfact,
    },
    /// Brute-force cross-checks.
    Oracle {
        #[command(subcommand)]
        command: Oracle,
    },
}

#[derive(Debug, Subcommand)]
pub enum Starfact {
    /// Factorizations of one permutation of marked type λ@i.
    Count {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        r: u32,
        #[arg(long, value_enum, default_value_t = CountMethod::Characters)]
        method: CountMethod,
    },
    /// Summed over every permutation of cycle type λ.
    Class {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long)]
        r: u32,
    },
    /// Summed over every permutation of S_n with k cycles.
    Cycles {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: u32,
    },
    /// Hyperbolic-series closed form for one of three marked classes.
    Closed {
        #[arg(long = "case", value_parser = parse_case)]
        case: ClosedCase,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum Oracle {
    /// Run the invariant suite for every n up to --max-n.
    Verify {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableauFormat {
    Json,
    /// One row per line, tableaux separated by blank lines.
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConnectionMethod {
    /// Sum over generalized characters.
    Characters,
    /// Literal product in the group algebra.
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CountMethod {
    /// Eigenvalue expansion over generalized characters.
    Characters,
    /// Literal enumeration of factor sequences.
    Enumerate,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: nearcentral::Error| e.to_string())
}

fn parse_marked(s: &str) -> Result<MarkedPartition, String> {
    s.parse().map_err(|e: nearcentral::Error| e.to_string())
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse().map_err(|_| format!("expected one of table, strahov, oracle; got {s:?}"))
}

fn parse_case(s: &str) -> Result<ClosedCase, String> {
    s.parse().map_err(|_| {
        let names: Vec<String> = ClosedCase::ALL.iter().map(|c| c.to_string()).collect();
        format!("expected one of {}; got {s:?}", names.join(", "))
    })
}
