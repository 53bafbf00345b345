//! `rank1`: generate index sets, search and verify rank-1 lattices, and
//! benchmark the search algorithms.

mod bench;
mod commands;
mod error;
mod record;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rank1_lower::cubature::ReconstructionMode;
use rank1_lower::search::Algorithm;
use rank1_lower::Plan;

use crate::bench::BenchConfig;
use crate::commands::{out_path, FamilyParams, SearchOptions};
use crate::error::CliResult;

#[derive(Parser, Debug)]
#[command(
    name = "rank1",
    version,
    about = "Rank-1 lattices for lower index sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write an index set of a standard family.
    GenSet {
        /// block, cross, simplex, simplex-card or hyperbolic.
        family: String,
        #[command(flatten)]
        params: FamilyArgs,
        /// Output file; standard output when absent or `-`.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Find a lattice for a set; prints `n z…` and a CSV row.
    Search {
        set: PathBuf,
        #[arg(long, default_value = "A")]
        plan: Plan,
        #[arg(long, default_value = "two-step")]
        algo: Algorithm,
        /// Restrict the two-step modulus scan to odd `n`.
        #[arg(long)]
        odd_only: bool,
        #[arg(long)]
        n_min: Option<u64>,
        #[arg(long)]
        n_max: Option<u64>,
        /// Also write the lattice file here.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Exit 0 iff the lattice is admissible for the set.
    Verify {
        set: PathBuf,
        lattice: PathBuf,
        #[arg(long, default_value = "A")]
        plan: Plan,
        /// Print the first colliding pair.
        #[arg(short, long)]
        verbose: bool,
    },
    /// Print the lower bound l*, the prime bound p* and optionally n*.
    Bounds {
        set: PathBuf,
        #[arg(long, default_value = "A")]
        plan: Plan,
        /// Also run the exhaustive search.
        #[arg(long)]
        oracle: bool,
    },
    /// Reconstruct a random Chebyshev series and report the coefficient error.
    ReconstructDemo {
        set: PathBuf,
        lattice: PathBuf,
        #[arg(long, default_value = "a")]
        mode: ReconstructionMode,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run searches over a family of sets and write CSV.
    Bench {
        /// TOML file with the same keys as the flags.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        w: Option<String>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<u32>,
        #[arg(long, value_delimiter = ',')]
        plans: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        algos: Vec<String>,
        #[arg(long)]
        odd_only: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct FamilyArgs {
    /// Comma-separated extents (block, cross) or the simplex radius.
    #[arg(long, value_delimiter = ',')]
    k: Vec<u32>,
    #[arg(long)]
    d: Option<usize>,
    /// Cardinality (simplex-card) or hyperbolic bound.
    #[arg(long)]
    n: Option<u32>,
    /// Comma-separated weights.
    #[arg(long)]
    w: Option<String>,
    /// Weighted simplex radius.
    #[arg(long)]
    u: Option<String>,
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::GenSet {
            family,
            params,
            out,
        } => {
            let p = FamilyParams {
                k: params.k,
                d: params.d,
                n: params.n,
                w: params.w,
                u: params.u,
            };
            commands::gen_set(&family, &p, out_path(&out))
        }
        Command::Search {
            set,
            plan,
            algo,
            odd_only,
            n_min,
            n_max,
            out,
        } => {
            let opts = SearchOptions {
                plan,
                algo,
                odd_only,
                n_min,
                n_max,
            };
            commands::search(&set, &opts, out_path(&out))
        }
        Command::Verify {
            set,
            lattice,
            plan,
            verbose,
        } => commands::verify(&set, &lattice, plan, verbose),
        Command::Bounds { set, plan, oracle } => commands::bounds(&set, plan, oracle),
        Command::ReconstructDemo {
            set,
            lattice,
            mode,
            seed,
        } => commands::reconstruct_demo(&set, &lattice, mode, seed),
        Command::Bench {
            config,
            family,
            w,
            d,
            sizes,
            plans,
            algos,
            odd_only,
            out,
        } => {
            let flags = BenchConfig {
                family,
                w,
                d,
                sizes,
                plans,
                algos,
                odd_only,
            };
            bench::bench(config.as_deref(), flags, out_path(&out))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("rank1: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
