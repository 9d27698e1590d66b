//! `turanmatch` command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or capacity error.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "turanmatch",
    version,
    about = "Extremal graphs with bounded clique and matching numbers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Construction {
    Turan,
    Gks,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Closed-form maximum edge count as JSON.
    Formula {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        s: usize,
    },
    /// Write T(n,k) or G(n,k,s) in edge-list format.
    Construct {
        #[arg(value_enum)]
        kind: Construction,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        s: Option<usize>,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Invariants of an edge-list graph as JSON.
    Analyze {
        /// Input path, or `-` for stdin.
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Exhaustively check the closed form for every n <= max-n.
    Verify {
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Write the per-cell CSV here (`-` for stdout).
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Write one witness graph per cell into this directory.
        #[arg(long)]
        witness_dir: Option<PathBuf>,
    },
    /// Local search for an extremal graph; CSV per restart on stdout.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        s: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        restarts: usize,
        #[arg(long, default_value_t = turanmatch::symmetrization::DEFAULT_ITERS)]
        iters: usize,
        /// Write the best graph here in edge-list format.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Brute-force H-free maximum against g(n, chi(H)-1, s).
    Hfree {
        /// Fixture name (K3, K4, C5, C6, C7, K4e, PETERSEN, K<n>, C<n>) or edge-list path.
        #[arg(long)]
        h: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Formula { n, k, s } => commands::formula(n, k, s),
        Command::Construct { kind, n, k, s, out } => commands::construct(kind, n, k, s, out),
        Command::Analyze { input } => commands::analyze(&input),
        Command::Verify {
            max_n,
            threads,
            csv,
            witness_dir,
        } => commands::verify(max_n, threads, csv, witness_dir),
        Command::Search {
            n,
            k,
            s,
            seed,
            restarts,
            iters,
            witness,
        } => commands::search(n, k, s, seed, restarts, iters, witness),
        Command::Hfree { h, n, s, threads } => commands::hfree(&h, n, s, threads),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
