//! `regmatch`: matching number, independence number and the equality
//! characterization for regular graphs, over graph6 input.

mod commands;
mod records;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "regmatch", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Independence number and one maximum independent set per graph.
    Alpha(IoArgs),
    /// Matching number and one maximum matching per graph.
    Mu(IoArgs),
    /// Gallai-Edmonds partition (D, A, C) and the components of G[D].
    Decompose(IoArgs),
    /// Structural and direct equality verdicts for connected regular graphs.
    Check(IoArgs),
    /// Generate or ingest graphs and audit every property on each.
    Verify(VerifyArgs),
    /// Write generated regular graphs as graph6 lines.
    Gen(GenArgs),
}

#[derive(Args)]
pub struct IoArgs {
    /// graph6 input file (default: stdin).
    #[arg(long = "in", value_name = "FILE")]
    pub input: Option<PathBuf>,
    /// Output file (default: stdout).
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct GenArgs {
    /// Number of vertices.
    #[arg(long)]
    pub n: Option<usize>,
    /// Degree.
    #[arg(long)]
    pub r: Option<usize>,
    /// Every labeled r-regular graph on n vertices.
    #[arg(long, conflicts_with = "random")]
    pub exhaustive: bool,
    /// Seeded pairing-model samples.
    #[arg(long)]
    pub random: bool,
    /// Number of random samples.
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Keep one graph per isomorphism class (exhaustive mode).
    #[arg(long)]
    pub dedup: bool,
    /// Output file (default: stdout).
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub gen: GenArgs,
    /// Audit graphs from a graph6 file instead of generating them.
    #[arg(long = "in", value_name = "FILE", conflicts_with_all = ["n", "r", "exhaustive", "random", "dedup"])]
    pub input: Option<PathBuf>,
    /// Write a record for every graph, not only for failures.
    #[arg(long)]
    pub all_records: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let args: Vec<String> = std::env::args().skip(1).collect();
    let status = match cli.command {
        Command::Alpha(io) => commands::alpha(&io),
        Command::Mu(io) => commands::mu(&io),
        Command::Decompose(io) => commands::decompose(&io),
        Command::Check(io) => commands::check(&io),
        Command::Verify(v) => commands::verify(&v, &args),
        Command::Gen(g) => commands::gen(&g),
    };
    match status {
        Ok(code) => ExitCode::from(code),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("regmatch: {e}");
            ExitCode::from(2)
        }
    }
}
