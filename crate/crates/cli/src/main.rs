use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use paramdiam::io::{parse_edge_list, parse_vertex_list};
use paramdiam::params::param_report;
use paramdiam::Graph;

mod bench;
mod generate;
mod solve;

/// Exact graph diameter guided by structural parameters.
#[derive(Debug, Parser)]
#[command(name = "paramdiam", version, about)]
struct Cli {
    /// Worker threads for the solvers.
    #[arg(long, global = true, env = "PARAMDIAM_THREADS", default_value_t = 1,
          value_parser = clap::value_parser!(u16).range(1..))]
    threads: u16,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print structural parameters of an edge-list graph as JSON.
    Params {
        input: PathBuf,
    },
    /// Compute the diameter and print a JSON run report.
    Solve(solve::SolveArgs),
    /// Write a generated graph as an edge list plus a `.json` sidecar.
    Generate(generate::GenerateArgs),
    /// Time solvers on a seeded family and write CSV.
    Bench(bench::BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Auto,
    Naive,
    Fes,
    Cograph,
    HindexDiam,
    Clique,
    Deletion,
}

impl Algo {
    pub fn name(self) -> &'static str {
        match self {
            Algo::Auto => "auto",
            Algo::Naive => "naive",
            Algo::Fes => "fes",
            Algo::Cograph => "cograph",
            Algo::HindexDiam => "hindex-diam",
            Algo::Clique => "clique",
            Algo::Deletion => "deletion",
        }
    }
}

/// The verified diameter disagreed with the oracle.
#[derive(Debug)]
pub struct VerifyMismatch {
    pub expected: u64,
    pub got: u64,
}

impl std::fmt::Display for VerifyMismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "verification failed: oracle says {}, solver said {}", self.expected, self.got)
    }
}

impl std::error::Error for VerifyMismatch {}

pub fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn read_vertex_set(path: &Path) -> Result<Vec<usize>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_vertex_list(&text).with_context(|| format!("parsing {}", path.display()))
}

fn exit_code(err: &anyhow::Error) -> u8 {
    use paramdiam::Error as E;
    for cause in err.chain() {
        if cause.downcast_ref::<VerifyMismatch>().is_some() {
            return 5;
        }
        if let Some(e) = cause.downcast_ref::<E>() {
            return match e {
                E::Parse { .. }
                | E::SelfLoop(_)
                | E::DuplicateEdge(..)
                | E::VertexOutOfRange { .. }
                | E::InvalidFormula(_) => 2,
                E::Disconnected | E::EmptyGraph => 3,
                E::InvalidModulator(_) => 4,
                E::ContractViolation(_) | E::InfeasibleParameters(_) => 1,
            };
        }
    }
    1
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Params { input } => {
            let g = read_graph(&input)?;
            println!("{}", serde_json::to_string(&param_report(&g))?);
            Ok(())
        }
        Command::Solve(args) => solve::run(args),
        Command::Generate(args) => generate::run(args),
        Command::Bench(args) => bench::run(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads as usize)
        .build()
        .context("starting thread pool")
        .and_then(|pool| pool.install(|| run(cli.command)));
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
