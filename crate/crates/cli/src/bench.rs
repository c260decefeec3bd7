use std::fs::File;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{ensure, Context, Result};
use clap::{Args, ValueEnum};
use paramdiam::constructions::{gen_connected_er, gen_random_cograph_plus, gen_tree_plus_k};
use paramdiam::Graph;
use serde::Serialize;

use crate::solve::{dispatch, Parameters};
use crate::Algo;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    TreePlusK,
    CographPlus,
    Er,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Comma-separated vertex counts.
    #[arg(long, value_delimiter = ',', required = true)]
    pub sizes: Vec<usize>,
    /// Runs per configuration; the fastest is reported.
    #[arg(long, default_value_t = 3)]
    pub repeats: usize,
    /// Extra edges (tree-plus-k), extra vertices (cograph-plus) or average
    /// degree (er).
    #[arg(long, default_value_t = 4.0)]
    pub param: f64,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "naive")]
    pub algos: Vec<Algo>,
    #[arg(long)]
    pub seed: u64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Serialize)]
struct Row {
    n: usize,
    m: usize,
    param: f64,
    algo: &'static str,
    ms: f64,
}

fn instance(family: Family, n: usize, param: f64, seed: u64) -> Result<Graph> {
    Ok(match family {
        Family::TreePlusK => gen_tree_plus_k(n, param as usize, seed)?,
        Family::CographPlus => gen_random_cograph_plus(n, param as usize, seed)?,
        Family::Er => {
            let p = if n > 1 { (param / (n - 1) as f64).min(1.0) } else { 0.0 };
            gen_connected_er(n, p, seed)?
        }
    })
}

pub fn run(args: BenchArgs) -> Result<()> {
    ensure!(args.repeats >= 1, "--repeats must be at least 1");
    ensure!(!args.algos.contains(&Algo::Auto), "bench needs concrete --algos");
    let file = File::create(&args.out).with_context(|| format!("creating {}", args.out.display()))?;
    let mut csv = csv::Writer::from_writer(file);
    for (i, &n) in args.sizes.iter().enumerate() {
        let g = instance(args.family, n, args.param, args.seed.wrapping_add(i as u64))?;
        for &algo in &args.algos {
            let mut best = f64::INFINITY;
            for _ in 0..args.repeats {
                let start = Instant::now();
                dispatch(&g, algo, None, false, &mut Parameters::default())?;
                best = best.min(start.elapsed().as_secs_f64() * 1e3);
            }
            csv.serialize(Row {
                n: g.n(),
                m: g.m(),
                param: args.param,
                algo: algo.name(),
                ms: best,
            })?;
        }
    }
    csv.flush()?;
    Ok(())
}
