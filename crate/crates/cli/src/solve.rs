use std::path::PathBuf;
use std::time::Instant;

use anyhow::{bail, Result};
use clap::Args;
use paramdiam::cograph::solve_cograph;
use paramdiam::deletion::{solve_clique_modulator, solve_deletion};
use paramdiam::fes::solve_fes_traced;
use paramdiam::hindex::solve_hd_traced;
use paramdiam::oracle::naive_diameter;
use paramdiam::params::{clique_modulator_2approx, cograph_modulator, h_index};
use paramdiam::Graph;
use serde::Serialize;

use crate::{read_graph, read_vertex_set, Algo, VerifyMismatch};

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Edge-list file.
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = Algo::Auto)]
    pub algo: Algo,
    /// Vertex-list file: the deletion set for cograph/clique/deletion, or
    /// the hub set for hindex-diam.
    #[arg(long)]
    pub modulator: Option<PathBuf>,
    /// Recompute with the BFS oracle and compare.
    #[arg(long)]
    pub verify: bool,
    /// Emit solver steps as JSON lines on stderr (fes and hindex-diam).
    #[arg(long)]
    pub trace: bool,
    /// Auto mode: largest cograph modulator worth using.
    #[arg(long, default_value_t = 8)]
    pub cograph_threshold: usize,
    /// Auto mode: largest h-index worth using.
    #[arg(long, default_value_t = 6)]
    pub hindex_threshold: usize,
}

#[derive(Debug, Default, Serialize)]
pub struct Parameters {
    pub n: usize,
    pub m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub feedback_edge_number: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modulator_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h_index: Option<usize>,
}

#[derive(Debug, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Match,
    Mismatch { expected: u64, got: u64 },
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub input: String,
    pub algorithm: &'static str,
    pub diameter: u64,
    pub parameters: Parameters,
    pub ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verify: Option<Verdict>,
}

pub struct Thresholds {
    pub cograph: usize,
    pub hindex: usize,
}

/// Picks the solver whose parameter is smallest: the feedback edge number
/// if no other parameter beats it, then a small cograph modulator, then a
/// small h-index, else the plain BFS sweep.
fn choose(g: &Graph, limits: &Thresholds, params: &mut Parameters) -> (Algo, Option<Vec<usize>>) {
    let fen = g.m() + 1 - g.n();
    let cograph_k = cograph_modulator(g);
    let h = h_index(g);
    params.feedback_edge_number = Some(fen);
    params.modulator_size = Some(cograph_k.len());
    params.h_index = Some(h);
    if fen <= cograph_k.len() && fen <= h {
        (Algo::Fes, None)
    } else if cograph_k.len() <= limits.cograph {
        (Algo::Cograph, Some(cograph_k))
    } else if h <= limits.hindex {
        (Algo::HindexDiam, None)
    } else {
        (Algo::Naive, None)
    }
}

fn emit_trace<T: Serialize>(events: &[T]) -> Result<()> {
    for e in events {
        eprintln!("{}", serde_json::to_string(e)?);
    }
    Ok(())
}

/// Runs one solver; fills in the parameters it used.
pub fn dispatch(
    g: &Graph,
    algo: Algo,
    modulator: Option<&[usize]>,
    trace: bool,
    params: &mut Parameters,
) -> Result<u64> {
    if modulator.is_some() && matches!(algo, Algo::Naive | Algo::Fes | Algo::Auto) {
        bail!("--modulator is not used by --algo {}", algo.name());
    }
    let diameter = match algo {
        Algo::Auto => unreachable!("resolved before dispatch"),
        Algo::Naive => naive_diameter(g)?,
        Algo::Fes => {
            let out = solve_fes_traced(g)?;
            params.feedback_edge_number = Some(out.stats.feedback_edge_number);
            if trace {
                emit_trace(&out.trace)?;
            }
            out.diameter
        }
        Algo::Cograph => {
            let k = modulator.map_or_else(|| cograph_modulator(g), <[usize]>::to_vec);
            params.modulator_size = Some(k.len());
            solve_cograph(g, Some(&k))?
        }
        Algo::HindexDiam => {
            let out = solve_hd_traced(g, modulator)?;
            params.h_index = Some(out.hubs.len());
            if trace {
                emit_trace(&out.iterations)?;
            }
            out.diameter
        }
        Algo::Clique | Algo::Deletion => {
            let k = modulator.map_or_else(|| clique_modulator_2approx(g), <[usize]>::to_vec);
            params.modulator_size = Some(k.len());
            if algo == Algo::Clique {
                solve_clique_modulator(g, Some(&k))?
            } else {
                solve_deletion(g, Some(&k))?
            }
        }
    };
    Ok(diameter)
}

pub fn run(args: SolveArgs) -> Result<()> {
    let g = read_graph(&args.input)?;
    let modulator = args.modulator.as_deref().map(read_vertex_set).transpose()?;
    let mut params = Parameters {
        n: g.n(),
        m: g.m(),
        ..Default::default()
    };
    let limits = Thresholds {
        cograph: args.cograph_threshold,
        hindex: args.hindex_threshold,
    };

    let start = Instant::now();
    let (algo, chosen_k) = match args.algo {
        Algo::Auto => {
            if modulator.is_some() {
                bail!("--modulator needs an explicit --algo");
            }
            if g.n() == 0 {
                return Err(paramdiam::Error::EmptyGraph.into());
            }
            if !paramdiam::traverse::is_connected(&g) {
                return Err(paramdiam::Error::Disconnected.into());
            }
            choose(&g, &limits, &mut params)
        }
        other => (other, None),
    };
    let k = chosen_k.as_deref().or(modulator.as_deref());
    let diameter = dispatch(&g, algo, k, args.trace, &mut params)?;
    let ms = start.elapsed().as_secs_f64() * 1e3;

    let verify = if args.verify {
        let expected = naive_diameter(&g)?;
        Some(if expected == diameter {
            Verdict::Match
        } else {
            Verdict::Mismatch {
                expected,
                got: diameter,
            }
        })
    } else {
        None
    };
    let mismatch = match verify {
        Some(Verdict::Mismatch { expected, got }) => Some(VerifyMismatch { expected, got }),
        _ => None,
    };
    let report = RunReport {
        input: args.input.display().to_string(),
        algorithm: algo.name(),
        diameter,
        parameters: params,
        ms,
        verify,
    };
    println!("{}", serde_json::to_string(&report)?);
    match mismatch {
        Some(m) => Err(m.into()),
        None => Ok(()),
    }
}
