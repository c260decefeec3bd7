use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use paramdiam::constructions::{
    bipartite_girth_construction, bisection_construction, gen_connected_er,
    gen_random_cograph_plus, gen_tree_plus_k, sat_to_diameter, CnfFormula,
};
use paramdiam::io::write_edge_list;
use paramdiam::Graph;

use crate::read_graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// Bipartite double cover of the input; diameter grows by one.
    BipartiteGirth,
    /// Two copies joined by one bridge; diameter grows by a constant.
    Bisection,
    /// CNF formula to a graph of diameter five iff satisfiable.
    Sat,
    /// Random spanning tree plus `k` extra edges.
    TreePlusK,
    /// Random connected cograph plus `extra` arbitrary vertices.
    CographPlus,
    /// Connected Erdős–Rényi graph.
    Er,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(value_enum)]
    pub kind: Kind,
    /// Input edge list (bipartite-girth, bisection).
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Input DIMACS formula (sat).
    #[arg(long)]
    pub cnf: Option<PathBuf>,
    #[arg(long, default_value_t = 100)]
    pub n: usize,
    #[arg(long, default_value_t = 5)]
    pub k: usize,
    #[arg(long, default_value_t = 3)]
    pub extra: usize,
    #[arg(long, default_value_t = 0.1)]
    pub p: f64,
    /// Required so every output is reproducible.
    #[arg(long)]
    pub seed: u64,
    /// Edge-list output; the sidecar goes to `<out>.json`.
    #[arg(long)]
    pub out: PathBuf,
}

impl Kind {
    fn name(self) -> String {
        self.to_possible_value().map(|v| v.get_name().to_owned()).unwrap_or_default()
    }
}

fn sidecar_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".json");
    PathBuf::from(s)
}

fn required<'a>(path: &'a Option<PathBuf>, flag: &str, kind: Kind) -> Result<&'a Path> {
    match path {
        Some(p) => Ok(p),
        None => bail!("{flag} is required for {}", kind.name()),
    }
}

pub fn run(args: GenerateArgs) -> Result<()> {
    let (graph, sidecar): (Graph, serde_json::Value) = match args.kind {
        Kind::BipartiteGirth | Kind::Bisection => {
            let g = read_graph(required(&args.input, "--input", args.kind)?)?;
            let out = if args.kind == Kind::Bisection {
                bisection_construction(&g)
            } else {
                bipartite_girth_construction(&g)
            };
            let meta = serde_json::to_value(out.sidecar())?;
            (out.graph, meta)
        }
        Kind::Sat => {
            let path = required(&args.cnf, "--cnf", args.kind)?;
            let text =
                fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let phi = CnfFormula::parse_dimacs(&text)
                .with_context(|| format!("parsing {}", path.display()))?;
            let out = sat_to_diameter(&phi)?;
            let meta = serde_json::to_value(out.sidecar())?;
            (out.graph, meta)
        }
        Kind::TreePlusK => random(gen_tree_plus_k(args.n, args.k, args.seed)?, &args),
        Kind::CographPlus => random(gen_random_cograph_plus(args.n, args.extra, args.seed)?, &args),
        Kind::Er => random(gen_connected_er(args.n, args.p, args.seed)?, &args),
    };
    fs::write(&args.out, write_edge_list(&graph))
        .with_context(|| format!("writing {}", args.out.display()))?;
    let side = sidecar_path(&args.out);
    fs::write(&side, serde_json::to_string_pretty(&sidecar)?)
        .with_context(|| format!("writing {}", side.display()))?;
    Ok(())
}

fn random(g: Graph, args: &GenerateArgs) -> (Graph, serde_json::Value) {
    let meta = serde_json::json!({
        "n": g.n(),
        "m": g.m(),
        "family": args.kind.name(),
        "seed": args.seed,
        "k": args.k,
        "extra": args.extra,
        "p": args.p,
    });
    (g, meta)
}
