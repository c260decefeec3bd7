//! Diameter in `O(k * n)` time for feedback edge number `k`.
//!
//! Pending trees and pending cycles are folded into vertex weights by the
//! reduction rules. What remains has `O(k)` branching vertices joined by
//! degree-two paths; longest weighted distances are then found from a BFS
//! per branching vertex, a sweep along each path, and a sweep per pair of
//! paths.

mod decompose;
mod instance;
pub mod sweep;

pub use decompose::{decompose, PathCycleDecomposition};
pub use instance::{PendingCycle, ReductionStats, RuleEvent, WeightedDiameterInstance};

use rayon::prelude::*;

use crate::error::Result;
use crate::graph::Graph;
use crate::oracle::require_connected;
use crate::traverse::{bfs_rows, DistanceRow};
use sweep::{path_pair_sweep, same_path_sweep, EndpointDistances, PathProfile};

/// BFS rows of the branching vertices, indexed by vertex.
#[derive(Debug, Clone)]
pub struct HighDistanceTable {
    slot: Vec<Option<usize>>,
    rows: Vec<DistanceRow>,
}

impl HighDistanceTable {
    pub fn new(g: &Graph, high: &[usize]) -> Self {
        let mut slot = vec![None; g.n()];
        for (i, &v) in high.iter().enumerate() {
            slot[v] = Some(i);
        }
        Self {
            slot,
            rows: bfs_rows(g, high),
        }
    }

    pub fn row(&self, high: usize) -> &DistanceRow {
        &self.rows[self.slot[high].expect("vertex is branching")]
    }

    /// Distance from branching vertex `high` to any vertex.
    pub fn dist(&self, high: usize, v: usize) -> u64 {
        self.row(high).dist[v] as u64
    }

    pub fn rows(&self) -> &[DistanceRow] {
        &self.rows
    }
}

/// Case 1: every pair with at least one branching endpoint. Returns the best
/// weighted distance found and the table reused by the path cases.
pub fn case1_high_bfs(g: &Graph, pen: &[u64], dec: &PathCycleDecomposition) -> (u64, HighDistanceTable) {
    let table = HighDistanceTable::new(g, &dec.high);
    let best = table
        .rows()
        .par_iter()
        .map(|row| {
            let v = row.source;
            g.vertices()
                .filter(|&u| u != v)
                .map(|u| pen[v] + row.dist[u] as u64 + pen[u])
                .max()
                .unwrap_or(0)
        })
        .max()
        .unwrap_or(0);
    (best, table)
}

fn interior_pen(pen: &[u64], path: &[usize]) -> Vec<u64> {
    path[1..path.len() - 1].iter().map(|&x| pen[x]).collect()
}

/// Case 2: both endpoints inside the same maximal path `x0 .. xa`.
pub fn case2_same_path(pen: &[u64], path: &[usize], endpoint_distance: u64) -> Option<u64> {
    same_path_sweep(&interior_pen(pen, path), endpoint_distance)
}

/// Case 3: endpoints inside two different maximal paths.
pub fn case3_path_pair(
    pen: &[u64],
    first: &[usize],
    second: &[usize],
    ends: EndpointDistances,
) -> Option<u64> {
    let profile = PathProfile::new(&interior_pen(pen, first));
    path_pair_sweep(&profile, &interior_pen(pen, second), ends)
}

fn endpoint_distances(table: &HighDistanceTable, first: &[usize], second: &[usize]) -> EndpointDistances {
    let (x0, xa) = (first[0], *first.last().unwrap());
    let (y0, yb) = (second[0], *second.last().unwrap());
    EndpointDistances {
        x0_y0: table.dist(x0, y0),
        x0_yb: table.dist(x0, yb),
        xa_y0: table.dist(xa, y0),
        xa_yb: table.dist(xa, yb),
    }
}

/// Counters describing one run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FesStats {
    pub feedback_edge_number: usize,
    pub reduction: ReductionStats,
    pub remaining_vertices: usize,
    pub high_vertices: usize,
    pub maximal_paths: usize,
    pub bfs_runs: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FesOutcome {
    pub diameter: u64,
    pub stats: FesStats,
    pub trace: Vec<RuleEvent>,
}

pub fn solve_fes(g: &Graph) -> Result<u64> {
    Ok(run(g, false)?.diameter)
}

/// Like [`solve_fes`] but also returns counters and every rule application.
pub fn solve_fes_traced(g: &Graph) -> Result<FesOutcome> {
    run(g, true)
}

fn run(g: &Graph, keep_trace: bool) -> Result<FesOutcome> {
    require_connected(g)?;
    let mut stats = FesStats {
        feedback_edge_number: g.m() + 1 - g.n(),
        ..Default::default()
    };
    let mut trace = Vec::new();
    let mut inst = WeightedDiameterInstance::new(g);
    stats.reduction = inst.reduce_exhaustively(keep_trace.then_some(&mut trace));

    let (reduced, ids) = inst.current_graph();
    stats.remaining_vertices = reduced.n();
    if reduced.n() == 1 {
        return Ok(FesOutcome {
            diameter: inst.s(),
            stats,
            trace,
        });
    }
    let pen: Vec<u64> = ids.iter().map(|&v| inst.pen(v)).collect();
    let dec = decompose(&reduced)?;
    debug_assert!(dec.cycles.is_empty(), "reduced graph has no pending cycles");
    stats.high_vertices = dec.high.len();
    stats.maximal_paths = dec.paths.len();
    stats.bfs_runs = dec.high.len();

    let (case1, table) = case1_high_bfs(&reduced, &pen, &dec);
    let mut best = inst.s().max(case1);

    let inner: Vec<&Vec<usize>> = dec.paths.iter().filter(|p| p.len() > 2).collect();
    for path in &inner {
        let d = table.dist(path[0], *path.last().unwrap());
        if let Some(v) = case2_same_path(&pen, path, d) {
            best = best.max(v);
        }
    }

    let profiles: Vec<(PathProfile, Vec<u64>)> = inner
        .iter()
        .map(|p| {
            let ip = interior_pen(&pen, p);
            (PathProfile::new(&ip), ip)
        })
        .collect();
    let case3 = (0..inner.len())
        .into_par_iter()
        .filter_map(|i| {
            (i + 1..inner.len())
                .filter_map(|j| {
                    let ends = endpoint_distances(&table, inner[i], inner[j]);
                    path_pair_sweep(&profiles[i].0, &profiles[j].1, ends)
                })
                .max()
        })
        .max();
    if let Some(v) = case3 {
        best = best.max(v);
    }

    Ok(FesOutcome {
        diameter: best,
        stats,
        trace,
    })
}
