//! Diameter via the hub set of the h-index.
//!
//! Every non-hub vertex is typed by its exact distances to the `h` hubs.
//! A candidate diameter `e` is raised one step at a time: for each vertex
//! and each type that the hubs cannot certify to lie within `e`, one BFS in
//! `G - H` truncated at depth `e` counts how many vertices of that type are
//! reached. Fewer than the total means some vertex is farther than `e`.

use std::collections::{HashMap, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::graph::Graph;
use crate::oracle::require_connected;
use crate::params::{hub_set, modulator_mask};
use crate::traverse::{bfs_rows, UNREACHABLE};

/// Exact distances from one vertex to each hub.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HubTypeVector(pub Vec<u32>);

impl HubTypeVector {
    /// Upper bound on the distance between a vertex of type `self` and one
    /// of type `other`, routing through the best hub. `None` without hubs.
    pub fn via_hubs(&self, other: &HubTypeVector) -> Option<u64> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a as u64 + b as u64)
            .min()
    }
}

/// Per-type counts of the vertices of `g_minus_h` within `depth` of `v`.
/// `type_of[u]` is the type index of `u` in `0..num_types`.
pub fn truncated_bfs_count(
    g_minus_h: &Graph,
    v: usize,
    depth: u32,
    type_of: &[usize],
    num_types: usize,
) -> Vec<usize> {
    let mut counts = vec![0; num_types];
    let mut dist = vec![UNREACHABLE; g_minus_h.n()];
    let mut queue = VecDeque::from([v]);
    dist[v] = 0;
    while let Some(u) = queue.pop_front() {
        counts[type_of[u]] += 1;
        if dist[u] == depth {
            continue;
        }
        for &w in g_minus_h.neighbors(u) {
            if dist[w] == UNREACHABLE {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    counts
}

/// One pass over all vertices at a fixed candidate `e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HdIteration {
    pub e: u64,
    /// Truncated BFS runs needed up to the first shortfall (or the whole pass).
    pub probes: usize,
    /// First vertex (ascending id) whose probe fell short, with the type index.
    pub shortfall: Option<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HdOutcome {
    pub diameter: u64,
    pub hubs: Vec<usize>,
    pub num_types: usize,
    pub iterations: Vec<HdIteration>,
}

pub fn solve_hd(g: &Graph, hubs: Option<&[usize]>) -> Result<u64> {
    Ok(solve_hd_traced(g, hubs)?.diameter)
}

/// Like [`solve_hd`], also reporting every pass of the scan.
pub fn solve_hd_traced(g: &Graph, hubs: Option<&[usize]>) -> Result<HdOutcome> {
    require_connected(g)?;
    let hubs: Vec<usize> = match hubs {
        Some(h) => h.to_vec(),
        None => hub_set(g),
    };
    let is_hub = modulator_mask(g, &hubs)?;
    let rows = bfs_rows(g, &hubs);
    let keep: Vec<bool> = is_hub.iter().map(|&x| !x).collect();
    let (rest, ids) = g.induced_subgraph(&keep);

    // types of the non-hub vertices, indexed by their id in `rest`
    let mut index: HashMap<HubTypeVector, usize> = HashMap::new();
    let mut vectors: Vec<HubTypeVector> = Vec::new();
    let mut totals: Vec<usize> = Vec::new();
    let type_of: Vec<usize> = ids
        .iter()
        .map(|&v| {
            let vec = HubTypeVector(rows.iter().map(|r| r.dist[v]).collect());
            let t = *index.entry(vec.clone()).or_insert_with(|| {
                vectors.push(vec);
                totals.push(0);
                vectors.len() - 1
            });
            totals[t] += 1;
            t
        })
        .collect();
    let vertex_vector: Vec<&HubTypeVector> = type_of.iter().map(|&t| &vectors[t]).collect();

    let needs_probe = |u: usize, e: u64| -> bool {
        vectors
            .iter()
            .any(|t| vertex_vector[u].via_hubs(t).is_none_or(|b| b > e))
    };

    let mut e = rows.iter().map(|r| r.max_finite() as u64).max().unwrap_or(0);
    let mut iterations = Vec::new();
    loop {
        let shortfall = (0..rest.n()).into_par_iter().find_map_first(|u| {
            let open: Vec<usize> = (0..vectors.len())
                .filter(|&t| vertex_vector[u].via_hubs(&vectors[t]).is_none_or(|b| b > e))
                .collect();
            if open.is_empty() {
                return None;
            }
            let depth = e.min(u32::MAX as u64 - 1) as u32;
            let counts = truncated_bfs_count(&rest, u, depth, &type_of, vectors.len());
            open.into_iter().find(|&t| counts[t] < totals[t]).map(|t| (u, t))
        });
        let scanned = shortfall.map_or(rest.n(), |(u, _)| u + 1);
        iterations.push(HdIteration {
            e,
            probes: (0..scanned).filter(|&u| needs_probe(u, e)).count(),
            shortfall: shortfall.map(|(u, t)| (ids[u], t)),
        });
        if shortfall.is_none() {
            break;
        }
        e += 1;
    }
    Ok(HdOutcome {
        diameter: e,
        hubs,
        num_types: vectors.len(),
        iterations,
    })
}
