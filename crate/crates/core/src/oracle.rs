//! Brute-force diameters: one BFS per vertex. Every solver is checked
//! against these.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fes::WeightedDiameterInstance;
use crate::graph::Graph;
use crate::traverse::{bfs, is_connected};

pub(crate) fn require_connected(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Largest eccentricity over all vertices.
pub fn naive_diameter(g: &Graph) -> Result<u64> {
    require_connected(g)?;
    let diameter = g
        .vertices()
        .into_par_iter()
        .map(|v| bfs(g, v).eccentricity().expect("connected") as u64)
        .max()
        .unwrap_or(0);
    Ok(diameter)
}

/// `max{s, max over v != w of pen(v) + dist(v, w) + pen(w)}`.
///
/// Pairs are unordered and distinct, so a single vertex contributes
/// nothing and the answer for `n = 1` is `s`.
pub fn weighted_diameter(g: &Graph, pen: &[u64], s: u64) -> Result<u64> {
    require_connected(g)?;
    if pen.len() != g.n() {
        return Err(Error::ContractViolation(format!(
            "{} weights for {} vertices",
            pen.len(),
            g.n()
        )));
    }
    let best = g
        .vertices()
        .into_par_iter()
        .map(|v| {
            let row = bfs(g, v);
            g.vertices()
                .filter(|&w| w != v)
                .map(|w| pen[v] + row.dist[w] as u64 + pen[w])
                .max()
                .unwrap_or(0)
        })
        .max()
        .unwrap_or(0);
    Ok(best.max(s))
}

/// [`weighted_diameter`] of the instance's current (partially reduced)
/// graph.
pub fn weighted_diameter_oracle(inst: &WeightedDiameterInstance) -> Result<u64> {
    let (g, ids) = inst.current_graph();
    let pen: Vec<u64> = ids.iter().map(|&v| inst.pen(v)).collect();
    weighted_diameter(&g, &pen, inst.s())
}
