//! Structural parameters and the modulators the solvers consume.

mod clique;
mod p4;

pub use clique::{clique_modulator_2approx, leaves_clique};
pub use p4::{cograph_modulator, find_induced_p4, is_cograph};

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::require_connected;
use crate::traverse::{girth, is_connected};

/// A deletion set witnessing distance to some graph class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Modulator {
    /// Edges whose removal leaves a spanning tree.
    FeedbackEdges(Vec<(usize, usize)>),
    /// Vertices whose removal leaves a P4-free graph.
    Cograph(Vec<usize>),
    /// Vertices whose removal leaves a complete graph.
    Clique(Vec<usize>),
}

impl Modulator {
    pub fn size(&self) -> usize {
        match self {
            Modulator::FeedbackEdges(e) => e.len(),
            Modulator::Cograph(k) | Modulator::Clique(k) => k.len(),
        }
    }

    pub fn is_valid_for(&self, g: &Graph) -> bool {
        match self {
            Modulator::FeedbackEdges(edges) => {
                let rest = g.without_edges(edges);
                rest.m() + edges.len() == g.m()
                    && is_connected(&rest)
                    && girth(&rest).is_none()
            }
            Modulator::Cograph(k) => is_cograph(&g.without_vertices(k).0),
            Modulator::Clique(k) => leaves_clique(g, k),
        }
    }
}

/// Membership mask of a user-supplied vertex set; rejects out-of-range and
/// repeated ids.
pub(crate) fn modulator_mask(g: &Graph, ids: &[usize]) -> Result<Vec<bool>> {
    let mut mask = vec![false; g.n()];
    for &v in ids {
        if v >= g.n() {
            return Err(Error::InvalidModulator(format!(
                "vertex {v} out of range for a graph with {} vertices",
                g.n()
            )));
        }
        if std::mem::replace(&mut mask[v], true) {
            return Err(Error::InvalidModulator(format!("vertex {v} listed twice")));
        }
    }
    Ok(mask)
}

/// Edges outside a BFS spanning tree rooted at vertex 0; exactly
/// `m - n + 1` of them on a connected graph.
pub fn feedback_edge_set(g: &Graph) -> Result<Vec<(usize, usize)>> {
    require_connected(g)?;
    let mut parent = vec![usize::MAX; g.n()];
    let mut seen = vec![false; g.n()];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    Ok(g.edges()
        .filter(|&(u, v)| parent[u] != v && parent[v] != u)
        .collect())
}

/// Largest `l` such that at least `l` vertices have degree at least `l`.
pub fn h_index(g: &Graph) -> usize {
    let n = g.n();
    // count[d] = vertices of degree exactly d, capped at n
    let mut count = vec![0usize; n + 1];
    for v in g.vertices() {
        count[g.degree(v).min(n)] += 1;
    }
    let mut at_least = 0;
    for l in (0..=n).rev() {
        at_least += count[l];
        if at_least >= l {
            return l;
        }
    }
    0
}

/// The `h_index(g)` vertices of largest degree, ties broken by smaller id.
/// Every vertex left out has degree at most `h_index(g)`.
pub fn hub_set(g: &Graph) -> Vec<usize> {
    let h = h_index(g);
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order.truncate(h);
    order.sort_unstable();
    order
}

/// Average degree as the exact fraction `2m / n`, unreduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AverageDegree {
    pub numerator: usize,
    pub denominator: usize,
}

impl AverageDegree {
    pub fn as_f64(&self) -> f64 {
        if self.denominator == 0 {
            0.0
        } else {
            self.numerator as f64 / self.denominator as f64
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeStats {
    pub max: usize,
    pub min: usize,
    pub average: AverageDegree,
}

pub fn degree_stats(g: &Graph) -> DegreeStats {
    let degrees = g.degrees();
    DegreeStats {
        max: degrees.iter().copied().max().unwrap_or(0),
        min: degrees.iter().copied().min().unwrap_or(0),
        average: AverageDegree {
            numerator: 2 * g.m(),
            denominator: g.n(),
        },
    }
}

/// Machine-readable parameter summary.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParamReport {
    pub n: usize,
    pub m: usize,
    /// `m - n + 1`; absent for disconnected graphs.
    pub feedback_edge_number: Option<usize>,
    pub cograph_modulator_size: usize,
    pub clique_modulator_size: usize,
    pub h_index: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub average_degree: f64,
}

pub fn param_report(g: &Graph) -> ParamReport {
    let stats = degree_stats(g);
    ParamReport {
        n: g.n(),
        m: g.m(),
        feedback_edge_number: feedback_edge_set(g).ok().map(|f| f.len()),
        cograph_modulator_size: cograph_modulator(g).len(),
        clique_modulator_size: clique_modulator_2approx(g).len(),
        h_index: h_index(g),
        max_degree: stats.max,
        min_degree: stats.min,
        average_degree: stats.average.as_f64(),
    }
}
