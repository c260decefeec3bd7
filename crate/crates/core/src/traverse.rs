//! Breadth-first search and the structural checks built on it.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::graph::Graph;

/// Marker stored in a [`DistanceRow`] for vertices in other components.
pub const UNREACHABLE: u32 = u32::MAX;

/// Unweighted distances from one source to every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceRow {
    pub source: usize,
    pub dist: Vec<u32>,
}

impl DistanceRow {
    pub fn get(&self, v: usize) -> Option<u32> {
        match self.dist[v] {
            UNREACHABLE => None,
            d => Some(d),
        }
    }

    /// Largest distance to any vertex, or `None` when some vertex is
    /// unreachable.
    pub fn eccentricity(&self) -> Option<u32> {
        let mut ecc = 0;
        for &d in &self.dist {
            if d == UNREACHABLE {
                return None;
            }
            ecc = ecc.max(d);
        }
        Some(ecc)
    }

    /// Largest finite entry.
    pub fn max_finite(&self) -> u32 {
        self.dist
            .iter()
            .copied()
            .filter(|&d| d != UNREACHABLE)
            .max()
            .unwrap_or(0)
    }
}

pub fn bfs(g: &Graph, source: usize) -> DistanceRow {
    let mut dist = vec![UNREACHABLE; g.n()];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let next = dist[u] + 1;
        for &w in g.neighbors(u) {
            if dist[w] == UNREACHABLE {
                dist[w] = next;
                queue.push_back(w);
            }
        }
    }
    DistanceRow { source, dist }
}

/// One BFS per source, run on the current rayon pool. Output order follows
/// `sources`.
pub fn bfs_rows(g: &Graph, sources: &[usize]) -> Vec<DistanceRow> {
    sources.par_iter().map(|&s| bfs(g, s)).collect()
}

/// Component labelling: `labels[v]` is in `0..count`, numbered in order of
/// the smallest vertex of each component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    pub labels: Vec<usize>,
    pub count: usize,
}

impl Components {
    pub fn sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.count];
        for &c in &self.labels {
            sizes[c] += 1;
        }
        sizes
    }

    pub fn members(&self) -> Vec<Vec<usize>> {
        let mut members = vec![Vec::new(); self.count];
        for (v, &c) in self.labels.iter().enumerate() {
            members[c].push(v);
        }
        members
    }
}

pub fn connected_components(g: &Graph) -> Components {
    let mut labels = vec![usize::MAX; g.n()];
    let mut count = 0;
    let mut stack = Vec::new();
    for root in g.vertices() {
        if labels[root] != usize::MAX {
            continue;
        }
        labels[root] = count;
        stack.push(root);
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if labels[w] == usize::MAX {
                    labels[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    Components { labels, count }
}

/// True for graphs with at most one component. The empty graph counts as
/// connected here; solvers reject it separately.
pub fn is_connected(g: &Graph) -> bool {
    connected_components(g).count <= 1
}

pub fn is_bipartite(g: &Graph) -> bool {
    two_coloring(g).is_some()
}

/// A proper 2-coloring (`false`/`true` per vertex) if one exists.
pub fn two_coloring(g: &Graph) -> Option<Vec<bool>> {
    let mut color: Vec<Option<bool>> = vec![None; g.n()];
    let mut queue = VecDeque::new();
    for root in g.vertices() {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(false);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for &w in g.neighbors(u) {
                match color[w] {
                    None => {
                        color[w] = Some(!cu);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(color.into_iter().map(Option::unwrap).collect())
}

/// Length of a shortest cycle, `None` for forests.
///
/// A BFS from every vertex; a non-tree edge `{u, w}` seen from root `r`
/// closes a walk of length `dist(u) + dist(w) + 1` that contains a cycle at
/// most that long, and the minimum over all roots is attained exactly.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    let mut dist = vec![UNREACHABLE; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    let mut touched = Vec::new();
    for root in g.vertices() {
        dist[root] = 0;
        touched.push(root);
        queue.push_back(root);
        'search: while let Some(u) = queue.pop_front() {
            if let Some(b) = best {
                // Every cycle found from here on has length >= 2 * dist(u).
                if 2 * dist[u] as usize >= b {
                    break 'search;
                }
            }
            for &w in g.neighbors(u) {
                if dist[w] == UNREACHABLE {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    touched.push(w);
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] as usize + dist[w] as usize + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
        queue.clear();
        for v in touched.drain(..) {
            dist[v] = UNREACHABLE;
            parent[v] = usize::MAX;
        }
    }
    best
}
