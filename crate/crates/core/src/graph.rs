//! Immutable undirected simple graphs in compressed adjacency form.

use std::collections::HashSet;

use crate::error::{Error, Result};

/// An undirected simple graph on vertices `0..n`.
///
/// Neighbor lists are stored back to back in one buffer and each list is
/// sorted ascending, so adjacency tests are a binary search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting self-loops, repeated
    /// edges (in either orientation) and out-of-range endpoints.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut seen = HashSet::with_capacity(edges.len());
        let mut degree = vec![0usize; n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateEdge(u, v));
            }
            degree[u] += 1;
            degree[v] += 1;
        }
        Ok(Self::build(n, &degree, edges))
    }

    /// Graph without edges.
    pub fn empty(n: usize) -> Self {
        Self {
            offsets: vec![0; n + 1],
            targets: Vec::new(),
        }
    }

    fn build(n: usize, degree: &[usize], edges: &[(usize, usize)]) -> Self {
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut targets = vec![0; offsets[n]];
        for &(u, v) in edges {
            targets[fill[u]] = v;
            fill[u] += 1;
            targets[fill[v]] = u;
            fill[v] += 1;
        }
        for v in 0..n {
            targets[offsets[v]..offsets[v + 1]].sort_unstable();
        }
        Self { offsets, targets }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// Every edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn edge_vec(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    /// Subgraph induced by the vertices with `keep[v] == true`, relabelled to
    /// `0..k` in increasing id order. The second component maps new ids back
    /// to old ones.
    pub fn induced_subgraph(&self, keep: &[bool]) -> (Graph, Vec<usize>) {
        debug_assert_eq!(keep.len(), self.n());
        let mut new_id = vec![usize::MAX; self.n()];
        let mut old_id = Vec::new();
        for v in self.vertices().filter(|&v| keep[v]) {
            new_id[v] = old_id.len();
            old_id.push(v);
        }
        let k = old_id.len();
        let mut degree = vec![0usize; k];
        let mut edges = Vec::new();
        for (u, v) in self.edges() {
            if keep[u] && keep[v] {
                let (a, b) = (new_id[u], new_id[v]);
                degree[a] += 1;
                degree[b] += 1;
                edges.push((a, b));
            }
        }
        (Self::build(k, &degree, &edges), old_id)
    }

    /// `G - removed`.
    pub fn without_vertices(&self, removed: &[usize]) -> (Graph, Vec<usize>) {
        let mut keep = vec![true; self.n()];
        for &v in removed {
            keep[v] = false;
        }
        self.induced_subgraph(&keep)
    }

    /// Graph with the given edges removed. Edges that are absent are ignored.
    pub fn without_edges(&self, removed: &[(usize, usize)]) -> Graph {
        let drop: HashSet<(usize, usize)> =
            removed.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        let kept: Vec<_> = self.edges().filter(|e| !drop.contains(e)).collect();
        let mut degree = vec![0usize; self.n()];
        for &(u, v) in &kept {
            degree[u] += 1;
            degree[v] += 1;
        }
        Self::build(self.n(), &degree, &kept)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.vertices().map(|v| self.degree(v)).collect()
    }
}

/// Handy constructors for small named graphs.
pub mod named {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edge_list(n, &edges).unwrap()
    }

    /// `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edge_list(leaves + 1, &edges).unwrap()
    }
}
