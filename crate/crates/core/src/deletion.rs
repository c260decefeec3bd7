//! Distances through a deletion set, and the distance-to-clique solver.
//!
//! Any shortest path of `G` either avoids `K` entirely, and is then a
//! shortest path of `G - K`, or visits some `b` in `K`. So all-pairs
//! distances of `G` follow from those of `G - K` plus one BFS per vertex of
//! `K`.

use std::io::{self, Read, Write};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::require_connected;
use crate::params::{clique_modulator_2approx, leaves_clique, modulator_mask};
use crate::traverse::{bfs_rows, UNREACHABLE};

/// Dense all-pairs distance matrix over the vertices in `order`, row-major
/// by position in `order`. Unreachable pairs hold [`UNREACHABLE`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApspMatrix {
    pub order: Vec<usize>,
    pub dist: Vec<u32>,
}

const MAGIC: &str = "APSP";

impl ApspMatrix {
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Distance between the vertices at positions `i` and `j` of `order`.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.dist[i * self.len() + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        let n = self.len();
        &self.dist[i * n..(i + 1) * n]
    }

    /// Largest entry, or `None` if some pair is unreachable.
    pub fn diameter(&self) -> Option<u64> {
        let mut best = 0;
        for &d in &self.dist {
            if d == UNREACHABLE {
                return None;
            }
            best = best.max(d as u64);
        }
        Some(best)
    }

    /// Every row computed by BFS.
    pub fn from_bfs(g: &Graph) -> Self {
        let order: Vec<usize> = g.vertices().collect();
        let dist = bfs_rows(g, &order).into_iter().flat_map(|r| r.dist).collect();
        Self { order, dist }
    }

    /// Text header `APSP <n>` and a newline, then `n` vertex ids and the
    /// `n * n` entries, all little-endian `u32`.
    pub fn write_to<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "{MAGIC} {}", self.len())?;
        for &v in &self.order {
            out.write_all(&(v as u32).to_le_bytes())?;
        }
        for &d in &self.dist {
            out.write_all(&d.to_le_bytes())?;
        }
        Ok(())
    }

    pub fn read_from<R: Read>(mut input: R) -> Result<Self> {
        let bad = |message: String| Error::Parse { line: 1, message };
        let mut header = Vec::new();
        let mut byte = [0u8; 1];
        loop {
            input
                .read_exact(&mut byte)
                .map_err(|e| bad(format!("truncated header: {e}")))?;
            if byte[0] == b'\n' {
                break;
            }
            header.push(byte[0]);
            if header.len() > 32 {
                return Err(bad("header too long".into()));
            }
        }
        let header = String::from_utf8(header).map_err(|_| bad("header is not text".into()))?;
        let n: usize = header
            .strip_prefix(MAGIC)
            .map(str::trim)
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| bad(format!("expected `{MAGIC} <n>`, got `{header}`")))?;
        let mut words = |count: usize| -> Result<Vec<u32>> {
            let mut buf = vec![0u8; count * 4];
            input
                .read_exact(&mut buf)
                .map_err(|e| bad(format!("truncated body: {e}")))?;
            Ok(buf
                .chunks_exact(4)
                .map(|c| u32::from_le_bytes([c[0], c[1], c[2], c[3]]))
                .collect())
        };
        let order = words(n)?.into_iter().map(|v| v as usize).collect();
        let dist = words(n * n)?;
        Ok(Self { order, dist })
    }
}

/// Distances inside a complete graph on `order`.
pub fn clique_apsp(order: &[usize]) -> ApspMatrix {
    let n = order.len();
    let mut dist = vec![1; n * n];
    for i in 0..n {
        dist[i * n + i] = 0;
    }
    ApspMatrix {
        order: order.to_vec(),
        dist,
    }
}

/// Exact all-pairs distances of `g` in vertex-id order, from exact
/// distances `base` of `G - K` (over any ordering of `V \ K`).
pub fn combine_apsp(g: &Graph, k_set: &[usize], base: &ApspMatrix) -> Result<ApspMatrix> {
    let n = g.n();
    let in_k = modulator_mask(g, k_set)?;
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in base.order.iter().enumerate() {
        if v >= n || in_k[v] || pos[v] != usize::MAX {
            return Err(Error::ContractViolation(format!(
                "base matrix vertex {v} is not a distinct vertex outside the deletion set"
            )));
        }
        pos[v] = i;
    }
    if base.len() + k_set.len() != n || base.dist.len() != base.len() * base.len() {
        return Err(Error::ContractViolation(
            "base matrix does not cover the remaining vertices".into(),
        ));
    }
    let rows = bfs_rows(g, k_set);
    let mut slot = vec![usize::MAX; n];
    for (i, &b) in k_set.iter().enumerate() {
        slot[b] = i;
    }

    let mut dist = vec![UNREACHABLE; n * n];
    dist.par_chunks_mut(n.max(1)).enumerate().for_each(|(a, out)| {
        if in_k[a] {
            out.copy_from_slice(&rows[slot[a]].dist);
            return;
        }
        let base_row = base.row(pos[a]);
        for (c, entry) in out.iter_mut().enumerate() {
            *entry = if in_k[c] {
                rows[slot[c]].dist[a]
            } else {
                let mut d = base_row[pos[c]];
                for r in &rows {
                    let (x, y) = (r.dist[a], r.dist[c]);
                    if x != UNREACHABLE && y != UNREACHABLE {
                        d = d.min(x + y);
                    }
                }
                d
            };
        }
    });
    Ok(ApspMatrix {
        order: (0..n).collect(),
        dist,
    })
}

/// The supplied set checked to leave a clique, or a 2-approximate one.
fn clique_deletion_set(g: &Graph, k_set: Option<&[usize]>) -> Result<Vec<usize>> {
    let k: Vec<usize> = match k_set {
        Some(k) => k.to_vec(),
        None => clique_modulator_2approx(g),
    };
    modulator_mask(g, &k)?;
    if !leaves_clique(g, &k) {
        return Err(Error::InvalidModulator(
            "remaining vertices do not form a clique".into(),
        ));
    }
    Ok(k)
}

/// Exact diameter given `K` with `G - K` complete: either a pair touches
/// `K`, or both endpoints lie in the clique at distance one.
pub fn solve_clique_modulator(g: &Graph, k_set: Option<&[usize]>) -> Result<u64> {
    require_connected(g)?;
    let k = clique_deletion_set(g, k_set)?;
    let through_k = bfs_rows(g, &k)
        .iter()
        .map(|r| r.max_finite() as u64)
        .max()
        .unwrap_or(0);
    let clique = u64::from(g.n() - k.len() >= 2);
    Ok(through_k.max(clique))
}

/// Diameter read off the full matrix assembled from the clique remainder
/// of `K` (by default a 2-approximate clique modulator).
pub fn solve_deletion(g: &Graph, k_set: Option<&[usize]>) -> Result<u64> {
    require_connected(g)?;
    let k = clique_deletion_set(g, k_set)?;
    let (_, rest) = g.without_vertices(&k);
    let full = combine_apsp(g, &k, &clique_apsp(&rest))?;
    full.diameter().ok_or(Error::Disconnected)
}
