//! Seeded random instance families, one per solver parameter.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::traverse::is_connected;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn relabel(n: usize, edges: &mut [(usize, usize)], rng: &mut ChaCha8Rng) {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    for e in edges.iter_mut() {
        *e = (perm[e.0], perm[e.1]);
    }
}

fn random_tree_edges(n: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    (1..n).map(|i| (rng.gen_range(0..i), i)).collect()
}

/// A random tree on `n` vertices plus `k` extra edges, so the feedback edge
/// number is exactly `k`.
pub fn gen_tree_plus_k(n: usize, k: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InfeasibleParameters("n must be positive".into()));
    }
    let capacity = n * (n - 1) / 2 - (n - 1);
    if k > capacity {
        return Err(Error::InfeasibleParameters(format!(
            "{k} extra edges requested, only {capacity} non-edges in a tree on {n} vertices"
        )));
    }
    let mut rng = rng(seed);
    let mut edges = random_tree_edges(n, &mut rng);
    let mut present: HashSet<(usize, usize)> =
        edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    if 2 * k <= capacity {
        while edges.len() < n - 1 + k {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u != v && present.insert((u.min(v), u.max(v))) {
                edges.push((u, v));
            }
        }
    } else {
        let mut missing = Vec::with_capacity(capacity);
        for u in 0..n {
            for v in u + 1..n {
                if !present.contains(&(u, v)) {
                    missing.push((u, v));
                }
            }
        }
        missing.shuffle(&mut rng);
        edges.extend(missing.into_iter().take(k));
        present.clear();
    }
    relabel(n, &mut edges, &mut rng);
    Graph::from_edge_list(n, &edges)
}

/// Edges of a random cograph on `n` vertices from a random cotree: split
/// the vertex range in two and combine by disjoint union or by join.
fn random_cograph_edges(n: usize, force_join: bool, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    // (start, len, top-level)
    let mut stack = vec![(0usize, n, true)];
    while let Some((start, len, top)) = stack.pop() {
        if len < 2 {
            continue;
        }
        let left = rng.gen_range(1..len);
        let join = if top && force_join { true } else { rng.gen_bool(0.5) };
        if join {
            for u in start..start + left {
                for v in start + left..start + len {
                    edges.push((u, v));
                }
            }
        }
        stack.push((start, left, false));
        stack.push((start + left, len - left, false));
    }
    edges
}

/// A connected random cograph on `n` vertices plus `extra` vertices with
/// random neighborhoods, so at most `extra` vertices need deleting to get
/// back to a cograph.
pub fn gen_random_cograph_plus(n: usize, extra: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InfeasibleParameters("n must be positive".into()));
    }
    let mut rng = rng(seed);
    let total = n + extra;
    for attempt in 0.. {
        // A disjoint union on top only survives if the extras reconnect it;
        // after enough failed draws force a join.
        let force_join = extra == 0 || attempt >= 64;
        let mut edges = random_cograph_edges(n, force_join, &mut rng);
        for v in n..total {
            let before = edges.len();
            for u in 0..v {
                if rng.gen_bool(0.3) {
                    edges.push((u, v));
                }
            }
            if edges.len() == before {
                edges.push((rng.gen_range(0..v), v));
            }
        }
        relabel(total, &mut edges, &mut rng);
        let g = Graph::from_edge_list(total, &edges)?;
        if is_connected(&g) {
            return Ok(g);
        }
    }
    unreachable!()
}

/// `G(n, p)` redrawn until connected.
pub fn gen_connected_er(n: usize, p: f64, seed: u64) -> Result<Graph> {
    const ATTEMPTS: usize = 10_000;
    if n == 0 {
        return Err(Error::InfeasibleParameters("n must be positive".into()));
    }
    if !(0.0..=1.0).contains(&p) || (n > 1 && p == 0.0) {
        return Err(Error::InfeasibleParameters(format!(
            "edge probability {p} cannot give a connected graph on {n} vertices"
        )));
    }
    let mut rng = rng(seed);
    for _ in 0..ATTEMPTS {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edge_list(n, &edges)?;
        if is_connected(&g) {
            return Ok(g);
        }
    }
    Err(Error::InfeasibleParameters(format!(
        "no connected G({n}, {p}) within {ATTEMPTS} draws"
    )))
}
