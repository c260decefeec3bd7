//! Diameter given a modulator `K` whose removal leaves a cograph.
//!
//! Every component of `G - K` has diameter at most two, so the only long
//! distances run between components and pass through `K`. Vertices are
//! bucketed by their distances to `K` (capped at four); two vertices in
//! different components are as far apart as their buckets say, so one pair
//! of representatives per pair of buckets suffices.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::require_connected;
use crate::params::{cograph_modulator, find_induced_p4, modulator_mask};
use crate::traverse::{bfs_rows, connected_components, DistanceRow};

/// Distances to the modulator vertices, with everything above three
/// reported as four.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CappedTypeVector(pub Vec<u8>);

impl CappedTypeVector {
    pub const CAP: u8 = 4;

    pub fn of(v: usize, rows: &[DistanceRow]) -> Self {
        Self(
            rows.iter()
                .map(|r| r.dist[v].min(Self::CAP as u32) as u8)
                .collect(),
        )
    }
}

/// Where the vertices of one type sit in `G - K`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentSpan {
    Single(usize),
    Multiple,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeRecord {
    pub vector: CappedTypeVector,
    pub count: usize,
    pub component: ComponentSpan,
    /// One or two vertices of this type, in distinct components.
    pub representatives: Vec<usize>,
}

/// Diameter of every component of the cograph `g_minus_k`: 0 for a single
/// vertex, 1 for a clique, 2 otherwise. Fails if some component turns out
/// to be wider than two, which no cograph is.
pub fn component_diameters(g_minus_k: &Graph) -> Result<Vec<u32>> {
    let comps = connected_components(g_minus_k);
    let mut out = Vec::with_capacity(comps.count);
    for members in comps.members() {
        let size = members.len();
        let edges: usize = members.iter().map(|&v| g_minus_k.degree(v)).sum::<usize>() / 2;
        let diameter = match size {
            1 => 0,
            _ if edges == size * (size - 1) / 2 => 1,
            _ => {
                if let Some(v) = members.iter().copied().find(|&v| !within_two_of_all(g_minus_k, v, size)) {
                    return Err(Error::InvalidModulator(format!(
                        "component of vertex {v} in the remainder has diameter above two"
                    )));
                }
                2
            }
        };
        out.push(diameter);
    }
    Ok(out)
}

fn within_two_of_all(g: &Graph, v: usize, component_size: usize) -> bool {
    let mut seen = std::collections::HashSet::with_capacity(component_size);
    seen.insert(v);
    for &w in g.neighbors(v) {
        seen.insert(w);
        seen.extend(g.neighbors(w).iter().copied());
    }
    seen.len() == component_size
}

/// Groups the vertices outside `K` by capped type. `component_of[v]` is the
/// component of `v` in `G - K`, `None` for modulator vertices; `rows` are
/// the BFS rows of the modulator vertices in `G`. Records are ordered by
/// their smallest vertex.
pub fn build_types(rows: &[DistanceRow], component_of: &[Option<usize>]) -> Vec<TypeRecord> {
    let mut index: HashMap<CappedTypeVector, usize> = HashMap::new();
    let mut records: Vec<TypeRecord> = Vec::new();
    for (v, comp) in component_of.iter().enumerate() {
        let Some(c) = *comp else { continue };
        let vector = CappedTypeVector::of(v, rows);
        match index.get(&vector) {
            Some(&i) => {
                let rec = &mut records[i];
                rec.count += 1;
                if rec.representatives.len() < 2 && component_of[rec.representatives[0]] != Some(c) {
                    rec.representatives.push(v);
                    rec.component = ComponentSpan::Multiple;
                }
            }
            None => {
                index.insert(vector.clone(), records.len());
                records.push(TypeRecord {
                    vector,
                    count: 1,
                    component: ComponentSpan::Single(c),
                    representatives: vec![v],
                });
            }
        }
    }
    records
}

fn through_modulator(rows: &[DistanceRow], y: usize, z: usize) -> u64 {
    rows.iter()
        .map(|r| r.dist[y] as u64 + r.dist[z] as u64)
        .min()
        .unwrap_or(u64::MAX)
}

/// Exact diameter of `g`. Without `k_set` a modulator is computed by P4
/// peeling; a supplied one is checked and rejected if `G - K` has an
/// induced P4.
pub fn solve_cograph(g: &Graph, k_set: Option<&[usize]>) -> Result<u64> {
    require_connected(g)?;
    let k: Vec<usize> = match k_set {
        Some(k) => k.to_vec(),
        None => cograph_modulator(g),
    };
    let in_k = modulator_mask(g, &k)?;
    let keep: Vec<bool> = in_k.iter().map(|&x| !x).collect();
    let (rest, ids) = g.induced_subgraph(&keep);
    if let Some(p) = find_induced_p4(&rest) {
        let p = p.map(|v| ids[v]);
        return Err(Error::InvalidModulator(format!(
            "induced P4 {}-{}-{}-{} remains after deletion",
            p[0], p[1], p[2], p[3]
        )));
    }

    // pairs inside one component of G - K; these distances are exact in G
    // too, since a non-adjacent pair at distance two stays at distance two
    let mut best = component_diameters(&rest)?.into_iter().max().unwrap_or(0) as u64;

    let rows = bfs_rows(g, &k);
    best = best.max(rows.iter().map(|r| r.max_finite() as u64).max().unwrap_or(0));

    let labels = connected_components(&rest).labels;
    let mut component_of = vec![None; g.n()];
    for (sub, &orig) in ids.iter().enumerate() {
        component_of[orig] = Some(labels[sub]);
    }
    let types = build_types(&rows, &component_of);

    let cross = (0..types.len())
        .into_par_iter()
        .map(|i| {
            let mut local = 0;
            for other in &types[i..] {
                for &y in &types[i].representatives {
                    for &z in &other.representatives {
                        if component_of[y] != component_of[z] {
                            local = local.max(through_modulator(&rows, y, z));
                        }
                    }
                }
            }
            local
        })
        .max()
        .unwrap_or(0);
    Ok(best.max(cross))
}
