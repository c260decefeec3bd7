//! Brute-force oracles shared by the integration tests and the acceptance
//! runner. The oracles never call into the solvers; the `check_*` helpers
//! compare the two.
#![allow(dead_code)]

use paramdiam::constructions::{gen_connected_er, gen_random_cograph_plus, gen_tree_plus_k};
use paramdiam::fes::sweep::EndpointDistances;
use paramdiam::fes::{case2_same_path, case3_path_pair, decompose, HighDistanceTable};
use paramdiam::Graph;

pub const INF: u64 = u64::MAX;

/// All-pairs distances by relaxing every edge until nothing changes.
pub fn relaxation_apsp(g: &Graph) -> Vec<Vec<u64>> {
    let n = g.n();
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    let edges = g.edge_vec();
    loop {
        let mut changed = false;
        for row in d.iter_mut() {
            for &(u, v) in &edges {
                if row[u] != INF && row[u] + 1 < row[v] {
                    row[v] = row[u] + 1;
                    changed = true;
                }
                if row[v] != INF && row[v] + 1 < row[u] {
                    row[u] = row[v] + 1;
                    changed = true;
                }
            }
        }
        if !changed {
            return d;
        }
    }
}

/// Largest entry of a complete distance matrix, `None` if disconnected.
pub fn apsp_diameter(d: &[Vec<u64>]) -> Option<u64> {
    let mut best = 0;
    for row in d {
        for &x in row {
            if x == INF {
                return None;
            }
            best = best.max(x);
        }
    }
    Some(best)
}

pub fn brute_diameter(g: &Graph) -> u64 {
    apsp_diameter(&relaxation_apsp(g)).expect("connected")
}

/// `max{s, pen(v) + dist(v, w) + pen(w)}` over live pairs `v != w`.
pub fn brute_weighted(d: &[Vec<u64>], live: &[usize], pen: &[u64], s: u64) -> u64 {
    let mut best = s;
    for (i, &v) in live.iter().enumerate() {
        for &w in &live[i + 1..] {
            best = best.max(pen[v] + d[v][w] + pen[w]);
        }
    }
    best
}

/// Number of components via union-find.
pub fn union_find_components(g: &Graph) -> usize {
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut count = g.n();
    for (u, v) in g.edges() {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            count -= 1;
        }
    }
    count
}

/// Whether the four vertices induce a path: three edges with degree
/// sequence 1, 1, 2, 2.
pub fn induces_p4(g: &Graph, q: [usize; 4]) -> bool {
    let mut deg = [0; 4];
    let mut edges = 0;
    for i in 0..4 {
        for j in i + 1..4 {
            if g.has_edge(q[i], q[j]) {
                edges += 1;
                deg[i] += 1;
                deg[j] += 1;
            }
        }
    }
    deg.sort_unstable();
    edges == 3 && deg == [1, 1, 2, 2]
}

/// Exhaustive scan over all 4-subsets.
pub fn has_induced_p4_brute(g: &Graph) -> bool {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    if induces_p4(g, [a, b, c, d]) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Smallest number of vertices whose removal leaves a clique, by trying
/// every subset as the surviving clique.
pub fn min_clique_modulator_brute(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 20);
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let mut best_clique = 0;
    for mask in 0u32..1 << n {
        let size = mask.count_ones() as usize;
        if size <= best_clique {
            continue;
        }
        let is_clique = (0..n)
            .filter(|&v| mask >> v & 1 == 1)
            .all(|v| (mask & !(1 << v)) & !adj[v] == 0);
        if is_clique {
            best_clique = size;
        }
    }
    n - best_clique
}

/// Instance families, keyed by seed.
pub fn tree_plus_k_instance(seed: u64, max_n: usize, max_k: usize) -> Graph {
    let n = 2 + (seed as usize * 7919) % (max_n - 1);
    let capacity = n * (n - 1) / 2 - (n - 1);
    let k = ((seed as usize / 3) % (max_k + 1)).min(capacity);
    gen_tree_plus_k(n, k, seed).expect("feasible")
}

pub fn er_instance(seed: u64, max_n: usize) -> Graph {
    let n = 2 + (seed as usize * 104_729) % (max_n - 1);
    // between just-above-connectivity and fairly dense
    let low = ((n as f64).ln() + 1.0) / n as f64;
    let frac = (seed % 10) as f64 / 10.0;
    let p = (low + frac * (0.6 - low).max(0.0)).min(1.0);
    gen_connected_er(n, p, seed).expect("connected draw")
}

pub fn cograph_plus_instance(seed: u64, max_n: usize) -> Graph {
    let extra = (seed % 4) as usize;
    let base = 1 + (seed as usize * 6_151) % (max_n - extra);
    gen_random_cograph_plus(base, extra, seed).expect("valid sizes")
}

/// Distance between interior vertices `x_i`, `x_j` of one maximal path
/// `x0..xa` whose endpoints are `ends` apart.
pub fn same_path_formula(a: u64, ends: u64, i: u64, j: u64) -> u64 {
    (j - i).min(i + ends + a - j)
}

/// Distance between interior `x_i` of `x0..xa` and `y_j` of `y0..yb`, given
/// the endpoint distances `[x0y0, x0yb, xay0, xayb]`.
pub fn path_pair_formula(a: u64, b: u64, ends: [u64; 4], i: u64, j: u64) -> u64 {
    let to_x0 = (ends[0] + j).min(ends[1] + b - j);
    let to_xa = (ends[2] + j).min(ends[3] + b - j);
    (i + to_x0).min(a - i + to_xa)
}

/// Quadratic maximum of `pen(x_i) + formula + pen(x_j)` over one path.
pub fn same_path_brute(interior_pen: &[u64], ends: u64) -> Option<u64> {
    let a = interior_pen.len() as u64 + 1;
    let mut best = None;
    for i in 1..a {
        for j in i + 1..a {
            let v = interior_pen[i as usize - 1]
                + same_path_formula(a, ends, i, j)
                + interior_pen[j as usize - 1];
            best = best.max(Some(v));
        }
    }
    best
}

/// Quadratic maximum over interior pairs of two different paths.
pub fn path_pair_brute(first: &[u64], second: &[u64], ends: [u64; 4]) -> Option<u64> {
    let (a, b) = (first.len() as u64 + 1, second.len() as u64 + 1);
    let mut best = None;
    for i in 1..a {
        for j in 1..b {
            let v = first[i as usize - 1]
                + path_pair_formula(a, b, ends, i, j)
                + second[j as usize - 1];
            best = best.max(Some(v));
        }
    }
    best
}

/// Compares the path sweeps of a reduced graph (no degree-one vertices, no
/// pending cycles) against the quadratic formulas, and the formulas against
/// BFS distances. Returns the number of paths and path pairs checked.
pub fn check_path_sweeps(g: &Graph, pen: &[u64]) -> Result<(usize, usize), String> {
    let dec = decompose(g).map_err(|e| e.to_string())?;
    let table = HighDistanceTable::new(g, &dec.high);
    let apsp = relaxation_apsp(g);
    let inner: Vec<&Vec<usize>> = dec.paths.iter().filter(|p| p.len() > 2).collect();
    let interior = |p: &[usize]| -> Vec<u64> { p[1..p.len() - 1].iter().map(|&x| pen[x]).collect() };

    for p in &inner {
        let a = p.len() as u64 - 1;
        let ends = table.dist(p[0], p[p.len() - 1]);
        if ends != apsp[p[0]][p[p.len() - 1]] {
            return Err(format!("endpoint distance of path {p:?} wrong"));
        }
        for i in 1..a {
            for j in i + 1..a {
                let f = same_path_formula(a, ends, i, j);
                if f != apsp[p[i as usize]][p[j as usize]] {
                    return Err(format!("same-path formula off on {p:?} at ({i}, {j})"));
                }
            }
        }
        let sweep = case2_same_path(pen, p, ends);
        let brute = same_path_brute(&interior(p), ends);
        if sweep != brute {
            return Err(format!("same-path sweep {sweep:?} != brute {brute:?} on {p:?}"));
        }
    }

    let mut pairs = 0;
    for (s, p) in inner.iter().enumerate() {
        for q in &inner[s + 1..] {
            let (a, b) = (p.len() as u64 - 1, q.len() as u64 - 1);
            let (x0, xa, y0, yb) = (p[0], p[p.len() - 1], q[0], q[q.len() - 1]);
            let ends = [apsp[x0][y0], apsp[x0][yb], apsp[xa][y0], apsp[xa][yb]];
            for i in 1..a {
                for j in 1..b {
                    let f = path_pair_formula(a, b, ends, i, j);
                    if f != apsp[p[i as usize]][q[j as usize]] {
                        return Err(format!("path-pair formula off on {p:?} x {q:?} at ({i}, {j})"));
                    }
                }
            }
            let sweep = case3_path_pair(
                pen,
                p,
                q,
                EndpointDistances {
                    x0_y0: ends[0],
                    x0_yb: ends[1],
                    xa_y0: ends[2],
                    xa_yb: ends[3],
                },
            );
            let brute = path_pair_brute(&interior(p), &interior(q), ends);
            if sweep != brute {
                return Err(format!("path-pair sweep {sweep:?} != brute {brute:?} on {p:?} x {q:?}"));
            }
            pairs += 1;
        }
    }
    Ok((inner.len(), pairs))
}
