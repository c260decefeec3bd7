//! Graph constructions with a known diameter relation to their input, and
//! seeded random instance families.
//!
//! * [`bipartite_girth_construction`]: bipartite double cover plus a perfect
//!   matching; diameter grows by exactly one, girth is four.
//! * [`bisection_construction`]: two-edge pendant paths on every vertex and
//!   a large star behind a single bridge; diameter grows by exactly four.
//! * [`sat_to_diameter`]: half-assignments and clauses joined through four
//!   hub vertices; diameter five exactly when the formula is satisfiable.

mod cnf;
mod random;

pub use cnf::CnfFormula;
pub use random::{gen_connected_er, gen_random_cograph_plus, gen_tree_plus_k};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::traverse::connected_components;

/// How the output diameter relates to the input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DiameterRelation {
    /// Output diameter is the input diameter plus `offset`.
    InputPlus { offset: u64 },
    /// Output diameter is five if the formula is satisfiable, below five
    /// otherwise.
    FiveIffSatisfiable,
}

/// Structural certificate shipped with a construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Every edge runs between the two sides.
    Bipartition { left: Vec<usize>, right: Vec<usize> },
    /// Deleting `cut_edge` leaves exactly the two sides as components.
    Bisection {
        cut_edge: (usize, usize),
        sides: [Vec<usize>; 2],
    },
    /// Every vertex is in `hubs` or adjacent to one.
    Domination {
        hubs: [usize; 4],
        assignment_vertices: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionOutput {
    pub graph: Graph,
    pub relation: DiameterRelation,
    pub witness: Witness,
    /// Human-readable role of every vertex, such as `u3` or `s1_0`.
    pub roles: Vec<String>,
}

/// Everything but the graph, for a JSON sidecar next to the edge list.
#[derive(Debug, Clone, Serialize)]
pub struct Sidecar<'a> {
    pub n: usize,
    pub m: usize,
    pub relation: DiameterRelation,
    pub witness: &'a Witness,
    pub roles: &'a [String],
}

impl ConstructionOutput {
    pub fn sidecar(&self) -> Sidecar<'_> {
        Sidecar {
            n: self.graph.n(),
            m: self.graph.m(),
            relation: self.relation,
            witness: &self.witness,
            roles: &self.roles,
        }
    }

    /// Checks the witness against the graph.
    pub fn verify_witness(&self) -> Result<()> {
        let g = &self.graph;
        let fail = |msg: String| Err(Error::ContractViolation(msg));
        match &self.witness {
            Witness::Bipartition { left, right } => {
                let mut side = vec![None; g.n()];
                for (&v, s) in left.iter().map(|v| (v, 0)).chain(right.iter().map(|v| (v, 1))) {
                    if v >= g.n() || side[v].replace(s).is_some() {
                        return fail(format!("vertex {v} misplaced in bipartition"));
                    }
                }
                if let Some(v) = side.iter().position(Option::is_none) {
                    return fail(format!("vertex {v} on neither side"));
                }
                if let Some((u, v)) = g.edges().find(|&(u, v)| side[u] == side[v]) {
                    return fail(format!("edge {{{u}, {v}}} inside one side"));
                }
            }
            Witness::Bisection { cut_edge, sides } => {
                let (a, b) = *cut_edge;
                if !g.has_edge(a, b) {
                    return fail(format!("cut edge {{{a}, {b}}} missing"));
                }
                let comps = connected_components(&g.without_edges(&[(a, b)]));
                let mut found: Vec<Vec<usize>> = comps.members();
                let mut expect: Vec<Vec<usize>> = sides.to_vec();
                for s in expect.iter_mut().chain(found.iter_mut()) {
                    s.sort_unstable();
                }
                expect.sort();
                found.sort();
                if found != expect || sides[0].len() != sides[1].len() {
                    return fail("cut does not split the graph into the two sides".into());
                }
            }
            Witness::Domination { hubs, .. } => {
                let mut covered = vec![false; g.n()];
                for &t in hubs {
                    covered[t] = true;
                    for &w in g.neighbors(t) {
                        covered[w] = true;
                    }
                }
                if let Some(v) = covered.iter().position(|&c| !c) {
                    return fail(format!("vertex {v} not dominated"));
                }
            }
        }
        Ok(())
    }
}

/// Vertices `u_i = i` and `w_i = n + i`; edges `u_i w_j` and `u_j w_i` for
/// every input edge `v_i v_j`, plus the matching `u_i w_i`.
pub fn bipartite_girth_construction(g: &Graph) -> ConstructionOutput {
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, n + i)).collect();
    for (i, j) in g.edges() {
        edges.push((i, n + j));
        edges.push((j, n + i));
    }
    let roles = (0..n)
        .map(|i| format!("u{i}"))
        .chain((0..n).map(|i| format!("w{i}")))
        .collect();
    ConstructionOutput {
        graph: Graph::from_edge_list(2 * n, &edges).expect("construction is simple"),
        relation: DiameterRelation::InputPlus { offset: 1 },
        witness: Witness::Bipartition {
            left: (0..n).collect(),
            right: (n..2 * n).collect(),
        },
        roles,
    }
}

/// Vertices `s_i = i`, `t_i = n + i`, `u_i = 2n + i` and `w_k = 3n + k`
/// for `k < 3n`. Paths `s_i t_i u_i`, the input edges copied onto the
/// `u_i`, a star centred at `w_0` over all `w_k`, and the bridge `u_0 w_0`.
/// `6n` vertices and `5n + m` edges.
pub fn bisection_construction(g: &Graph) -> ConstructionOutput {
    let n = g.n();
    let (s, t, u, w) = (0, n, 2 * n, 3 * n);
    let mut edges = Vec::with_capacity(5 * n + g.m());
    for i in 0..n {
        edges.push((s + i, t + i));
        edges.push((t + i, u + i));
    }
    if n > 0 {
        edges.push((u, w));
        edges.extend((1..3 * n).map(|k| (w, w + k)));
    }
    edges.extend(g.edges().map(|(i, j)| (u + i, u + j)));
    let roles = ["s", "t", "u"]
        .iter()
        .flat_map(|p| (0..n).map(move |i| format!("{p}{i}")))
        .chain((0..3 * n).map(|k| format!("w{k}")))
        .collect();
    ConstructionOutput {
        graph: Graph::from_edge_list(6 * n, &edges).expect("construction is simple"),
        relation: DiameterRelation::InputPlus { offset: 4 },
        witness: Witness::Bisection {
            cut_edge: (u, w),
            sides: [(0..3 * n).collect(), (3 * n..6 * n).collect()],
        },
        roles,
    }
}

/// Largest half-assignment width accepted by [`sat_to_diameter`]; the
/// graph has `2^(width + 1)` assignment vertices.
pub const MAX_HALF_VARIABLES: usize = 20;

/// Graph of diameter five if `phi` is satisfiable and at most four
/// otherwise.
///
/// The variables (padded to an even count) are split into the first and
/// second half by index. `V1`/`V2` hold one vertex per assignment of a half,
/// where bit `b` of the vertex index sets the `b`-th variable of that half.
/// `B` holds one vertex per clause. For every half-assignment that leaves a
/// clause unsatisfied, a middle vertex (`S1` for the first half, `S2` for
/// the second) is joined to both. Hubs `t1..t4` form a path; `t1` sees `V1`,
/// `t2` sees `S1` and `B`, `t3` sees `S2` and `B`, `t4` sees `V2`.
///
/// Layout: `V1`, `V2`, `B`, `S1`, `S2`, then `t1..t4`.
pub fn sat_to_diameter(phi: &CnfFormula) -> Result<ConstructionOutput> {
    if phi.clauses().is_empty() {
        return Err(Error::InvalidFormula("formula has no clauses".into()));
    }
    let phi = phi.padded_to_even();
    let half = phi.num_vars() / 2;
    if half > MAX_HALF_VARIABLES {
        return Err(Error::InfeasibleParameters(format!(
            "{} variables need 2^{} assignment vertices",
            phi.num_vars(),
            half + 1
        )));
    }
    let per_half = 1usize << half;
    let clauses = phi.clauses();
    let (v1, v2, b) = (0, per_half, 2 * per_half);
    let mut roles: Vec<String> = (0..per_half)
        .map(|i| format!("v1_{i}"))
        .chain((0..per_half).map(|i| format!("v2_{i}")))
        .chain((0..clauses.len()).map(|j| format!("b{j}")))
        .collect();
    let mut edges = Vec::new();
    let mut middles: [Vec<usize>; 2] = [Vec::new(), Vec::new()];

    for (side, first_var, start, tag) in [(0, 1, v1, "s"), (1, half + 1, v2, "q")] {
        for i in 0..per_half {
            // shift the half-assignment onto its variable positions
            let assignment = (i as u64) << (first_var - 1);
            for (j, clause) in clauses.iter().enumerate() {
                let satisfied = clause.iter().any(|&l| {
                    let var = l.unsigned_abs() as usize;
                    (first_var..first_var + half).contains(&var)
                        && CnfFormula::literal_value(l, assignment)
                });
                if !satisfied {
                    let id = roles.len();
                    roles.push(format!("{tag}{i}_{j}"));
                    middles[side].push(id);
                    edges.push((start + i, id));
                    edges.push((b + j, id));
                }
            }
        }
    }

    let t = roles.len();
    roles.extend((1..=4).map(|k| format!("t{k}")));
    edges.extend([(t, t + 1), (t + 1, t + 2), (t + 2, t + 3)]);
    edges.extend((v1..v1 + per_half).map(|v| (t, v)));
    edges.extend(middles[0].iter().map(|&s| (t + 1, s)));
    edges.extend(middles[1].iter().map(|&q| (t + 2, q)));
    edges.extend((v2..v2 + per_half).map(|v| (t + 3, v)));
    for j in 0..clauses.len() {
        edges.push((t + 1, b + j));
        edges.push((t + 2, b + j));
    }

    Ok(ConstructionOutput {
        graph: Graph::from_edge_list(roles.len(), &edges)?,
        relation: DiameterRelation::FiveIffSatisfiable,
        witness: Witness::Domination {
            hubs: [t, t + 1, t + 2, t + 3],
            assignment_vertices: 2 * per_half,
        },
        roles,
    })
}
