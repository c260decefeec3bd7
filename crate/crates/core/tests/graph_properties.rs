mod common;

use common::{relaxation_apsp, union_find_components, INF};
use paramdiam::io::{parse_edge_list, write_edge_list};
use paramdiam::oracle::{naive_diameter, weighted_diameter};
use paramdiam::traverse::{bfs, bfs_rows, connected_components, UNREACHABLE};
use paramdiam::{Error, Graph};
use proptest::prelude::*;
use proptest::sample::Index;

/// Random spanning tree plus extra edges.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(|n| {
            (
                Just(n),
                prop::collection::vec(any::<Index>(), n),
                prop::collection::vec((any::<Index>(), any::<Index>()), 0..2 * n),
            )
        })
        .prop_map(|(n, parents, extra)| build(n, &parents, &extra, true))
}

/// Random forest: each vertex either roots a new tree or hangs below an
/// earlier vertex.
fn forest(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(|n| (Just(n), prop::collection::vec((any::<bool>(), any::<Index>()), n)))
        .prop_map(|(n, picks)| {
            let edges: Vec<(usize, usize)> = (1..n)
                .filter(|&v| picks[v].0)
                .map(|v| (picks[v].1.index(v), v))
                .collect();
            Graph::from_edge_list(n, &edges).unwrap()
        })
}

fn build(n: usize, parents: &[Index], extra: &[(Index, Index)], tree: bool) -> Graph {
    let mut set = std::collections::BTreeSet::new();
    if tree {
        for (v, p) in parents.iter().enumerate().take(n).skip(1) {
            set.insert((p.index(v), v));
        }
    }
    for (a, b) in extra {
        let (u, v) = (a.index(n), b.index(n));
        if u != v {
            set.insert((u.min(v), u.max(v)));
        }
    }
    let edges: Vec<_> = set.into_iter().collect();
    Graph::from_edge_list(n, &edges).unwrap()
}

#[test]
fn edge_list_validation() {
    let p2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
    assert_eq!((p2.n(), p2.m()), (2, 1));
    assert_eq!(Graph::from_edge_list(1, &[(0, 0)]), Err(Error::SelfLoop(0)));
    assert!(matches!(
        Graph::from_edge_list(2, &[(0, 1), (1, 0)]),
        Err(Error::DuplicateEdge(..))
    ));
    assert!(matches!(
        Graph::from_edge_list(2, &[(0, 2)]),
        Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
    ));
}

#[test]
fn triangle_with_tail_has_diameter_two() {
    let g = Graph::from_edge_list(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
    assert_eq!(naive_diameter(&g), Ok(2));
}

#[test]
fn weighted_definition_examples() {
    let p2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
    assert_eq!(weighted_diameter(&p2, &[0, 0], 0), Ok(1));
    let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
    assert_eq!(weighted_diameter(&p3, &[1, 0, 2], 0), Ok(5));
    assert_eq!(weighted_diameter(&Graph::empty(1), &[1], 2), Ok(2));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph_invariants(g in connected_graph(30)) {
        let mut degree_sum = 0;
        for v in g.vertices() {
            let nb = g.neighbors(v);
            prop_assert!(nb.windows(2).all(|w| w[0] < w[1]));
            prop_assert!(!nb.contains(&v));
            for &w in nb {
                prop_assert!(g.neighbors(w).contains(&v));
            }
            degree_sum += nb.len();
        }
        prop_assert_eq!(degree_sum, 2 * g.m());
    }

    #[test]
    fn bfs_matches_relaxation(g in connected_graph(20)) {
        let apsp = relaxation_apsp(&g);
        for v in g.vertices() {
            let row = bfs(&g, v);
            prop_assert_eq!(row.dist[v], 0);
            for w in g.vertices() {
                prop_assert_eq!(row.dist[w] as u64, apsp[v][w]);
            }
            for (a, b) in g.edges() {
                prop_assert!(row.dist[a].abs_diff(row.dist[b]) <= 1);
            }
        }
    }

    #[test]
    fn distances_form_a_metric(g in connected_graph(20), picks in prop::collection::vec((any::<Index>(), any::<Index>(), any::<Index>()), 20)) {
        let rows = bfs_rows(&g, &g.vertices().collect::<Vec<_>>());
        for (a, b, c) in picks {
            let (u, v, w) = (a.index(g.n()), b.index(g.n()), c.index(g.n()));
            prop_assert_eq!(rows[u].dist[v], rows[v].dist[u]);
            prop_assert!(rows[u].dist[w] <= rows[u].dist[v] + rows[v].dist[w]);
        }
    }

    #[test]
    fn naive_is_largest_eccentricity(g in connected_graph(25)) {
        let mut ecc_max = 0u64;
        for v in g.vertices() {
            let row = bfs(&g, v);
            let mut ecc = 0;
            for &d in &row.dist {
                ecc = ecc.max(d);
            }
            ecc_max = ecc_max.max(ecc as u64);
        }
        prop_assert_eq!(naive_diameter(&g).unwrap(), ecc_max);
        let zeros = vec![0; g.n()];
        prop_assert_eq!(weighted_diameter(&g, &zeros, 0).unwrap(), ecc_max);
    }

    #[test]
    fn parallel_rows_match_sequential(g in connected_graph(30)) {
        let sources: Vec<usize> = g.vertices().collect();
        let sequential: Vec<_> = sources.iter().map(|&s| bfs(&g, s)).collect();
        prop_assert_eq!(bfs_rows(&g, &sources), sequential);
    }

    #[test]
    fn forest_component_count(g in forest(40)) {
        let comps = connected_components(&g);
        prop_assert_eq!(comps.count, g.n() - g.m());
        prop_assert_eq!(comps.count, union_find_components(&g));
        let apsp = relaxation_apsp(&g);
        for u in g.vertices() {
            for v in g.vertices() {
                prop_assert_eq!(comps.labels[u] == comps.labels[v], apsp[u][v] != INF);
                prop_assert_eq!(bfs(&g, u).dist[v] == UNREACHABLE, apsp[u][v] == INF);
            }
        }
    }

    #[test]
    fn edge_list_round_trip(g in connected_graph(30)) {
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }
}
