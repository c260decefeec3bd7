mod common;

use common::{check_path_sweeps, tree_plus_k_instance};
use paramdiam::fes::WeightedDiameterInstance;
use paramdiam::Graph;
use proptest::prelude::*;

/// Reduced core of a tree-plus-k instance with fresh random weights.
fn reduced(seed: u64, pens: &[u64]) -> Option<(Graph, Vec<u64>)> {
    let g = tree_plus_k_instance(seed, 60, 10);
    let mut inst = WeightedDiameterInstance::new(&g);
    inst.reduce_exhaustively(None);
    let (core, _) = inst.current_graph();
    (core.n() > 1).then(|| {
        let pen = pens.iter().cycle().take(core.n()).copied().collect();
        (core, pen)
    })
}

#[test]
fn theta_graph_paths() {
    let edges = [(0, 2), (2, 1), (0, 3), (3, 4), (4, 1), (0, 5), (5, 6), (6, 7), (7, 1), (0, 1)];
    let g = Graph::from_edge_list(8, &edges).unwrap();
    assert_eq!(check_path_sweeps(&g, &[0; 8]), Ok((3, 3)));
    assert_eq!(check_path_sweeps(&g, &[3, 0, 5, 1, 0, 2, 7, 1]), Ok((3, 3)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn sweeps_match_formulas_and_bfs(seed in 0u64..1_000_000, pens in prop::collection::vec(0u64..8, 1..20)) {
        if let Some((core, pen)) = reduced(seed, &pens) {
            prop_assert_eq!(check_path_sweeps(&core, &pen).map(|_| ()), Ok(()));
        }
    }
}
