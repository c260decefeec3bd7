use crate::graph::Graph;

/// Vertex set whose removal leaves a clique, at most twice the minimum.
///
/// Vertices are visited in id order while tracking degrees inside the
/// shrinking remainder. A vertex adjacent to everything that remains stays
/// in the clique; otherwise it and its smallest non-neighbor are both
/// deleted, since no clique contains the two of them.
pub fn clique_modulator_2approx(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut present = vec![true; n];
    let mut degree = g.degrees();
    let mut remaining = n;
    let mut removed = Vec::new();
    let mut is_neighbor = vec![false; n];

    let detach = |v: usize, present: &mut [bool], degree: &mut [usize]| {
        present[v] = false;
        for &w in g.neighbors(v) {
            if present[w] {
                degree[w] -= 1;
            }
        }
    };

    for v in 0..n {
        if !present[v] {
            continue;
        }
        if degree[v] + 1 == remaining {
            // v stays in the clique and leaves the remainder
            detach(v, &mut present, &mut degree);
            remaining -= 1;
            continue;
        }
        for &w in g.neighbors(v) {
            is_neighbor[w] = true;
        }
        let partner = (v + 1..n)
            .find(|&w| present[w] && !is_neighbor[w])
            .expect("a vertex below full degree has a non-neighbor");
        for &w in g.neighbors(v) {
            is_neighbor[w] = false;
        }
        detach(v, &mut present, &mut degree);
        detach(partner, &mut present, &mut degree);
        remaining -= 2;
        removed.push(v);
        removed.push(partner);
    }
    removed.sort_unstable();
    removed
}

/// True when every pair of vertices outside `removed` is adjacent.
pub fn leaves_clique(g: &Graph, removed: &[usize]) -> bool {
    let (rest, _) = g.without_vertices(removed);
    let k = rest.n();
    rest.m() == k * k.saturating_sub(1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn complete_needs_nothing() {
        assert!(clique_modulator_2approx(&named::complete(5)).is_empty());
    }

    #[test]
    fn k5_minus_edge() {
        let g = named::complete(5).without_edges(&[(1, 3)]);
        assert_eq!(clique_modulator_2approx(&g), vec![1, 3]);
    }

    #[test]
    fn path_remainder_is_clique() {
        let g = named::path(4);
        let k = clique_modulator_2approx(&g);
        assert!(k.len() <= 4);
        assert!(leaves_clique(&g, &k));
    }

    #[test]
    fn edgeless() {
        let g = Graph::empty(5);
        let k = clique_modulator_2approx(&g);
        assert_eq!(k, vec![0, 1, 2, 3]);
        assert!(leaves_clique(&g, &k));
    }
}
