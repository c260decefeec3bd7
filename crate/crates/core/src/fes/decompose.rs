use crate::error::{Error, Result};
use crate::graph::Graph;

/// Split of a graph without degree-one vertices into branching vertices
/// (degree at least three), maximal paths between them, and pending cycles.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PathCycleDecomposition {
    /// Vertices of degree at least three, ascending.
    pub high: Vec<usize>,
    /// `x0 .. xa` with `x0 != xa` branching and the interior of degree two.
    /// An edge between two branching vertices is a path with `a = 1`.
    pub paths: Vec<Vec<usize>>,
    /// `x0 .. x_{a-1}`, closing back at `x0`; all but `x0` have degree two.
    pub cycles: Vec<Vec<usize>>,
}

pub fn decompose(g: &Graph) -> Result<PathCycleDecomposition> {
    if let Some(v) = g.vertices().find(|&v| g.degree(v) == 1) {
        return Err(Error::ContractViolation(format!(
            "vertex {v} has degree one; reduce first"
        )));
    }
    let mut dec = PathCycleDecomposition {
        high: g.vertices().filter(|&v| g.degree(v) >= 3).collect(),
        ..Default::default()
    };
    let mut visited = vec![false; g.n()];
    let walk = |start: usize, first: usize, visited: &mut [bool]| -> Vec<usize> {
        let mut chain = vec![start];
        let (mut prev, mut cur) = (start, first);
        while cur != start && g.degree(cur) == 2 {
            visited[cur] = true;
            chain.push(cur);
            let nb = g.neighbors(cur);
            let next = if nb[0] == prev { nb[1] } else { nb[0] };
            prev = cur;
            cur = next;
        }
        chain.push(cur);
        chain
    };

    for &v in &dec.high {
        for &w in g.neighbors(v) {
            if g.degree(w) >= 3 {
                if v < w {
                    dec.paths.push(vec![v, w]);
                }
                continue;
            }
            if visited[w] {
                continue;
            }
            let mut chain = walk(v, w, &mut visited);
            if chain.last() == Some(&v) {
                chain.pop();
                dec.cycles.push(chain);
            } else {
                dec.paths.push(chain);
            }
        }
    }

    for v in g.vertices() {
        if g.degree(v) != 2 || visited[v] {
            continue;
        }
        // a component that is one bare cycle; anchor at its smallest id
        visited[v] = true;
        let mut chain = walk(v, g.neighbors(v)[0], &mut visited);
        chain.pop();
        let anchor = (0..chain.len()).min_by_key(|&i| chain[i]).unwrap();
        chain.rotate_left(anchor);
        dec.cycles.push(chain);
    }
    Ok(dec)
}
