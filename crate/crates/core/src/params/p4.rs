//! Induced-P4 search and the cograph modulator built from it.
//!
//! The search fixes the middle edge `b-c` and looks for `a` in
//! `N(b) \ N[c]` and `d` in `N(c) \ N[b]` with `a` and `d` non-adjacent,
//! using bitset rows. This is slower than linear-time cograph recognition
//! but small enough for the instance sizes the cograph solver targets.

use crate::graph::Graph;

const WORD: usize = 64;

#[derive(Debug, Clone)]
struct BitRows {
    words: usize,
    rows: Vec<u64>,
}

impl BitRows {
    fn new(g: &Graph) -> Self {
        let words = g.n().div_ceil(WORD).max(1);
        let mut rows = vec![0u64; words * g.n()];
        for u in g.vertices() {
            for &v in g.neighbors(u) {
                rows[u * words + v / WORD] |= 1 << (v % WORD);
            }
        }
        Self { words, rows }
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }
}

fn ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let bit = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(i * WORD + bit)
        })
    })
}

fn clear(words: &mut [u64], v: usize) {
    words[v / WORD] &= !(1 << (v % WORD));
}

/// Search restricted to vertices whose bit is set in `alive`.
fn search(g: &Graph, bits: &BitRows, alive: &[u64]) -> Option<[usize; 4]> {
    let words = bits.words;
    let mut left = vec![0u64; words];
    let mut right = vec![0u64; words];
    for b in ones(alive) {
        for &c in g.neighbors(b) {
            if c < b || alive[c / WORD] >> (c % WORD) & 1 == 0 {
                continue;
            }
            let (nb, nc) = (bits.row(b), bits.row(c));
            for i in 0..words {
                left[i] = nb[i] & !nc[i] & alive[i];
                right[i] = nc[i] & !nb[i] & alive[i];
            }
            clear(&mut left, c);
            clear(&mut right, b);
            if right.iter().all(|&w| w == 0) {
                continue;
            }
            for a in ones(&left) {
                let na = bits.row(a);
                let hit = right
                    .iter()
                    .zip(na)
                    .enumerate()
                    .find(|(_, (&r, &x))| r & !x != 0);
                if let Some((i, (&r, &x))) = hit {
                    let d = i * WORD + (r & !x).trailing_zeros() as usize;
                    return Some([a, b, c, d]);
                }
            }
        }
    }
    None
}

fn all_alive(n: usize) -> Vec<u64> {
    let mut alive = vec![0u64; n.div_ceil(WORD).max(1)];
    for v in 0..n {
        alive[v / WORD] |= 1 << (v % WORD);
    }
    alive
}

/// An induced path `a-b-c-d`, or `None` when `g` is a cograph.
///
/// Deterministic: middle edges are scanned in lexicographic order and the
/// smallest valid `a`, then `d`, is taken.
pub fn find_induced_p4(g: &Graph) -> Option<[usize; 4]> {
    search(g, &BitRows::new(g), &all_alive(g.n()))
}

pub fn is_cograph(g: &Graph) -> bool {
    find_induced_p4(g).is_none()
}

/// Repeatedly deletes all four vertices of an induced P4 until the rest is
/// P4-free. Returned ids are sorted.
pub fn cograph_modulator(g: &Graph) -> Vec<usize> {
    let bits = BitRows::new(g);
    let mut alive = all_alive(g.n());
    let mut removed = Vec::new();
    while let Some(p4) = search(g, &bits, &alive) {
        for v in p4 {
            clear(&mut alive, v);
            removed.push(v);
        }
    }
    removed.sort_unstable();
    removed
}
