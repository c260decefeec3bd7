//! Vertex-weighted diameter instances and the two reduction rules that
//! shrink them: peeling degree-one vertices and folding pending cycles.

use std::collections::VecDeque;

use serde::Serialize;

use super::sweep::{cycle_anchor_reach, max_pair_on_ring};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A graph with endpoint weights `pen` and a running answer `s`. The value
/// of the instance is `max{s, max over v != w of pen(v) + dist(v, w) + pen(w)}`;
/// both reduction rules keep it unchanged.
///
/// Vertices keep their original ids; deleted vertices are flagged dead and
/// neighbor lists are pruned lazily.
#[derive(Debug, Clone)]
pub struct WeightedDiameterInstance {
    adj: Vec<Vec<usize>>,
    alive: Vec<bool>,
    degree: Vec<usize>,
    pen: Vec<u64>,
    s: u64,
    live: usize,
}

/// A cycle `x0 x1 .. x_{a-1} x0` whose vertices other than the anchor `x0`
/// all have degree two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PendingCycle {
    pub vertices: Vec<usize>,
}

impl PendingCycle {
    pub fn anchor(&self) -> usize {
        self.vertices[0]
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// One rule application, with the values written by it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "rule")]
pub enum RuleEvent {
    #[serde(rename = "degree_one")]
    DegreeOne {
        removed: usize,
        neighbor: usize,
        s: u64,
        pen: u64,
    },
    #[serde(rename = "pending_cycle")]
    PendingCycle {
        anchor: usize,
        removed: Vec<usize>,
        s: u64,
        pen: u64,
    },
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ReductionStats {
    pub degree_one: usize,
    pub pending_cycles: usize,
}

impl WeightedDiameterInstance {
    /// Unweighted start: all `pen` zero and `s = 0`.
    pub fn new(g: &Graph) -> Self {
        Self {
            adj: g.vertices().map(|v| g.neighbors(v).to_vec()).collect(),
            alive: vec![true; g.n()],
            degree: g.degrees(),
            pen: vec![0; g.n()],
            s: 0,
            live: g.n(),
        }
    }

    pub fn with_weights(g: &Graph, pen: Vec<u64>, s: u64) -> Result<Self> {
        if pen.len() != g.n() {
            return Err(Error::ContractViolation(format!(
                "{} weights for {} vertices",
                pen.len(),
                g.n()
            )));
        }
        let mut inst = Self::new(g);
        inst.pen = pen;
        inst.s = s;
        Ok(inst)
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn pen(&self, v: usize) -> u64 {
        self.pen[v]
    }

    pub fn is_alive(&self, v: usize) -> bool {
        self.alive[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degree[v]
    }

    pub fn live_count(&self) -> usize {
        self.live
    }

    pub fn live_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.alive.len()).filter(|&v| self.alive[v])
    }

    pub fn live_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied().filter(|&w| self.alive[w])
    }

    fn has_live_edge(&self, u: usize, w: usize) -> bool {
        self.alive[w] && self.adj[u].contains(&w)
    }

    fn prune(&mut self, v: usize) {
        let alive = &self.alive;
        self.adj[v].retain(|&w| alive[w]);
    }

    /// The surviving graph relabelled to `0..live`, plus the map back to
    /// original ids.
    pub fn current_graph(&self) -> (Graph, Vec<usize>) {
        let ids: Vec<usize> = self.live_vertices().collect();
        let mut new_id = vec![usize::MAX; self.alive.len()];
        for (i, &v) in ids.iter().enumerate() {
            new_id[v] = i;
        }
        let mut edges = Vec::new();
        for &v in &ids {
            for w in self.live_neighbors(v) {
                if v < w {
                    edges.push((new_id[v], new_id[w]));
                }
            }
        }
        let g = Graph::from_edge_list(ids.len(), &edges).expect("live subgraph is simple");
        (g, ids)
    }

    pub fn degree_one_vertices(&self) -> Vec<usize> {
        self.live_vertices()
            .filter(|&v| self.degree[v] == 1)
            .collect()
    }

    /// Degree-two vertex `v` entered from `prev`: the other side.
    fn step(&self, v: usize, prev: usize) -> usize {
        self.live_neighbors(v)
            .find(|&w| w != prev)
            .expect("degree-two vertex has two neighbors")
    }

    /// Follows degree-two vertices from `start` through `first` until a
    /// vertex of other degree, or `start` itself, is reached.
    fn walk(&self, start: usize, first: usize) -> (Vec<usize>, usize) {
        let mut interior = Vec::new();
        let (mut prev, mut cur) = (start, first);
        while cur != start && self.degree[cur] == 2 {
            interior.push(cur);
            let next = self.step(cur, prev);
            prev = cur;
            cur = next;
        }
        (interior, cur)
    }

    /// The pending cycle through degree-two vertex `v`, if any. For a
    /// component that is a bare cycle the anchor is its smallest id.
    fn cycle_through(&self, v: usize) -> Option<PendingCycle> {
        let mut ends = self.live_neighbors(v);
        let (p, q) = (ends.next()?, ends.next()?);
        let (p_side, p_end) = self.walk(v, p);
        if p_end == v {
            let mut vertices = vec![v];
            vertices.extend(p_side);
            let anchor_pos = (0..vertices.len()).min_by_key(|&i| vertices[i]).unwrap();
            vertices.rotate_left(anchor_pos);
            return Some(PendingCycle { vertices });
        }
        let (q_side, q_end) = self.walk(v, q);
        if p_end != q_end || self.degree[p_end] < 3 {
            return None;
        }
        let mut vertices = Vec::with_capacity(p_side.len() + q_side.len() + 2);
        vertices.push(p_end);
        vertices.extend(p_side.into_iter().rev());
        vertices.push(v);
        vertices.extend(q_side);
        Some(PendingCycle { vertices })
    }

    /// All pending cycles of the current graph.
    pub fn pending_cycles(&self) -> Vec<PendingCycle> {
        let mut seen = vec![false; self.alive.len()];
        let mut found = Vec::new();
        for v in self.live_vertices() {
            if self.degree[v] != 2 || seen[v] {
                continue;
            }
            let cycle = self.cycle_through(v);
            // mark the whole chain so it is inspected once
            let mut chain = vec![v];
            for first in self.live_neighbors(v) {
                chain.extend(self.walk(v, first).0);
            }
            for u in chain {
                seen[u] = true;
            }
            if let Some(c) = cycle {
                found.push(c);
            }
        }
        found
    }

    /// Deletes degree-one vertex `u`, folding it into its neighbor `v`:
    /// `s = max{s, pen(u) + pen(v) + 1}` and `pen(v) = max{pen(u) + 1, pen(v)}`.
    pub fn apply_rr1(&mut self, u: usize) -> Result<RuleEvent> {
        if u >= self.alive.len() || !self.alive[u] || self.degree[u] != 1 {
            return Err(Error::ContractViolation(format!(
                "vertex {u} is not a live degree-one vertex"
            )));
        }
        self.prune(u);
        let v = self.adj[u][0];
        self.s = self.s.max(self.pen[u] + self.pen[v] + 1);
        self.pen[v] = self.pen[v].max(self.pen[u] + 1);
        self.alive[u] = false;
        self.degree[u] = 0;
        self.degree[v] -= 1;
        self.live -= 1;
        Ok(RuleEvent::DegreeOne {
            removed: u,
            neighbor: v,
            s: self.s,
            pen: self.pen[v],
        })
    }

    fn check_pending_cycle(&self, cycle: &PendingCycle) -> Result<()> {
        let fail = |why: &str| Err(Error::ContractViolation(format!("not a pending cycle: {why}")));
        let xs = &cycle.vertices;
        if xs.len() < 3 {
            return fail("fewer than three vertices");
        }
        let mut distinct = xs.clone();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() != xs.len() {
            return fail("repeated vertex");
        }
        if xs.iter().any(|&x| x >= self.alive.len() || !self.alive[x]) {
            return fail("dead or unknown vertex");
        }
        if xs[1..].iter().any(|&x| self.degree[x] != 2) {
            return fail("interior vertex without degree two");
        }
        for i in 0..xs.len() {
            if !self.has_live_edge(xs[i], xs[(i + 1) % xs.len()]) {
                return fail("consecutive vertices not adjacent");
            }
        }
        Ok(())
    }

    /// Deletes the cycle except its anchor `x0`, setting
    /// `s = max{s, weighted diameter of the cycle}` and raising `pen(x0)` to
    /// the farthest weighted reach into the cycle. O(length).
    pub fn apply_rr2(&mut self, cycle: &PendingCycle) -> Result<RuleEvent> {
        self.check_pending_cycle(cycle)?;
        let xs = &cycle.vertices;
        let weights: Vec<u64> = xs.iter().map(|&x| self.pen[x]).collect();
        let inside = max_pair_on_ring(&weights, xs.len() as u64).expect("cycle has pairs");
        let anchor = xs[0];
        self.s = self.s.max(inside);
        self.pen[anchor] = self.pen[anchor].max(cycle_anchor_reach(&weights));
        for &x in &xs[1..] {
            self.alive[x] = false;
            self.degree[x] = 0;
        }
        self.degree[anchor] -= 2;
        self.live -= xs.len() - 1;
        Ok(RuleEvent::PendingCycle {
            anchor,
            removed: xs[1..].to_vec(),
            s: self.s,
            pen: self.pen[anchor],
        })
    }

    /// Applies both rules until neither applies.
    ///
    /// Degree-one vertices sit in a queue. Pending cycles are found once by
    /// walking the chains around every degree-three-or-more vertex, and
    /// afterwards only through vertices whose degree has just dropped to two,
    /// since that is the only way two chains merge into a new cycle.
    pub fn reduce_exhaustively(
        &mut self,
        mut trace: Option<&mut Vec<RuleEvent>>,
    ) -> ReductionStats {
        let mut stats = ReductionStats::default();
        let mut ones: VecDeque<usize> = self.degree_one_vertices().into();
        let mut twos: Vec<usize> = Vec::new();
        let record = |event: RuleEvent, trace: &mut Option<&mut Vec<RuleEvent>>| {
            if let Some(t) = trace.as_deref_mut() {
                t.push(event);
            }
        };
        let mut initial_scan = true;

        loop {
            while let Some(u) = ones.pop_front() {
                if !self.alive[u] || self.degree[u] != 1 {
                    continue;
                }
                let event = self.apply_rr1(u).expect("queued vertex has degree one");
                let RuleEvent::DegreeOne { neighbor, .. } = event else {
                    unreachable!()
                };
                stats.degree_one += 1;
                record(event, &mut trace);
                match self.degree[neighbor] {
                    1 => ones.push_back(neighbor),
                    2 => twos.push(neighbor),
                    _ => {}
                }
            }

            if initial_scan {
                initial_scan = false;
                let mut walked = vec![false; self.alive.len()];
                for v in 0..self.alive.len() {
                    if !self.alive[v] || self.degree[v] < 3 {
                        continue;
                    }
                    self.prune(v);
                    let firsts = self.adj[v].clone();
                    for w in firsts {
                        if self.degree[v] < 3 {
                            break;
                        }
                        if !self.alive[w] || self.degree[w] != 2 || walked[w] {
                            continue;
                        }
                        let (interior, end) = self.walk(v, w);
                        for &x in &interior {
                            walked[x] = true;
                        }
                        if end == v {
                            let mut vertices = vec![v];
                            vertices.extend(interior);
                            let event = self
                                .apply_rr2(&PendingCycle { vertices })
                                .expect("walked cycle is pending");
                            stats.pending_cycles += 1;
                            record(event, &mut trace);
                        }
                    }
                    match self.degree[v] {
                        1 => ones.push_back(v),
                        2 => twos.push(v),
                        _ => {}
                    }
                }
                // Degree-two vertices never reached from a branching vertex
                // lie on bare cycles.
                twos.extend(
                    (0..self.alive.len())
                        .filter(|&v| self.alive[v] && self.degree[v] == 2 && !walked[v]),
                );
                continue;
            }

            let Some(v) = twos.pop() else { break };
            if !self.alive[v] || self.degree[v] != 2 {
                continue;
            }
            if let Some(cycle) = self.cycle_through(v) {
                let anchor = cycle.anchor();
                let event = self.apply_rr2(&cycle).expect("found cycle is pending");
                stats.pending_cycles += 1;
                record(event, &mut trace);
                match self.degree[anchor] {
                    1 => ones.push_back(anchor),
                    2 => twos.push(anchor),
                    _ => {}
                }
            }
        }
        stats
    }
}
