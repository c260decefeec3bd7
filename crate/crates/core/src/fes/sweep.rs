//! Linear-time maximizations over degree-2 chains.
//!
//! A pending cycle of length `a` and a maximal path `x0..xa` whose
//! endpoints are `D` apart both behave like a ring: two chain vertices at
//! offsets `i < j` are `min(j - i, L - (j - i))` apart, with `L = a` for
//! the cycle and `L = a + D` for the path (the far way round leaves the
//! path through its endpoints).

use std::collections::VecDeque;

/// Maximum of `w[i] + w[j] + min(j - i, ring_len - (j - i))` over `i < j`.
///
/// Pairs at most `ring_len / 2` apart are read from a sliding-window
/// maximum of `w[i] - i`; farther pairs wrap around and use a running
/// prefix maximum of `w[i] + i`. `None` for fewer than two entries.
pub fn max_pair_on_ring(w: &[u64], ring_len: u64) -> Option<u64> {
    if w.len() < 2 {
        return None;
    }
    debug_assert!(ring_len >= w.len() as u64 - 1);
    let half = (ring_len / 2) as usize;
    let ring = ring_len as i64;
    let mut window: VecDeque<usize> = VecDeque::new();
    let mut wrapped: Option<i64> = None;
    let mut best = i64::MIN;
    for j in 1..w.len() {
        let near_key = |i: usize| w[i] as i64 - i as i64;
        let i = j - 1;
        while window.back().is_some_and(|&b| near_key(b) <= near_key(i)) {
            window.pop_back();
        }
        window.push_back(i);
        while window.front().is_some_and(|&f| j - f > half) {
            window.pop_front();
        }
        if j > half {
            let far = j - half - 1;
            let key = w[far] as i64 + far as i64;
            wrapped = Some(wrapped.map_or(key, |k| k.max(key)));
        }
        let wj = w[j] as i64;
        if let Some(&f) = window.front() {
            best = best.max(near_key(f) + wj + j as i64);
        }
        if let Some(k) = wrapped {
            best = best.max(k + wj - j as i64 + ring);
        }
    }
    Some(best as u64)
}

/// Largest `w[k] + min(k, len - k)`: how far the anchor `x0` of a pending
/// cycle `x0..x_{len-1}` must reach into it.
pub fn cycle_anchor_reach(w: &[u64]) -> u64 {
    let len = w.len();
    w.iter()
        .enumerate()
        .map(|(k, &wk)| wk + k.min(len - k) as u64)
        .max()
        .unwrap_or(0)
}

/// Interior pairs of one maximal path `x0..xa`: the maximum over
/// `0 < i < j < a` of `pen(x_i) + min(j - i, i + endpoint_distance + a - j) + pen(x_j)`.
/// `interior_pen` holds `pen(x_1) .. pen(x_{a-1})`.
pub fn same_path_sweep(interior_pen: &[u64], endpoint_distance: u64) -> Option<u64> {
    let a = interior_pen.len() as u64 + 1;
    max_pair_on_ring(interior_pen, a + endpoint_distance)
}

/// Graph distances between the endpoints of two maximal paths
/// `x0..xa` and `y0..yb`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EndpointDistances {
    pub x0_y0: u64,
    pub x0_yb: u64,
    pub xa_y0: u64,
    pub xa_yb: u64,
}

/// Precomputed running maxima over the interior of one path `x0..xa`, so
/// that the farthest interior vertex from any outside point is O(1).
#[derive(Debug, Clone)]
pub struct PathProfile {
    a: usize,
    /// `via_start[i]` = max over `1 <= i' <= i` of `pen(x_i') + i'`.
    via_start: Vec<i64>,
    /// `via_end[i]` = max over `i <= i' <= a - 1` of `pen(x_i') - i'`.
    via_end: Vec<i64>,
}

impl PathProfile {
    pub fn new(interior_pen: &[u64]) -> Self {
        let a = interior_pen.len() + 1;
        let mut via_start = vec![i64::MIN; a + 1];
        let mut via_end = vec![i64::MIN; a + 1];
        for i in 1..a {
            let key = interior_pen[i - 1] as i64 + i as i64;
            via_start[i] = via_start[i - 1].max(key);
        }
        for i in (1..a).rev() {
            let key = interior_pen[i - 1] as i64 - i as i64;
            via_end[i] = via_end[i + 1].max(key);
        }
        Self {
            a,
            via_start,
            via_end,
        }
    }

    pub fn length(&self) -> usize {
        self.a
    }

    pub fn has_interior(&self) -> bool {
        self.a >= 2
    }

    /// Max over interior `x_i` of `pen(x_i) + min(i + to_start, a - i + to_end)`
    /// where `to_start`/`to_end` are the distances from some target to `x0`/`xa`.
    ///
    /// The route through `x0` wins exactly for `i <= (a + to_end - to_start) / 2`.
    pub fn farthest(&self, to_start: u64, to_end: u64) -> Option<i64> {
        if !self.has_interior() {
            return None;
        }
        let a = self.a as i64;
        let split = (a + to_end as i64 - to_start as i64).div_euclid(2);
        let last = a - 1;
        let mut best = None;
        if split >= 1 {
            let t = split.min(last) as usize;
            best = Some(self.via_start[t] + to_start as i64);
        }
        if split < last {
            let t = (split + 1).max(1) as usize;
            let alt = self.via_end[t] + a + to_end as i64;
            best = Some(best.map_or(alt, |b: i64| b.max(alt)));
        }
        best
    }
}

/// Interior pairs of two different maximal paths `x0..xa` and `y0..yb`: the
/// maximum over interior `i`, `j` of `pen(x_i) + D(i, j) + pen(y_j)` with
/// `D(i, j)` the shortest of the four endpoint-to-endpoint routes.
pub fn path_pair_sweep(
    first: &PathProfile,
    second_interior_pen: &[u64],
    ends: EndpointDistances,
) -> Option<u64> {
    if !first.has_interior() || second_interior_pen.is_empty() {
        return None;
    }
    let b = second_interior_pen.len() as u64 + 1;
    let mut best = i64::MIN;
    for (idx, &pen_y) in second_interior_pen.iter().enumerate() {
        let j = idx as u64 + 1;
        let to_x0 = (ends.x0_y0 + j).min(ends.x0_yb + b - j);
        let to_xa = (ends.xa_y0 + j).min(ends.xa_yb + b - j);
        if let Some(far) = first.farthest(to_x0, to_xa) {
            best = best.max(far + pen_y as i64);
        }
    }
    Some(best as u64)
}
