//! Geometry of the labeled Hamilton cycle `C_n`: circular distances,
//! directions `E_i` with their order `<=_i`, windows, middles and crossings.
//!
//! Internally a direction is handled in doubled coordinates: vertex `x`
//! sits at `2x` on a circle of circumference `2n`, and the axis of direction
//! `i` passes through the point `i`. Every edge of `E_i` is then `{i - w, i + w}`
//! for a half-width `w` in `1..n` with `w ≡ i (mod 2)`, and `<=_i` is the order
//! by `w`. No two edges of one direction share a half-width, so the order is
//! strict without any tie-breaking.

use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::graph::{is_cycle_edge, Edge, Vertex};

/// `‖k‖`: distance of `k` from `0` around a cycle of length `n`.
pub fn circ_distance(k: i64, n: usize) -> usize {
    let n = n as i64;
    let r = k.rem_euclid(n);
    r.min(n - r) as usize
}

/// The direction `i = x + y mod n` of the edge `{x, y}`.
pub fn direction_of(e: Edge, n: usize) -> usize {
    (e.0 + e.1) % n
}

/// `⌊fraction · n⌋`, but never below 1.
pub fn scaled_len(fraction: f64, n: usize) -> usize {
    ((fraction * n as f64).floor() as usize).max(1)
}

/// Number of edges of `E_i` (loops excluded).
pub fn slice_len(n: usize, i: usize) -> usize {
    if i.is_multiple_of(2) {
        (n - 1) / 2
    } else {
        n / 2
    }
}

fn width_of_rank(i: usize, rank: usize) -> usize {
    if i.is_multiple_of(2) {
        2 * rank + 2
    } else {
        2 * rank + 1
    }
}

fn rank_of_width(i: usize, w: usize) -> usize {
    if i.is_multiple_of(2) {
        w / 2 - 1
    } else {
        (w - 1) / 2
    }
}

/// Doubled-coordinate distance from the axis point `i` to vertex `x`.
fn half_width(i: usize, x: Vertex, n: usize) -> usize {
    let two_n = 2 * n as i64;
    let d = (2 * x as i64 - i as i64).rem_euclid(two_n);
    d.min(two_n - d) as usize
}

/// The edge at 0-based position `rank` of `E_i` under `<=_i`.
pub fn slice_edge(n: usize, i: usize, rank: usize) -> Edge {
    debug_assert!(rank < slice_len(n, i));
    let w = width_of_rank(i, rank) as i64;
    let two_n = 2 * n as i64;
    let a = (i as i64 - w).rem_euclid(two_n) / 2;
    let b = (i as i64 + w).rem_euclid(two_n) / 2;
    Edge::new(a as usize, b as usize)
}

/// Position of `e` inside its own direction.
pub fn rank_in_direction(e: Edge, n: usize) -> usize {
    let i = direction_of(e, n);
    rank_of_width(i, half_width(i, e.0, n))
}

/// Window `E_i^k` (1-based `k`) as a rank range, clamped to the slice end.
pub fn window_ranks(n: usize, i: usize, k: usize, beta: f64) -> Range<usize> {
    let len = slice_len(n, i);
    let start = (k.max(1) - 1).min(len);
    start..(start + scaled_len(beta, n)).min(len)
}

/// `M_i`: the slice without its leftmost and rightmost windows.
pub fn middle_ranks(n: usize, i: usize, beta: f64) -> Range<usize> {
    let len = slice_len(n, i);
    let b = scaled_len(beta, n);
    if len <= 2 * b {
        b..b
    } else {
        b..len - b
    }
}

/// `E_i` materialized in `<=_i` order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectionSlice {
    pub i: usize,
    pub n: usize,
    pub ordered_edges: Vec<Edge>,
}

impl DirectionSlice {
    pub fn new(n: usize, i: usize) -> Self {
        let i = i % n;
        DirectionSlice {
            i,
            n,
            ordered_edges: (0..slice_len(n, i)).map(|r| slice_edge(n, i, r)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.ordered_edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordered_edges.is_empty()
    }

    /// `E_i^k` for 1-based `k`.
    pub fn interval(&self, k: usize, beta: f64) -> &[Edge] {
        &self.ordered_edges[window_ranks(self.n, self.i, k, beta)]
    }

    pub fn middle(&self, beta: f64) -> &[Edge] {
        &self.ordered_edges[middle_ranks(self.n, self.i, beta)]
    }
}

pub fn direction_slice(n: usize, i: usize) -> DirectionSlice {
    DirectionSlice::new(n, i)
}

fn strictly_between(a: Vertex, b: Vertex, x: Vertex) -> bool {
    a < x && x < b
}

/// Two edges cross when their four endpoints are distinct and alternate around `C_n`.
pub fn is_crossing(e1: Edge, e2: Edge, _n: usize) -> bool {
    if e1.shares_endpoint(&e2) {
        return false;
    }
    let (a, b) = (e1.0, e1.1);
    strictly_between(a, b, e2.0) != strictly_between(a, b, e2.1)
}

/// Smallest circular distance between an endpoint of `e1` and one of `e2`.
pub fn min_endpoint_distance(e1: Edge, e2: Edge, n: usize) -> usize {
    e1.endpoints()
        .iter()
        .flat_map(|&x| {
            e2.endpoints()
                .map(move |y| circ_distance(x as i64 - y as i64, n))
        })
        .min()
        .unwrap()
}

/// A crossing is close when some pair of endpoints is within `⌊βn⌋` on the cycle.
pub fn is_close_crossing(e1: Edge, e2: Edge, n: usize, beta: f64) -> bool {
    is_crossing(e1, e2, n) && min_endpoint_distance(e1, e2, n) <= scaled_len(beta, n)
}

/// Ranks of the edges of `E_j` that cross `e`; always a contiguous range.
pub fn crossing_ranks(e: Edge, j: usize, n: usize) -> Range<usize> {
    let da = half_width(j, e.0, n);
    let db = half_width(j, e.1, n);
    let (lo, hi) = (da.min(db), da.max(db));
    // widths w with lo < w < hi, w ≡ j (mod 2), 1 <= w <= n - 1
    let mut first = lo + 1;
    if first % 2 != j % 2 {
        first += 1;
    }
    let top = hi.min(n).saturating_sub(1);
    let mut last = top;
    if last % 2 != j % 2 {
        last = last.saturating_sub(1);
    }
    if first < 1 || first > last || last == 0 {
        return 0..0;
    }
    rank_of_width(j, first)..rank_of_width(j, last) + 1
}

/// Whether `{a, b}` (labels) is a chord, i.e. not an edge of `C_n`.
pub fn is_chord(e: Edge, n: usize) -> bool {
    !is_cycle_edge(e.0, e.1, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn circ_distance_examples() {
        assert_eq!(circ_distance(3, 10), 3);
        assert_eq!(circ_distance(7, 10), 3);
        assert_eq!(circ_distance(0, 10), 0);
        assert_eq!(circ_distance(-3, 10), 3);
    }

    #[test]
    fn direction_examples() {
        assert_eq!(direction_of(Edge::new(2, 5), 10), 7);
        assert_eq!(direction_of(Edge::new(3, 7), 10), 0);
        assert_eq!(direction_of(Edge::new(0, 1), 10), 1);
    }

    #[test]
    fn slice_zero_of_ten() {
        let s = direction_slice(10, 0);
        assert_eq!(
            s.ordered_edges,
            vec![Edge(1, 9), Edge(2, 8), Edge(3, 7), Edge(4, 6)]
        );
        assert_eq!(s.interval(1, 0.2), &[Edge(1, 9), Edge(2, 8)]);
        assert_eq!(s.middle(0.2), &[] as &[Edge]);
        // window clamps at the slice end
        assert_eq!(s.interval(4, 0.2), &[Edge(4, 6)]);
    }

    #[test]
    fn middle_drops_both_ends() {
        let s = direction_slice(20, 0);
        assert_eq!(s.len(), 9);
        let mid = s.middle(0.1);
        assert_eq!(mid.len(), 5);
        assert_eq!(mid[0], s.ordered_edges[2]);
        assert_eq!(*mid.last().unwrap(), s.ordered_edges[6]);
    }

    #[test]
    fn odd_direction_starts_at_cycle_edge() {
        let s = direction_slice(10, 3);
        assert_eq!(s.ordered_edges[0], Edge(1, 2));
        assert_eq!(s.ordered_edges[1], Edge(0, 3));
        assert_eq!(s.len(), 5);
    }

    #[test]
    fn crossing_examples() {
        assert!(is_crossing(Edge(0, 4), Edge(2, 6), 8));
        assert!(!is_crossing(Edge(0, 4), Edge(1, 2), 8));
        assert!(!is_crossing(Edge(0, 4), Edge(4, 6), 8));
    }

    #[test]
    fn close_crossing_examples() {
        assert!(is_close_crossing(Edge(0, 50), Edge(1, 60), 100, 0.05));
        assert!(!is_close_crossing(Edge(0, 50), Edge(20, 70), 100, 0.05));
        assert!(is_close_crossing(Edge(0, 50), Edge(20, 70), 100, 0.25));
    }

    proptest! {
        #[test]
        fn slice_partition_and_order(n in 3usize..60, i_raw in 0usize..60) {
            let i = i_raw % n;
            let s = direction_slice(n, i);
            prop_assert!(s.len() + 1 >= n / 2 && s.len() <= n / 2);
            let mut last = 0;
            for (r, e) in s.ordered_edges.iter().enumerate() {
                prop_assert_eq!(direction_of(*e, n), i);
                prop_assert_eq!(rank_in_direction(*e, n), r);
                let w = half_width(i, e.0, n);
                prop_assert!(w > last);
                last = w;
            }
        }

        #[test]
        fn crossing_ranks_match_scan(n in 4usize..40, a in 0usize..40, b in 0usize..40, j_raw in 0usize..40) {
            let (a, b, j) = (a % n, b % n, j_raw % n);
            prop_assume!(a != b);
            let e = Edge::new(a, b);
            let s = direction_slice(n, j);
            let scanned: Vec<usize> = (0..s.len()).filter(|&r| is_crossing(e, s.ordered_edges[r], n)).collect();
            let range: Vec<usize> = crossing_ranks(e, j, n).collect();
            prop_assert_eq!(scanned, range);
        }

        #[test]
        fn crossing_symmetric_close_monotone(n in 4usize..80, pts in proptest::collection::vec(0usize..80, 4), b1 in 0.01f64..0.16, b2 in 0.01f64..0.16) {
            let p: Vec<usize> = pts.iter().map(|x| x % n).collect();
            prop_assume!(p[0] != p[1] && p[2] != p[3]);
            let e1 = Edge::new(p[0], p[1]);
            let e2 = Edge::new(p[2], p[3]);
            prop_assert_eq!(is_crossing(e1, e2, n), is_crossing(e2, e1, n));
            let (lo, hi) = if b1 < b2 { (b1, b2) } else { (b2, b1) };
            if is_close_crossing(e1, e2, n, lo) {
                prop_assert!(is_close_crossing(e1, e2, n, hi));
            }
        }
    }
}
