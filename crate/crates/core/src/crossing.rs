//! Crossing pairs: two chords from directions `i` and `i + l` whose endpoints
//! alternate around `C_n`. With `C_n` they close cycles of lengths `l + 2`
//! and `n - l + 2`.

use serde::{Deserialize, Serialize};

use crate::certificate::{clockwise, CycleCertificate};
use crate::error::{Error, Result};
use crate::geometry::{direction_of, is_close_crossing, is_crossing, min_endpoint_distance};
use crate::graph::Edge;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CrossingPair {
    pub e1: Edge,
    pub e2: Edge,
    /// Direction of `e1`.
    pub i: usize,
    /// `e2` lies in `E_{i+l}`.
    pub l: usize,
    pub close: bool,
    /// Closeness parameter the `close` flag was computed with.
    pub beta: f64,
}

impl CrossingPair {
    pub fn new(e1: Edge, e2: Edge, n: usize, beta: f64) -> Result<Self> {
        if !is_crossing(e1, e2, n) {
            return Err(Error::NotCrossing(e1, e2));
        }
        let i = direction_of(e1, n);
        let l = (direction_of(e2, n) + n - i) % n;
        Ok(CrossingPair {
            e1,
            e2,
            i,
            l,
            close: is_close_crossing(e1, e2, n, beta),
            beta,
        })
    }

    pub fn min_distance(&self, n: usize) -> usize {
        min_endpoint_distance(self.e1, self.e2, n)
    }
}

fn rotate_to(mut cycle: Vec<usize>, first: usize) -> Vec<usize> {
    if let Some(pos) = cycle.iter().position(|&x| x == first) {
        cycle.rotate_left(pos);
    }
    cycle
}

/// Returns the `(l + 2)`-cycle and the `(n - l + 2)`-cycle of `C_n ∪ {e1, e2}`.
pub fn cycles_from_crossing(
    cp: &CrossingPair,
    n: usize,
) -> Result<(CycleCertificate, CycleCertificate)> {
    if !is_crossing(cp.e1, cp.e2, n) {
        return Err(Error::NotCrossing(cp.e1, cp.e2));
    }
    if direction_of(cp.e1, n) != cp.i % n || direction_of(cp.e2, n) != (cp.i + cp.l) % n {
        return Err(Error::param(
            "crossing",
            format!(
                "directions of {} and {} do not match i = {}, l = {}",
                cp.e1, cp.e2, cp.i, cp.l
            ),
        ));
    }
    // x -> y and x' -> y' are the two clockwise arcs leading from e1 to e2;
    // their lengths sum to l.
    let (x, x2) = (cp.e1.0, cp.e1.1);
    let off = |p: usize| (p + n - x) % n;
    let (y, y2) = if off(cp.e2.0) < off(cp.e2.1) {
        (cp.e2.0, cp.e2.1)
    } else {
        (cp.e2.1, cp.e2.0)
    };

    let mut short = clockwise(x, y, n);
    short.extend(clockwise(x2, y2, n).into_iter().rev());
    let mut long = clockwise(y, x2, n);
    long.extend(clockwise(y2, x, n).into_iter().rev());

    let short = rotate_to(short, x2);
    let long = rotate_to(long, y2);
    debug_assert_eq!(short.len(), cp.l + 2);
    debug_assert_eq!(long.len(), n - cp.l + 2);
    Ok((
        CycleCertificate::from_cycle(short, n),
        CycleCertificate::from_cycle(long, n),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::verify_certificate;
    use crate::graph::{CycleLabeling, Graph};
    use crate::testutil::cycle_lengths;
    use proptest::prelude::*;

    fn host(cp: &CrossingPair, n: usize) -> Graph {
        let mut g = Graph::cycle(n).unwrap();
        g.add_edge(cp.e1.0, cp.e1.1);
        g.add_edge(cp.e2.0, cp.e2.1);
        g
    }

    #[test]
    fn ten_vertex_example() {
        let cp = CrossingPair::new(Edge(1, 9), Edge(0, 3), 10, 0.1).unwrap();
        assert_eq!((cp.i, cp.l), (0, 3));
        let (short, long) = cycles_from_crossing(&cp, 10).unwrap();
        assert_eq!(short.vertices, vec![9, 1, 2, 3, 0]);
        assert_eq!(long.vertices, vec![0, 3, 4, 5, 6, 7, 8, 9, 1]);
        let g = host(&cp, 10);
        let id = CycleLabeling::identity(10);
        assert!(verify_certificate(&g, &id, &short));
        assert!(verify_certificate(&g, &id, &long));
        assert!(short.extra_count() <= 2 && long.extra_count() <= 2);
    }

    #[test]
    fn half_offset_gives_equal_lengths() {
        // n = 12, l = 6
        let e1 = Edge(1, 11); // direction 0
        let e2 = Edge(0, 6); // direction 6
        let cp = CrossingPair::new(e1, e2, 12, 0.1).unwrap();
        assert_eq!(cp.l, 6);
        let (a, b) = cycles_from_crossing(&cp, 12).unwrap();
        assert_eq!((a.t, b.t), (8, 8));
    }

    #[test]
    fn non_crossing_rejected() {
        assert!(CrossingPair::new(Edge(0, 4), Edge(1, 2), 8, 0.1).is_err());
        let bogus = CrossingPair {
            e1: Edge(0, 4),
            e2: Edge(1, 2),
            i: 4,
            l: 3,
            close: false,
            beta: 0.1,
        };
        assert!(cycles_from_crossing(&bogus, 8).is_err());
    }

    #[test]
    fn brute_force_agrees_small_n() {
        for n in 4..=11 {
            for a in 0..n {
                for b in a + 2..n {
                    for c in 0..n {
                        for d in c + 2..n {
                            let (e1, e2) = (Edge(a, b), Edge(c, d));
                            let Ok(cp) = CrossingPair::new(e1, e2, n, 0.1) else {
                                continue;
                            };
                            let g = host(&cp, n);
                            let lens = cycle_lengths(&g);
                            let (s, l) = cycles_from_crossing(&cp, n).unwrap();
                            assert!(lens.contains(&s.t) && lens.contains(&l.t));
                            assert_eq!((s.t, l.t), (cp.l + 2, n - cp.l + 2));
                        }
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn lengths_are_exact(n in 4usize..200, pts in proptest::collection::vec(0usize..200, 4)) {
            let p: Vec<usize> = pts.iter().map(|x| x % n).collect();
            prop_assume!(p[0] != p[1] && p[2] != p[3]);
            let (e1, e2) = (Edge::new(p[0], p[1]), Edge::new(p[2], p[3]));
            prop_assume!(is_crossing(e1, e2, n));
            let cp = CrossingPair::new(e1, e2, n, 0.1).unwrap();
            prop_assert!((2..=n - 2).contains(&cp.l));
            let (a, b) = cycles_from_crossing(&cp, n).unwrap();
            prop_assert_eq!(a.t, cp.l + 2);
            prop_assert_eq!(b.t, n - cp.l + 2);
            let g = host(&cp, n);
            let id = CycleLabeling::identity(n);
            prop_assert!(verify_certificate(&g, &id, &a));
            prop_assert!(verify_certificate(&g, &id, &b));
        }
    }
}
