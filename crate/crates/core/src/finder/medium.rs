//! Medium lengths through crossing pairs, and the goodness test for directions.

use std::ops::Range;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::certificate::CycleCertificate;
use crate::crossing::{cycles_from_crossing, CrossingPair};
use crate::error::{Error, Result};
use crate::geometry::{
    crossing_ranks, is_close_crossing, middle_ranks, scaled_len, slice_edge, slice_len,
};
use crate::graph::{CycleLabeling, Graph};

/// Prefix counts of present edges along every direction, indexed by rank.
#[derive(Clone, Debug)]
pub struct SliceCounts {
    n: usize,
    offsets: Vec<usize>,
    prefix: Vec<u32>,
}

impl SliceCounts {
    /// `h` is in label space.
    pub fn new(h: &Graph) -> Self {
        let n = h.n();
        let mut offsets = Vec::with_capacity(n + 1);
        let mut prefix = Vec::new();
        for i in 0..n {
            offsets.push(prefix.len());
            let mut acc = 0u32;
            prefix.push(0);
            for r in 0..slice_len(n, i) {
                let e = slice_edge(n, i, r);
                acc += u32::from(h.has_edge(e.0, e.1));
                prefix.push(acc);
            }
        }
        offsets.push(prefix.len());
        SliceCounts { n, offsets, prefix }
    }

    fn row(&self, i: usize) -> &[u32] {
        &self.prefix[self.offsets[i]..self.offsets[i + 1]]
    }

    /// Number of present edges of `E_i` with rank in `ranks`.
    pub fn count(&self, i: usize, ranks: Range<usize>) -> usize {
        let row = self.row(i % self.n);
        (row[ranks.end] - row[ranks.start]) as usize
    }

    /// Smallest present rank of `E_i` inside `ranks`.
    pub fn first_present(&self, i: usize, ranks: Range<usize>) -> Option<usize> {
        if ranks.is_empty() || self.count(i, ranks.clone()) == 0 {
            return None;
        }
        let row = self.row(i % self.n);
        let base = row[ranks.start];
        // first r with row[r + 1] > base
        let off = row[ranks.start + 1..=ranks.end].partition_point(|&c| c <= base);
        Some(ranks.start + off)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoodDirections {
    pub good: Vec<bool>,
    pub bad_count: usize,
}

impl GoodDirections {
    pub fn is_good(&self, i: usize) -> bool {
        self.good[i % self.good.len()]
    }
}

fn within_band(count: usize, size: usize, p: f64, eps_prime: f64) -> bool {
    let expected = size as f64 * p;
    (count as f64 - expected).abs() <= eps_prime * expected + 1e-9
}

fn check_goodness_params(beta: f64, eps_prime: f64, p: f64) -> Result<()> {
    if !(beta > 0.0 && beta < 1.0 / 6.0) {
        return Err(Error::param(
            "beta",
            format!("must lie in (0, 1/6), got {beta}"),
        ));
    }
    if !(eps_prime > 0.0 && eps_prime < 1.0) {
        return Err(Error::param(
            "eps_prime",
            format!("must lie in (0, 1), got {eps_prime}"),
        ));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::param("p", format!("must lie in [0, 1], got {p}")));
    }
    Ok(())
}

/// A direction is good when each full window `E_i^k`, `1 <= k <= (1/2 - β)n`,
/// and the middle `M_i` hold `(1 ± ε′)` times their size times `p` edges.
pub fn good_directions(
    g: &Graph,
    labeling: &CycleLabeling,
    beta: f64,
    eps_prime: f64,
    p: f64,
) -> Result<GoodDirections> {
    check_goodness_params(beta, eps_prime, p)?;
    let h = labeling.relabel(g);
    Ok(good_directions_labeled(
        &SliceCounts::new(&h),
        beta,
        eps_prime,
        p,
    ))
}

pub(crate) fn good_directions_labeled(
    counts: &SliceCounts,
    beta: f64,
    eps_prime: f64,
    p: f64,
) -> GoodDirections {
    let n = counts.n;
    let b = scaled_len(beta, n);
    let k_max = ((0.5 - beta) * n as f64).floor() as usize;
    let good: Vec<bool> = (0..n)
        .into_par_iter()
        .map(|i| {
            let len = slice_len(n, i);
            let windows_ok = (1..=k_max.max(1))
                .take_while(|&k| k - 1 + b <= len)
                .all(|k| within_band(counts.count(i, k - 1..k - 1 + b), b, p, eps_prime));
            let mid = middle_ranks(n, i, beta);
            windows_ok && within_band(counts.count(i, mid.clone()), mid.len(), p, eps_prime)
        })
        .collect();
    let bad_count = good.iter().filter(|&&x| !x).count();
    GoodDirections { good, bad_count }
}

/// Everything the crossing search needs for one labeled graph.
pub struct MediumSearch {
    h: Graph,
    counts: SliceCounts,
    good: GoodDirections,
    beta: f64,
}

impl MediumSearch {
    pub fn new(h: Graph, beta: f64, eps_prime: f64, p: f64) -> Self {
        let counts = SliceCounts::new(&h);
        let good = good_directions_labeled(&counts, beta, eps_prime, p);
        MediumSearch {
            h,
            counts,
            good,
            beta,
        }
    }

    pub fn good(&self) -> &GoodDirections {
        &self.good
    }

    /// A crossing pair `e1 ∈ E_i`, `e2 ∈ E_{i+l}` with `l = t - 2`. Close
    /// crossings between good directions are tried first, then any crossing.
    pub fn find_crossing(&self, t: usize) -> Option<CrossingPair> {
        let n = self.h.n();
        if t < 4 || t > n {
            return None;
        }
        let l = t - 2;
        let b = scaled_len(self.beta, n);
        for i in 0..n {
            let j = (i + l) % n;
            if !(self.good.is_good(i) && self.good.is_good(j)) {
                continue;
            }
            let mid = middle_ranks(n, i, self.beta);
            let mut r = mid.start;
            while let Some(r1) = self.counts.first_present(i, r..mid.end) {
                r = r1 + 1;
                let e1 = slice_edge(n, i, r1);
                let cross = crossing_ranks(e1, j, n);
                let left = cross.start..(cross.start + b).min(cross.end);
                let right = cross.end.saturating_sub(b).max(cross.start)..cross.end;
                for side in [left, right] {
                    let mut s = side.start;
                    while let Some(r2) = self.counts.first_present(j, s..side.end) {
                        s = r2 + 1;
                        let e2 = slice_edge(n, j, r2);
                        if is_close_crossing(e1, e2, n, self.beta) {
                            return CrossingPair::new(e1, e2, n, self.beta).ok();
                        }
                    }
                }
            }
        }
        for i in 0..n {
            let j = (i + l) % n;
            let len = slice_len(n, i);
            let mut r = 0;
            while let Some(r1) = self.counts.first_present(i, r..len) {
                r = r1 + 1;
                let e1 = slice_edge(n, i, r1);
                if let Some(r2) = self.counts.first_present(j, crossing_ranks(e1, j, n)) {
                    return CrossingPair::new(e1, slice_edge(n, j, r2), n, self.beta).ok();
                }
            }
        }
        None
    }

    /// Certificate of length `t` from the first crossing found.
    pub fn find(&self, t: usize) -> Option<CycleCertificate> {
        let cp = self.find_crossing(t)?;
        let (short, _) = cycles_from_crossing(&cp, self.h.n()).ok()?;
        debug_assert_eq!(short.t, t);
        Some(short)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::verify_certificate;

    #[test]
    fn first_present_scans_prefix() {
        let mut h = Graph::cycle(12).unwrap();
        h.add_edge(0, 4);
        let c = SliceCounts::new(&h);
        // direction 4 holds {1,3}, {0,4}, {11,5}, ...
        assert_eq!(c.count(4, 0..slice_len(12, 4)), 1);
        assert_eq!(c.first_present(4, 0..5), Some(1));
        assert_eq!(c.first_present(4, 2..5), None);
        // odd directions start with a cycle edge
        assert_eq!(c.first_present(5, 0..6), Some(0));
    }

    #[test]
    fn complete_graph_all_good() {
        for n in [30, 31, 60] {
            let g = Graph::complete(n).unwrap();
            let gd = good_directions(&g, &CycleLabeling::identity(n), 0.1, 0.05, 1.0).unwrap();
            assert_eq!(gd.bad_count, 0);
        }
    }

    #[test]
    fn empty_graph_all_bad() {
        let g = Graph::empty(40).unwrap();
        let gd = good_directions(&g, &CycleLabeling::identity(40), 0.1, 0.1, 0.3).unwrap();
        assert_eq!(gd.bad_count, 40);
        assert!(good_directions(&g, &CycleLabeling::identity(40), 0.2, 0.1, 0.3).is_err());
    }

    #[test]
    fn complete_graph_medium_lengths() {
        let n = 40;
        let h = Graph::complete(n).unwrap();
        let ms = MediumSearch::new(h.clone(), 0.05, 0.1, 1.0);
        let id = CycleLabeling::identity(n);
        for t in 4..=n {
            let c = ms.find(t).unwrap();
            assert_eq!(c.t, t);
            assert!(verify_certificate(&h, &id, &c));
            assert!(c.extra_count() <= 2);
        }
        let ms = MediumSearch::new(Graph::cycle(n).unwrap(), 0.05, 0.1, 0.5);
        assert!(ms.find(20).is_none());
    }
}
