//! Lengths 3 to 7 by direct search, preferring cycles with at most four chords.

use std::collections::BTreeMap;

use crate::certificate::CycleCertificate;
use crate::finder::search::{find_cycle_with_chords, SearchOutcome};
use crate::finder::{MissingLength, MissingReason};
use crate::graph::{CycleLabeling, Graph};

pub(crate) const TINY_MAX: usize = 7;
const TINY_BUDGET: u64 = 20_000_000;

/// One tiny length in label space.
pub(crate) fn tiny_cycle_labeled(
    h: &Graph,
    t: usize,
    bipartite: bool,
) -> Result<CycleCertificate, MissingReason> {
    let n = h.n();
    if t % 2 == 1 && bipartite {
        return Err(MissingReason::NoOddCycle);
    }
    if t == 3 {
        return h
            .find_triangle()
            .map(|tri| CycleCertificate::from_cycle(tri.to_vec(), n))
            .ok_or(MissingReason::StageFailure("tiny".into()));
    }
    let mut exceeded = false;
    for max_chords in [4, t] {
        match find_cycle_with_chords(h, t, max_chords, TINY_BUDGET) {
            (SearchOutcome::Found, Some(c)) => return Ok(CycleCertificate::from_cycle(c, n)),
            (SearchOutcome::BudgetExceeded, _) => exceeded = true,
            _ => {}
        }
        if t <= 4 {
            break;
        }
    }
    Err(MissingReason::StageFailure(
        if exceeded { "tiny-budget" } else { "tiny" }.into(),
    ))
}

/// Certificates for every `t ∈ {3, ..., 7}` present in `g`; lengths above `n`
/// are skipped and the Hamilton length comes from the labeling itself.
pub fn find_tiny_cycles(
    g: &Graph,
    labeling: &CycleLabeling,
) -> (BTreeMap<usize, CycleCertificate>, Vec<MissingLength>) {
    let h = labeling.relabel(g);
    let n = h.n();
    let bipartite = h.bipartition().is_some();
    let mut found = BTreeMap::new();
    let mut missing = Vec::new();
    for t in 3..=TINY_MAX.min(n) {
        let res = if t == n && labeling.validate(g).is_ok() {
            Ok(CycleCertificate::from_cycle((0..n).collect(), n))
        } else {
            tiny_cycle_labeled(&h, t, bipartite)
        };
        match res {
            Ok(c) => {
                found.insert(t, c);
            }
            Err(reason) => missing.push(MissingLength { t, reason }),
        }
    }
    (found, missing)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::verify_certificate;

    #[test]
    fn complete_graph_on_six() {
        let g = Graph::complete(6).unwrap();
        let id = CycleLabeling::identity(6);
        let (found, missing) = find_tiny_cycles(&g, &id);
        assert!(missing.is_empty());
        assert_eq!(found.keys().copied().collect::<Vec<_>>(), vec![3, 4, 5, 6]);
        for c in found.values() {
            assert!(verify_certificate(&g, &id, c));
            assert!(c.extra_count() <= 4);
        }
    }

    #[test]
    fn bare_cycle_has_no_tiny_lengths() {
        let g = Graph::cycle(30).unwrap();
        let (found, missing) = find_tiny_cycles(&g, &CycleLabeling::identity(30));
        assert!(found.is_empty());
        assert_eq!(missing.len(), 5);
    }

    #[test]
    fn bipartite_misses_odd_lengths() {
        let mut g = Graph::cycle(20).unwrap();
        for (a, b) in [(0, 3), (2, 7), (4, 11), (1, 8)] {
            g.add_edge(a, b);
        }
        let (found, missing) = find_tiny_cycles(&g, &CycleLabeling::identity(20));
        for m in &missing {
            if m.t % 2 == 1 {
                assert_eq!(m.reason, MissingReason::NoOddCycle);
            }
        }
        assert!(found.keys().all(|t| t % 2 == 0));
        assert!(found.contains_key(&4));
    }
}
