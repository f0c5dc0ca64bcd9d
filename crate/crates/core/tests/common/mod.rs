//! Exhaustive oracles for small graphs.

#![allow(dead_code)]

use std::collections::BTreeSet;

use pancyclic::geometry::is_chord;
use pancyclic::{CycleLabeling, Edge, Graph};

/// Lengths of simple cycles of `g` that use at most `max_chords` edges off the
/// labeled Hamilton cycle. `usize::MAX` gives the full cycle spectrum.
pub fn lengths_with_chords(
    g: &Graph,
    labeling: &CycleLabeling,
    max_chords: usize,
) -> BTreeSet<usize> {
    let h = labeling.relabel(g);
    let n = h.n();
    let mut found = BTreeSet::new();
    let mut on_path = vec![false; n];

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        h: &Graph,
        start: usize,
        v: usize,
        depth: usize,
        chords: usize,
        max_chords: usize,
        on_path: &mut [bool],
        found: &mut BTreeSet<usize>,
    ) {
        let n = h.n();
        for w in h.neighbors(v) {
            let c = chords + usize::from(is_chord(Edge::new(v, w), n));
            if c > max_chords {
                continue;
            }
            if w == start && depth >= 3 {
                found.insert(depth);
            } else if w > start && !on_path[w] {
                on_path[w] = true;
                dfs(h, start, w, depth + 1, c, max_chords, on_path, found);
                on_path[w] = false;
            }
        }
    }
    for s in 0..n {
        on_path[s] = true;
        dfs(&h, s, s, 1, 0, max_chords, &mut on_path, &mut found);
        on_path[s] = false;
    }
    found
}

pub fn cycle_lengths(g: &Graph) -> BTreeSet<usize> {
    lengths_with_chords(g, &CycleLabeling::identity(g.n()), usize::MAX)
}
