//! Brute-force oracles shared by unit tests.

use std::collections::BTreeSet;

use crate::graph::Graph;

/// Every length of a simple cycle in `g`, by exhaustive DFS.
pub fn cycle_lengths(g: &Graph) -> BTreeSet<usize> {
    let n = g.n();
    let mut found = BTreeSet::new();
    let mut on_path = vec![false; n];
    fn dfs(
        g: &Graph,
        start: usize,
        v: usize,
        depth: usize,
        on_path: &mut [bool],
        found: &mut BTreeSet<usize>,
    ) {
        for w in g.neighbors(v) {
            if w == start && depth >= 3 {
                found.insert(depth);
            } else if w > start && !on_path[w] {
                on_path[w] = true;
                dfs(g, start, w, depth + 1, on_path, found);
                on_path[w] = false;
            }
        }
    }
    for s in 0..n {
        on_path[s] = true;
        dfs(g, s, s, 1, &mut on_path, &mut found);
        on_path[s] = false;
    }
    found
}

/// Length of the longest simple path starting at `v`, in edges.
pub fn longest_path_from(g: &Graph, v: usize) -> usize {
    fn dfs(g: &Graph, v: usize, seen: &mut [bool]) -> usize {
        let mut best = 0;
        for w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                best = best.max(1 + dfs(g, w, seen));
                seen[w] = false;
            }
        }
        best
    }
    let mut seen = vec![false; g.n()];
    seen[v] = true;
    dfs(g, v, &mut seen)
}
