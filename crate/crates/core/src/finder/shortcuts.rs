//! Search for an `l`-shortcut inside a labeled graph.
//!
//! Every shortcut is determined by its pair `(i1, i2)`: the remaining points
//! `i3, i3+1, i4, i4+l+1` all lie on the arc `A` running from `i2+2` to
//! `i1-1`. For a fixed pair we collect the admissible `i4` positions (set `B`)
//! and the admissible `i3` positions (set `C`) along `A`, and a shortcut exists
//! iff some `i3 ∈ C` sits entirely before `i4` (variant I) or after
//! `i4+l+1` (variant II). That makes the per-pair test linear in `n`.
//!
//! Pairs are tried in two passes. The first follows the degree structure a
//! dense graph must have: even positions `2i` whose consecutive pair
//! `{2i, 2i+1}` has large total degree, bucketed by `deg(2i)` and clustered
//! along the cycle. The second pass visits every pair and is therefore
//! complete.

use crate::graph::{is_cycle_edge, Graph};
use crate::shortcut::{validate_shortcut, Shortcut, Variant};

/// First shortcut found in `h` (label space) with gap `l`, if any.
pub fn find_shortcut_labeled(h: &Graph, l: usize) -> Option<Shortcut> {
    let n = h.n();
    if n < 8 + l || 2 * l > n {
        return None;
    }
    let chord_deg: Vec<usize> = (0..n)
        .map(|v| h.neighbors(v).filter(|&w| !is_cycle_edge(v, w, n)).count())
        .collect();
    if chord_deg.iter().sum::<usize>() < 8 {
        return None;
    }
    for (i1, i2) in guided_pairs(h) {
        if let Some(s) = check_pair(h, &chord_deg, i1, i2, l) {
            return Some(s);
        }
    }
    for i1 in 0..n {
        for k in 2..n {
            if let Some(s) = check_pair(h, &chord_deg, i1, (i1 + k) % n, l) {
                return Some(s);
            }
        }
    }
    None
}

/// Candidate pairs `(i1, i2)` drawn from one degree bucket and one short arc.
fn guided_pairs(h: &Graph) -> Vec<(usize, usize)> {
    let n = h.n();
    let pairs = (n * (n - 1) / 2) as f64;
    let slack = (h.edge_count() as f64 / pairs - 0.5).max(0.05);
    let nf = n as f64;
    let heavy: Vec<usize> = (0..n / 2)
        .filter(|&i| (h.degree(2 * i) + h.degree(2 * i + 1)) as f64 >= (1.0 + slack / 2.0) * nf)
        .collect();
    if heavy.len() < 2 {
        return Vec::new();
    }
    let width = (slack * nf / 4.0).max(1.0);
    let mut buckets: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for &i in &heavy {
        buckets
            .entry((h.degree(2 * i) as f64 / width) as usize)
            .or_default()
            .push(i);
    }
    let bucket = buckets
        .into_values()
        .max_by_key(|b| b.len())
        .unwrap_or_default();

    // densest run of bucket members within an arc of length slack·n/16
    let span = ((slack * nf / 16.0) as usize).max(2);
    let (mut best_lo, mut best_len, mut lo) = (0, 0, 0);
    for hi in 0..bucket.len() {
        while 2 * (bucket[hi] - bucket[lo]) > span {
            lo += 1;
        }
        if hi + 1 - lo > best_len {
            best_lo = lo;
            best_len = hi + 1 - lo;
        }
    }
    let cluster = &bucket[best_lo..best_lo + best_len];
    let mut out = Vec::new();
    for (a, &x) in cluster.iter().enumerate() {
        for &y in &cluster[a + 1..] {
            out.push((2 * x, 2 * y));
            out.push((2 * y, 2 * x));
        }
    }
    out
}

fn check_pair(h: &Graph, chord_deg: &[usize], i1: usize, i2: usize, l: usize) -> Option<Shortcut> {
    let n = h.n();
    let k = (i2 + n - i1) % n;
    if k < 2 || n < k + 2 + l + 4 {
        return None;
    }
    let (j1, j2) = ((i1 + 1) % n, (i2 + 1) % n);
    if [i1, j1, i2, j2].iter().any(|&v| chord_deg[v] == 0) {
        return None;
    }
    let arc_len = n - k - 2;
    let at = |q: usize| (i2 + 2 + q) % n;

    let mut c_first = None;
    let mut c_last = None;
    for q in 0..arc_len - 1 {
        if h.has_edge(i1, at(q)) && h.has_edge(j2, at(q + 1)) {
            c_first.get_or_insert(q);
            c_last = Some(q);
        }
    }
    let (c_first, c_last) = (c_first?, c_last?);
    for q4 in 0..arc_len - l - 1 {
        if !(h.has_edge(j1, at(q4)) && h.has_edge(i2, at(q4 + l + 1))) {
            continue;
        }
        let found = if c_first + 2 <= q4 {
            Some(Shortcut::new(Variant::I, [i1, i2, at(c_first), at(q4)], l))
        } else if c_last >= q4 + l + 2 {
            Some(Shortcut::new(Variant::II, [i1, i2, at(c_last), at(q4)], l))
        } else {
            None
        };
        if let Some(s) = found {
            debug_assert!(validate_shortcut(&s, n));
            return Some(s);
        }
    }
    None
}
