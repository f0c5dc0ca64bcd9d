//! Edge-deleting adversaries that keep the planted Hamilton cycle.
//!
//! All of them work in label space: `C_n` is `{i, i+1}` after relabeling, and
//! the result is mapped back to the caller's vertex names.

use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::is_chord;
use crate::graph::{CycleLabeling, Edge, Graph};
use crate::random::RngSeed;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AdversaryKind {
    TriangleBreaker,
    BipartiteEven,
    NearBipartiteOdd,
    UniformThin,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AdversarySpec {
    pub kind: AdversaryKind,
    /// Only read by `UniformThin`.
    #[serde(default = "keep_all")]
    pub keep_fraction: f64,
}

fn keep_all() -> f64 {
    1.0
}

impl AdversarySpec {
    pub fn new(kind: AdversaryKind) -> Self {
        AdversarySpec {
            kind,
            keep_fraction: 1.0,
        }
    }

    pub fn uniform_thin(keep_fraction: f64) -> Self {
        AdversarySpec {
            kind: AdversaryKind::UniformThin,
            keep_fraction,
        }
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        if !(self.keep_fraction > 0.0 && self.keep_fraction <= 1.0) {
            return Err(Error::param(
                "keep",
                format!("must lie in (0, 1], got {}", self.keep_fraction),
            ));
        }
        match self.kind {
            AdversaryKind::BipartiteEven if n % 2 == 1 => Err(Error::param(
                "adversary",
                format!("bipartite_even needs even n, got {n}"),
            )),
            AdversaryKind::NearBipartiteOdd if n.is_multiple_of(2) => Err(Error::param(
                "adversary",
                format!("near_bipartite_odd needs odd n, got {n}"),
            )),
            _ => Ok(()),
        }
    }
}

/// The JSON log line written for every adversary run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AdversaryRecord {
    pub kind: AdversaryKind,
    pub removed: usize,
    pub kept: usize,
    pub seed: u64,
}

/// Deletes one chord from every triangle, scanning vertex triples in
/// lexicographic order of labels and always removing the largest chord.
pub fn adversary_triangle_breaker(g: &Graph, labeling: &CycleLabeling) -> Graph {
    let mut h = labeling.relabel(g);
    let n = h.n();
    let words = h.row(0).len();
    let mut common = vec![0u64; words];
    for a in 0..n {
        let bs: Vec<usize> = h.neighbors(a).filter(|&b| b > a).collect();
        for b in bs {
            if !h.has_edge(a, b) {
                continue;
            }
            for (w, slot) in common.iter_mut().enumerate() {
                *slot = h.row(a)[w] & h.row(b)[w];
            }
            let cs: Vec<usize> = crate::graph::iter_bits(&common)
                .filter(|&c| c > b)
                .collect();
            for c in cs {
                if !(h.has_edge(a, b) && h.has_edge(a, c) && h.has_edge(b, c)) {
                    continue;
                }
                // {a,b} < {a,c} < {b,c} lexicographically
                let victim = [Edge(b, c), Edge(a, c), Edge(a, b)]
                    .into_iter()
                    .find(|e| is_chord(*e, n));
                match victim {
                    Some(e) => {
                        h.remove_edge(e.0, e.1);
                        if e == Edge(a, b) {
                            break;
                        }
                    }
                    None => continue, // C_3 itself
                }
            }
        }
    }
    labeling.unlabel(&h)
}

/// Removes every edge inside a colour class of the proper 2-colouring of `C_n`.
pub fn adversary_bipartite_even(g: &Graph, labeling: &CycleLabeling) -> Result<Graph> {
    let n = g.n();
    if n % 2 == 1 {
        return Err(Error::param(
            "adversary",
            format!("bipartite_even needs even n, got {n}"),
        ));
    }
    let mut out = g.clone();
    for Edge(u, v) in g.edges() {
        if labeling.label(u) % 2 == labeling.label(v) % 2 {
            out.remove_edge(u, v);
        }
    }
    Ok(out)
}

/// For odd `n`: colours labels by parity, so `e = {0, n-1}` is the only
/// monochromatic cycle edge. Keeps `e`, drops the rest of the inside of both
/// classes, and cuts `0` and `n-1` down to their cycle edges.
pub fn adversary_near_bipartite_odd(g: &Graph, labeling: &CycleLabeling) -> Result<Graph> {
    let n = g.n();
    if n.is_multiple_of(2) {
        return Err(Error::param(
            "adversary",
            format!("near_bipartite_odd needs odd n, got {n}"),
        ));
    }
    let (x, y) = (0, n - 1);
    let keep_at_xy = [Edge(0, n - 1), Edge(0, 1), Edge(n - 2, n - 1)];
    let mut out = g.clone();
    for Edge(u, v) in g.edges() {
        let e = Edge::new(labeling.label(u), labeling.label(v));
        let touches = e.contains(x) || e.contains(y);
        let drop = if touches {
            !keep_at_xy.contains(&e)
        } else {
            e.0 % 2 == e.1 % 2
        };
        if drop {
            out.remove_edge(u, v);
        }
    }
    Ok(out)
}

/// Keeps `C_n` and a uniformly random set of chords so that the result has
/// `max(n, ⌈keep · e(G)⌉)` edges. For a fixed seed the kept chord sets are
/// nested in `keep`.
pub fn adversary_uniform_thin(
    g: &Graph,
    labeling: &CycleLabeling,
    keep_fraction: f64,
    seed: RngSeed,
) -> Result<Graph> {
    if !(keep_fraction > 0.0 && keep_fraction <= 1.0) {
        return Err(Error::param(
            "keep",
            format!("must lie in (0, 1], got {keep_fraction}"),
        ));
    }
    let n = g.n();
    let mut chords: Vec<Edge> = Vec::new();
    let mut out = Graph::empty(n)?;
    for Edge(u, v) in g.edges() {
        let e = Edge::new(labeling.label(u), labeling.label(v));
        if is_chord(e, n) {
            chords.push(Edge(u, v));
        } else {
            out.add_edge(u, v);
        }
    }
    let target = ((keep_fraction * g.edge_count() as f64).ceil() as usize)
        .max(n)
        .min(g.edge_count());
    chords.shuffle(&mut seed.rng());
    for Edge(u, v) in chords
        .into_iter()
        .take(target.saturating_sub(out.edge_count()))
    {
        out.add_edge(u, v);
    }
    Ok(out)
}

/// Runs the adversary described by `spec` and reports what it removed.
pub fn apply_adversary(
    spec: &AdversarySpec,
    g: &Graph,
    labeling: &CycleLabeling,
    seed: RngSeed,
) -> Result<(Graph, AdversaryRecord)> {
    spec.validate(g.n())?;
    let out = match spec.kind {
        AdversaryKind::TriangleBreaker => adversary_triangle_breaker(g, labeling),
        AdversaryKind::BipartiteEven => adversary_bipartite_even(g, labeling)?,
        AdversaryKind::NearBipartiteOdd => adversary_near_bipartite_odd(g, labeling)?,
        AdversaryKind::UniformThin => {
            adversary_uniform_thin(g, labeling, spec.keep_fraction, seed)?
        }
    };
    let record = AdversaryRecord {
        kind: spec.kind,
        removed: g.edge_count() - out.edge_count(),
        kept: out.edge_count(),
        seed: seed.seed,
    };
    Ok((out, record))
}
