use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::geometry::is_chord;
use crate::graph::{CycleLabeling, Edge, Graph};

/// A cycle of length `t`, given as a sequence of labels in `Z_n`, together with
/// the edges it uses that are not on `C_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleCertificate {
    pub t: usize,
    pub vertices: Vec<usize>,
    pub extra_edges: Vec<Edge>,
}

impl CycleCertificate {
    /// Wraps a closed walk given by its vertex sequence and records its chords.
    pub fn from_cycle(vertices: Vec<usize>, n: usize) -> Self {
        let extra_edges = chords_of(&vertices, n);
        CycleCertificate {
            t: vertices.len(),
            vertices,
            extra_edges,
        }
    }

    pub fn extra_count(&self) -> usize {
        self.extra_edges.len()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }
}

fn chords_of(vertices: &[usize], n: usize) -> Vec<Edge> {
    let t = vertices.len();
    let mut out: Vec<Edge> = (0..t)
        .filter_map(|k| {
            let (a, b) = (vertices[k], vertices[(k + 1) % t]);
            (a != b)
                .then(|| Edge::new(a, b))
                .filter(|e| is_chord(*e, n))
        })
        .collect();
    out.sort();
    out
}

/// Inclusive clockwise walk `from, from+1, ..., to` around `Z_n`.
pub(crate) fn clockwise(from: usize, to: usize, n: usize) -> Vec<usize> {
    let len = (to + n - from) % n + 1;
    (0..len).map(|k| (from + k) % n).collect()
}

/// Checks that `cert` is a cycle of length `cert.t` in `g` (labels mapped through
/// `labeling`) and that `extra_edges` are exactly its edges off `C_n`.
pub fn verify_certificate(g: &Graph, labeling: &CycleLabeling, cert: &CycleCertificate) -> bool {
    let n = g.n();
    let vs = &cert.vertices;
    if labeling.n() != n || vs.len() != cert.t || cert.t < 3 || cert.t > n {
        return false;
    }
    let mut seen = vec![false; n];
    for &x in vs {
        if x >= n || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    for k in 0..vs.len() {
        let (a, b) = (vs[k], vs[(k + 1) % vs.len()]);
        if !g.has_edge(labeling.vertex(a), labeling.vertex(b)) {
            return false;
        }
    }
    let claimed: BTreeSet<Edge> = cert.extra_edges.iter().copied().collect();
    claimed.len() == cert.extra_edges.len() && claimed.into_iter().eq(chords_of(vs, n))
}
