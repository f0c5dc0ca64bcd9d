//! Simple undirected graphs on the vertex set `0..n`, stored as bitset
//! adjacency rows, plus the labeling that pins a Hamilton cycle to `Z_n`.

use std::fmt;
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// An unordered vertex pair kept in canonical `(min, max)` form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge(pub Vertex, pub Vertex);

impl Edge {
    /// Builds the canonical form of `{u, v}`. Panics on a loop.
    pub fn new(u: Vertex, v: Vertex) -> Self {
        assert_ne!(u, v, "loops are not edges");
        if u < v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0 == v || self.1 == v
    }

    pub fn endpoints(&self) -> [Vertex; 2] {
        [self.0, self.1]
    }

    pub fn shares_endpoint(&self, other: &Edge) -> bool {
        self.contains(other.0) || self.contains(other.1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// Iterates the indices of set bits in a bitset slice.
pub fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(w, &word)| {
        let mut rest = word;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(w * 64 + bit)
            }
        })
    })
}

pub fn popcount(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

/// A fixed-capacity vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet {
            words: vec![0; words_for(n)],
        }
    }

    pub fn from_iter(n: usize, vs: impl IntoIterator<Item = Vertex>) -> Self {
        let mut s = Self::new(n);
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn insert(&mut self, v: Vertex) {
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: Vertex) {
        self.words[v / 64] &= !(1 << (v % 64));
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        popcount(&self.words)
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        iter_bits(&self.words)
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn union_with(&mut self, row: &[u64]) {
        for (a, b) in self.words.iter_mut().zip(row) {
            *a |= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn intersection_count(&self, row: &[u64]) -> usize {
        self.words
            .iter()
            .zip(row)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }
}

/// A simple graph on vertices `0..n` with `n >= 3`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("m", &self.m)
            .finish()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidGraph(format!(
                "need at least 3 vertices, got {n}"
            )));
        }
        let stride = words_for(n);
        Ok(Graph {
            n,
            stride,
            rows: vec![0; n * stride],
            m: 0,
        })
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u},{v}) out of range for n = {n}"
                )));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    /// The Hamilton cycle `0, 1, ..., n-1, 0`.
    pub fn cycle(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn row(&self, v: Vertex) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u != v && self.row(u)[v / 64] >> (v % 64) & 1 == 1
    }

    /// Inserts `{u, v}`; returns whether it was new.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        assert!(u != v && u < self.n && v < self.n);
        if self.has_edge(u, v) {
            return false;
        }
        self.rows[u * self.stride + v / 64] |= 1 << (v % 64);
        self.rows[v * self.stride + u / 64] |= 1 << (u % 64);
        self.m += 1;
        true
    }

    /// Deletes `{u, v}`; returns whether it was present.
    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        if !self.has_edge(u, v) {
            return false;
        }
        self.rows[u * self.stride + v / 64] &= !(1 << (v % 64));
        self.rows[v * self.stride + u / 64] &= !(1 << (u % 64));
        self.m -= 1;
        true
    }

    pub fn degree(&self, v: Vertex) -> usize {
        popcount(self.row(v))
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        iter_bits(self.row(v))
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| Edge(u, v))
        })
    }

    pub fn codegree(&self, u: Vertex, v: Vertex) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Number of edges with both endpoints in `set`.
    pub fn edges_within(&self, set: &VertexSet) -> usize {
        set.iter()
            .map(|v| set.intersection_count(self.row(v)))
            .sum::<usize>()
            / 2
    }

    /// Keeps only edges with both endpoints in `set`; other vertices become isolated.
    pub fn induced(&self, set: &VertexSet) -> Graph {
        let mut g = Graph {
            n: self.n,
            stride: self.stride,
            rows: vec![0; self.rows.len()],
            m: 0,
        };
        for v in set.iter() {
            let dst = &mut g.rows[v * self.stride..(v + 1) * self.stride];
            for ((d, s), m) in dst.iter_mut().zip(self.row(v)).zip(set.words()) {
                *d = s & m;
            }
        }
        g.m = (0..self.n).map(|v| g.degree(v)).sum::<usize>() / 2;
        g
    }

    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.rows.iter().zip(&other.rows).all(|(a, b)| a & !b == 0)
    }

    /// Finds a proper 2-colouring if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        let mut stack = Vec::new();
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            stack.push(s);
            while let Some(u) = stack.pop() {
                let cu = color[u].unwrap();
                for v in self.neighbors(u) {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            stack.push(v);
                        }
                        Some(cv) if cv == cu => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap()).collect())
    }

    /// First triangle in lexicographic order of vertex triples.
    pub fn find_triangle(&self) -> Option<[Vertex; 3]> {
        for a in 0..self.n {
            for b in self.neighbors(a).filter(|&b| b > a) {
                let first =
                    self.row(a)
                        .iter()
                        .zip(self.row(b))
                        .enumerate()
                        .find_map(|(w, (x, y))| {
                            // only c > b
                            let mut common = x & y;
                            if w < (b + 1) / 64 {
                                common = 0;
                            } else if w == (b + 1) / 64 {
                                common &= !0u64 << ((b + 1) % 64);
                            }
                            (common != 0).then(|| w * 64 + common.trailing_zeros() as usize)
                        });
                if let Some(c) = first {
                    return Some([a, b, c]);
                }
            }
        }
        None
    }

    pub fn is_triangle_free(&self) -> bool {
        self.find_triangle().is_none()
    }

    /// Parses the edge-list text format: a header `n m` then `m` lines `u v`.
    pub fn read_edge_list<R: BufRead>(reader: R) -> Result<Self> {
        let mut lines = reader
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l))
            .filter(|(_, l)| l.as_ref().map(|s| !s.trim().is_empty()).unwrap_or(true));
        let (line, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            reason: "missing header".into(),
        })?;
        let header = header.map_err(|e| Error::Parse {
            line,
            reason: e.to_string(),
        })?;
        let [n, m] = parse_pair(&header, line)?;
        let mut g = Graph::empty(n)?;
        let mut seen = 0;
        for (line, text) in lines {
            let text = text.map_err(|e| Error::Parse {
                line,
                reason: e.to_string(),
            })?;
            let [u, v] = parse_pair(&text, line)?;
            if !(u < v && v < n) {
                return Err(Error::Parse {
                    line,
                    reason: format!("edge must satisfy 0 <= u < v < {n}, got {u} {v}"),
                });
            }
            if !g.add_edge(u, v) {
                return Err(Error::Parse {
                    line,
                    reason: format!("duplicate edge {u} {v}"),
                });
            }
            seen += 1;
        }
        if seen != m {
            return Err(Error::Parse {
                line: 1,
                reason: format!("header announces {m} edges, found {seen}"),
            });
        }
        Ok(g)
    }

    pub fn write_edge_list<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "{} {}", self.n, self.m)?;
        for Edge(u, v) in self.edges() {
            writeln!(out, "{u} {v}")?;
        }
        Ok(())
    }
}

fn parse_pair(text: &str, line: usize) -> Result<[usize; 2]> {
    let mut it = text.split_whitespace().map(|t| t.parse::<usize>());
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok([a, b]),
        _ => Err(Error::Parse {
            line,
            reason: format!("expected two non-negative integers, got {text:?}"),
        }),
    }
}

/// A bijection from vertices to `Z_n` under which `C_n` is a subgraph of the host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleLabeling {
    label_of: Vec<usize>,
    vertex_of: Vec<Vertex>,
}

impl CycleLabeling {
    pub fn identity(n: usize) -> Self {
        CycleLabeling {
            label_of: (0..n).collect(),
            vertex_of: (0..n).collect(),
        }
    }

    /// Accepts `perm[v] = label of v`; rejects anything that is not a permutation.
    pub fn from_labels(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        let mut vertex_of = vec![usize::MAX; n];
        for (v, &label) in perm.iter().enumerate() {
            if label >= n || vertex_of[label] != usize::MAX {
                return Err(Error::InvalidLabeling(format!(
                    "labels must be a permutation of 0..{n}"
                )));
            }
            vertex_of[label] = v;
        }
        Ok(CycleLabeling {
            label_of: perm,
            vertex_of,
        })
    }

    /// Builds the labeling that walks `order` as `0, 1, 2, ...`.
    pub fn from_cycle_order(order: &[Vertex]) -> Result<Self> {
        let mut perm = vec![usize::MAX; order.len()];
        for (label, &v) in order.iter().enumerate() {
            if v >= order.len() || perm[v] != usize::MAX {
                return Err(Error::InvalidLabeling(
                    "cycle order must visit each vertex once".into(),
                ));
            }
            perm[v] = label;
        }
        Self::from_labels(perm)
    }

    pub fn n(&self) -> usize {
        self.label_of.len()
    }

    pub fn label(&self, v: Vertex) -> usize {
        self.label_of[v]
    }

    pub fn vertex(&self, label: usize) -> Vertex {
        self.vertex_of[label]
    }

    pub fn labels(&self) -> &[usize] {
        &self.label_of
    }

    /// Checks that consecutive labels are adjacent in `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = self.n();
        if n != g.n() {
            return Err(Error::InvalidLabeling(format!(
                "labeling has {n} entries, graph has {} vertices",
                g.n()
            )));
        }
        for i in 0..n {
            let (a, b) = (self.vertex(i), self.vertex((i + 1) % n));
            if !g.has_edge(a, b) {
                return Err(Error::InvalidLabeling(format!(
                    "labels {i} and {} (vertices {a}, {b}) are not adjacent",
                    (i + 1) % n
                )));
            }
        }
        Ok(())
    }

    /// Copy of `g` with every vertex renamed to its label.
    pub fn relabel(&self, g: &Graph) -> Graph {
        let mut out = Graph::empty(g.n()).expect("same order as a valid graph");
        for Edge(u, v) in g.edges() {
            out.add_edge(self.label(u), self.label(v));
        }
        out
    }

    /// Inverse of [`relabel`](Self::relabel).
    pub fn unlabel(&self, g: &Graph) -> Graph {
        let mut out = Graph::empty(g.n()).expect("same order as a valid graph");
        for Edge(a, b) in g.edges() {
            out.add_edge(self.vertex(a), self.vertex(b));
        }
        out
    }

    pub fn read<R: BufRead>(reader: R) -> Result<Self> {
        let mut text = String::new();
        for (i, line) in reader.lines().enumerate() {
            let line = line.map_err(|e| Error::Parse {
                line: i + 1,
                reason: e.to_string(),
            })?;
            text.push_str(&line);
            text.push(' ');
        }
        let perm = text
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Parse {
                line: 1,
                reason: e.to_string(),
            })?;
        Self::from_labels(perm)
    }

    pub fn write<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        let parts: Vec<String> = self.label_of.iter().map(|l| l.to_string()).collect();
        writeln!(out, "{}", parts.join(" "))
    }
}

/// Whether `{a, b}` is an edge of `C_n` in label space.
pub fn is_cycle_edge(a: usize, b: usize, n: usize) -> bool {
    (a + 1) % n == b || (b + 1) % n == a
}
