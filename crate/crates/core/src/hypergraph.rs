//! The shortcut hypergraph `H_n^l`: vertices are the edges of `K_n`,
//! hyperedges the 4-sets of edges forming an `l`-shortcut. Provides exact
//! enumeration and counting plus the density and boundedness checks used by
//! the transference argument.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{is_cycle_edge, CycleLabeling, Edge, Graph};
use crate::random::RngSeed;
use crate::shortcut::{shortcut_from_gaps, validate_shortcut, Variant};

pub const DEFAULT_GUARD_N: usize = 60;

/// Row-major index of `e` in the upper triangle of an `n × n` matrix.
pub fn edge_index(e: Edge, n: usize) -> usize {
    let (u, v) = (e.0, e.1);
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

/// Inverse of [`edge_index`].
pub fn edge_at(index: usize, n: usize) -> Edge {
    let mut u = 0;
    let mut start = 0;
    while start + (n - u - 1) <= index {
        start += n - u - 1;
        u += 1;
    }
    Edge(u, u + 1 + index - start)
}

fn check_guard(what: &'static str, n: usize, guard: usize) -> Result<()> {
    if n > guard {
        Err(Error::GuardExceeded {
            what,
            n,
            max: guard,
        })
    } else {
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShortcutHypergraph {
    pub n: usize,
    pub l: usize,
    /// Sorted 4-tuples of edge indices, in sorted order without duplicates.
    pub edges: Vec<[u32; 4]>,
}

impl ShortcutHypergraph {
    pub fn vertex_count(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// `|E| / n⁴`.
    pub fn density_constant(&self) -> f64 {
        self.edges.len() as f64 / (self.n as f64).powi(4)
    }

    /// Degree of every vertex (edge of `K_n`) in the hypergraph.
    pub fn degrees(&self) -> Vec<u32> {
        let mut deg = vec![0u32; self.vertex_count()];
        for he in &self.edges {
            for &x in he {
                deg[x as usize] += 1;
            }
        }
        deg
    }

    pub fn regression_row(&self) -> RegressionRow {
        RegressionRow {
            n: self.n,
            l: self.l,
            edges: self.edges.len(),
            c: self.density_constant(),
        }
    }
}

/// One line of the enumeration regression table.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegressionRow {
    pub n: usize,
    pub l: usize,
    pub edges: usize,
    pub c: f64,
}

/// Every valid `l`-shortcut of `K_n`, for `n <= guard`.
pub fn build_shortcut_hypergraph(n: usize, l: usize, guard: usize) -> Result<ShortcutHypergraph> {
    check_guard("shortcut hypergraph", n, guard)?;
    if n < 3 {
        return Err(Error::param("n", format!("need n >= 3, got {n}")));
    }
    if 2 * l > n {
        return Err(Error::param(
            "l",
            format!("need 2l <= n, got l = {l}, n = {n}"),
        ));
    }
    let slack = n.saturating_sub(8 + l);
    let fits = n >= 8 + l;
    let mut edges: Vec<[u32; 4]> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i1| {
            let mut out = Vec::new();
            if !fits {
                return out;
            }
            for variant in [Variant::I, Variant::II] {
                for a in 0..=slack {
                    for b in 0..=slack - a {
                        for c in 0..=slack - a - b {
                            let s =
                                shortcut_from_gaps(variant, n, i1, l, [a, b, c]).expect("gaps fit");
                            assert!(validate_shortcut(&s, n));
                            let mut key = s.edges(n).map(|e| edge_index(e, n) as u32);
                            key.sort_unstable();
                            out.push(key);
                        }
                    }
                }
            }
            out
        })
        .collect();
    edges.par_sort_unstable();
    edges.dedup();
    Ok(ShortcutHypergraph { n, l, edges })
}

/// Exact number of `l`-shortcuts (as 4-sets of chords, like the hyperedges
/// of `H_n^l`) whose chords all lie in `g`.
///
/// Distinct tuples `(i1, i2, i3, i4)` give distinct edge sets except when
/// `n = 2l + 8`, where that case is counted by enumeration and deduplication.
/// Otherwise, for each pair `(i1, i2)` the admissible positions of `i3` and `i4` along
/// the arc from `i2+2` to `i1-1` are marked, and pairs of positions in the
/// right relative order are counted with prefix sums.
pub fn count_shortcuts(g: &Graph, labeling: &CycleLabeling, l: usize, guard: usize) -> Result<u64> {
    let n = g.n();
    check_guard("shortcut count", n, guard)?;
    if 2 * l > n {
        return Err(Error::param(
            "l",
            format!("need 2l <= n, got l = {l}, n = {n}"),
        ));
    }
    if n < 8 + l {
        return Ok(0);
    }
    let h = labeling.relabel(g);
    let chord = |a: usize, b: usize| h.has_edge(a, b) && !is_cycle_edge(a, b, n);
    if n == 2 * l + 8 {
        let hg = build_shortcut_hypergraph(n, l, guard)?;
        let present = hg
            .edges
            .iter()
            .filter(|he| {
                he.iter().all(|&x| {
                    let e = edge_at(x as usize, n);
                    chord(e.0, e.1)
                })
            })
            .count();
        return Ok(present as u64);
    }
    let total: u64 = (0..n)
        .into_par_iter()
        .map(|i1| {
            let mut sum = 0u64;
            let j1 = (i1 + 1) % n;
            // prefix[q] = number of i3 positions below q
            let mut prefix = vec![0u32; n + 1];
            for k in 2..n {
                if n < k + 2 + l + 4 {
                    break;
                }
                let i2 = (i1 + k) % n;
                let j2 = (i2 + 1) % n;
                let arc = n - k - 2;
                let at = |q: usize| (i2 + 2 + q) % n;
                for q in 0..arc {
                    let c = q + 1 < arc && chord(i1, at(q)) && chord(j2, at(q + 1));
                    prefix[q + 1] = prefix[q] + u32::from(c);
                }
                let total_c = prefix[arc];
                for q4 in 0..arc - l - 1 {
                    if chord(j1, at(q4)) && chord(i2, at(q4 + l + 1)) {
                        let before = if q4 >= 2 { prefix[q4 - 1] } else { 0 };
                        let after = total_c - prefix[(q4 + l + 2).min(arc)];
                        sum += u64::from(before + after);
                    }
                }
            }
            sum
        })
        .sum();
    Ok(total)
}

/// `(ε/16)^8`.
pub fn density_function(eps: f64) -> f64 {
    (eps / 16.0).powi(8)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DensityReport {
    pub alpha: f64,
    pub eps: f64,
    pub f_eps: f64,
    pub subset_size: usize,
    pub induced_edges: usize,
    pub total_edges: usize,
    pub pass: bool,
}

/// Counts hyperedges inside the vertex subset given as the edge set of `u`
/// (a graph on the same `n`). Requires `|U| >= (1/2 + eps)|V(H)|`.
pub fn check_density(hg: &ShortcutHypergraph, u: &Graph, eps: f64) -> Result<DensityReport> {
    if u.n() != hg.n {
        return Err(Error::param(
            "U",
            format!("graph has {} vertices, hypergraph expects {}", u.n(), hg.n),
        ));
    }
    if !(eps > 0.0 && eps <= 0.5) {
        return Err(Error::param(
            "eps",
            format!("must lie in (0, 1/2], got {eps}"),
        ));
    }
    let alpha = 0.5;
    let size = u.edge_count();
    let needed = (alpha + eps) * hg.vertex_count() as f64;
    if (size as f64) < needed {
        return Err(Error::param(
            "U",
            format!("|U| = {size} is below (1/2 + eps)|V| = {needed:.1}"),
        ));
    }
    let member: Vec<bool> = (0..hg.vertex_count())
        .map(|k| {
            let e = edge_at(k, hg.n);
            u.has_edge(e.0, e.1)
        })
        .collect();
    let induced = hg
        .edges
        .par_iter()
        .filter(|he| he.iter().all(|&x| member[x as usize]))
        .count();
    let f_eps = density_function(eps);
    Ok(DensityReport {
        alpha,
        eps,
        f_eps,
        subset_size: size,
        induced_edges: induced,
        total_edges: hg.edge_count(),
        pass: induced as f64 >= f_eps * hg.edge_count() as f64,
    })
}

/// `deg_i(v, U)`: hyperedges through `v` with at least `i` further vertices in `U`.
pub fn degree_i(hg: &ShortcutHypergraph, v: usize, u: &[bool], i: usize) -> usize {
    hg.edges
        .iter()
        .filter(|he| he.contains(&(v as u32)))
        .filter(|he| {
            he.iter()
                .filter(|&&x| x as usize != v && u[x as usize])
                .count()
                >= i
        })
        .count()
}

fn sum_squared_degrees(hg: &ShortcutHypergraph, u: &[bool], i: usize) -> f64 {
    let mut deg = vec![0u64; hg.vertex_count()];
    for he in &hg.edges {
        let inside = he.iter().filter(|&&x| u[x as usize]).count();
        for &x in he {
            if inside - usize::from(u[x as usize]) >= i {
                deg[x as usize] += 1;
            }
        }
    }
    deg.iter().map(|&d| (d * d) as f64).sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundednessEstimate {
    pub i: usize,
    pub q: f64,
    pub trials: usize,
    /// Sample mean of `Σ_v deg_i(v, V_q)²`.
    pub mean: f64,
    pub std_err: f64,
    /// `q^{2i} |E|² / |V|`; the bound is `K` times this.
    pub unit: f64,
    /// `mean / unit`.
    pub k_estimate: f64,
}

impl BoundednessEstimate {
    /// Whether `mean <= k · unit` holds within `sigmas` standard errors.
    pub fn holds_with(&self, k: f64, sigmas: f64) -> bool {
        self.mean <= k * self.unit + sigmas * self.std_err
    }
}

/// Monte-Carlo estimate of `E[Σ_v deg_i(v, V_q)²]` where `V_q` keeps every
/// vertex independently with probability `q`. Trial `k` uses stream `k` of `seed`.
pub fn estimate_boundedness(
    hg: &ShortcutHypergraph,
    p: f64,
    q: f64,
    i: usize,
    trials: usize,
    seed: u64,
) -> Result<BoundednessEstimate> {
    if !(1..=3).contains(&i) {
        return Err(Error::param("i", format!("must be 1, 2 or 3, got {i}")));
    }
    if !(p > 0.0 && p <= q && q <= 1.0) {
        return Err(Error::param(
            "q",
            format!("need 0 < p <= q <= 1, got p = {p}, q = {q}"),
        ));
    }
    if trials == 0 {
        return Err(Error::param("trials", "need at least one trial"));
    }
    let nv = hg.vertex_count();
    let samples: Vec<f64> = (0..trials)
        .into_par_iter()
        .map(|k| {
            use rand::Rng;
            let mut rng = RngSeed::new(seed, k as u64).rng();
            let u: Vec<bool> = (0..nv).map(|_| q >= 1.0 || rng.gen::<f64>() < q).collect();
            sum_squared_degrees(hg, &u, i)
        })
        .collect();
    let t = trials as f64;
    let mean = samples.iter().sum::<f64>() / t;
    let std_err = if trials > 1 {
        let var = samples.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (t - 1.0);
        (var / t).sqrt()
    } else {
        0.0
    };
    let e = hg.edge_count() as f64;
    let unit = q.powi(2 * i as i32) * e * e / nv as f64;
    Ok(BoundednessEstimate {
        i,
        q,
        trials,
        mean,
        std_err,
        unit,
        k_estimate: if unit > 0.0 { mean / unit } else { 0.0 },
    })
}
