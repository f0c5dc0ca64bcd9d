//! Short cycles in dense subgraphs of random graphs without using a Hamilton
//! cycle: a vertex with a dense second neighborhood, a min-degree core inside
//! that neighborhood, a long path grown by rotation-extension, and a closing
//! edge back through the first neighborhood.

use std::collections::VecDeque;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::certificate::{verify_certificate, CycleCertificate};
use crate::error::{Error, Result};
use crate::finder::{CycleSpectrum, MissingLength, MissingReason};
use crate::graph::{CycleLabeling, Graph, Vertex, VertexSet};

/// Vertices at distance exactly two from `w`.
pub fn second_neighborhood(g: &Graph, w: Vertex) -> VertexSet {
    let mut out = VertexSet::new(g.n());
    for u in g.neighbors(w) {
        out.union_with(g.row(u));
    }
    out.remove(w);
    for u in g.neighbors(w) {
        out.remove(u);
    }
    out
}

/// The largest subset of `within` inducing minimum degree `>= d`.
pub(crate) fn peel_within(g: &Graph, within: &VertexSet, d: usize) -> VertexSet {
    let mut alive = within.clone();
    let mut deg: Vec<usize> = (0..g.n())
        .map(|v| {
            if alive.contains(v) {
                alive.intersection_count(g.row(v))
            } else {
                0
            }
        })
        .collect();
    let mut queue: Vec<Vertex> = alive.iter().filter(|&v| deg[v] < d).collect();
    while let Some(v) = queue.pop() {
        if !alive.contains(v) {
            continue;
        }
        alive.remove(v);
        for u in g.neighbors(v) {
            if alive.contains(u) {
                deg[u] -= 1;
                if deg[u] + 1 == d {
                    queue.push(u);
                }
            }
        }
    }
    alive
}

/// Repeatedly deletes vertices of degree below `d`. The result keeps the
/// vertex numbering (deleted vertices become isolated); `None` when nothing
/// survives.
pub fn peel_min_degree(g: &Graph, d: usize) -> Result<Option<Graph>> {
    if d == 0 {
        return Err(Error::param("d", "degree bound must be at least 1"));
    }
    let all = VertexSet::from_iter(g.n(), 0..g.n());
    let core = peel_within(g, &all, d);
    Ok((!core.is_empty()).then(|| g.induced(&core)))
}

/// A set `X` whose outside neighborhood is smaller than required.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionViolation {
    pub set: Vec<Vertex>,
    pub outside: usize,
    pub required: usize,
}

impl From<ExpansionViolation> for Error {
    fn from(v: ExpansionViolation) -> Self {
        Error::ExpansionFailure {
            set: v.set,
            outside: v.outside,
            required: v.required,
        }
    }
}

fn outside_neighbors(g: &Graph, within: &VertexSet, xs: &[Vertex]) -> usize {
    let mut nb = VertexSet::new(g.n());
    for &x in xs {
        nb.union_with(g.row(x));
    }
    for &x in xs {
        nb.remove(x);
    }
    within.intersection_count(nb.words())
}

fn violation(g: &Graph, within: &VertexSet, xs: &[Vertex]) -> Option<ExpansionViolation> {
    let outside = outside_neighbors(g, within, xs);
    let required = 2 * xs.len() - 1;
    (outside < required).then(|| ExpansionViolation {
        set: xs.to_vec(),
        outside,
        required,
    })
}

/// Checks `|N(X) \ X| >= 2|X| - 1` for every `X ⊆ within` of size up to
/// `max_size` (exhaustively; keep `max_size` small). Returns the first
/// violation in lexicographic order.
pub fn check_expansion(
    g: &Graph,
    within: &VertexSet,
    max_size: usize,
) -> Option<ExpansionViolation> {
    let vs: Vec<Vertex> = within.iter().collect();
    let mut stack: Vec<usize> = Vec::new();
    // iterative enumeration of index combinations in lexicographic order
    for size in 1..=max_size.min(vs.len()) {
        stack.clear();
        stack.extend(0..size);
        loop {
            let xs: Vec<Vertex> = stack.iter().map(|&k| vs[k]).collect();
            if let Some(v) = violation(g, within, &xs) {
                return Some(v);
            }
            let mut k = size;
            while k > 0 && stack[k - 1] == vs.len() - size + k - 1 {
                k -= 1;
            }
            if k == 0 {
                break;
            }
            stack[k - 1] += 1;
            for m in k..size {
                stack[m] = stack[m - 1] + 1;
            }
        }
    }
    None
}

/// Largest `|within|` for which all triples are checked before rotation-extension.
const EXACT_TRIPLES_MAX: usize = 400;
const SAMPLED_SETS: usize = 64;
const SAMPLED_MAX_SIZE: usize = 32;

fn precheck(g: &Graph, within: &VertexSet, t: usize) -> Option<ExpansionViolation> {
    let m = within.len();
    let exact = if m <= EXACT_TRIPLES_MAX { 3 } else { 2 };
    if let Some(v) = check_expansion(g, within, t.min(exact)) {
        return Some(v);
    }
    let vs: Vec<Vertex> = within.iter().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x9051);
    for size in exact + 1..=t.min(SAMPLED_MAX_SIZE).min(m) {
        for _ in 0..SAMPLED_SETS {
            let mut xs: Vec<Vertex> = sample(&mut rng, m, size)
                .into_iter()
                .map(|k| vs[k])
                .collect();
            xs.sort_unstable();
            if let Some(v) = violation(g, within, &xs) {
                return Some(v);
            }
        }
    }
    None
}

/// Grows a path from `v` inside `within` until it has `target` edges. When no
/// rotation frees an endpoint, returns the path so far with the set of
/// endpoints reachable by rotations.
pub(crate) fn rotate_extend(
    g: &Graph,
    within: &VertexSet,
    v: Vertex,
    target: usize,
) -> (Vec<Vertex>, Option<ExpansionViolation>) {
    let n = g.n();
    let mut path = vec![v];
    let mut on = vec![false; n];
    on[v] = true;
    let free_neighbor =
        |on: &[bool], u: Vertex| g.neighbors(u).find(|&x| within.contains(x) && !on[x]);
    loop {
        if path.len() > target {
            return (path, None);
        }
        let u = *path.last().unwrap();
        if let Some(x) = free_neighbor(&on, u) {
            path.push(x);
            on[x] = true;
            continue;
        }
        let mut seen = VertexSet::new(n);
        seen.insert(u);
        let mut queue = VecDeque::from([path.clone()]);
        let mut freed = None;
        'bfs: while let Some(p) = queue.pop_front() {
            let end = *p.last().unwrap();
            let pos: Vec<usize> = (0..p.len().saturating_sub(2))
                .filter(|&j| g.has_edge(p[j], end))
                .collect();
            for j in pos {
                let new_end = p[j + 1];
                if seen.contains(new_end) {
                    continue;
                }
                seen.insert(new_end);
                let mut q = p[..=j].to_vec();
                q.extend(p[j + 1..].iter().rev());
                if free_neighbor(&on, new_end).is_some() {
                    freed = Some(q);
                    break 'bfs;
                }
                queue.push_back(q);
            }
        }
        match freed {
            Some(q) => path = q,
            None => {
                let set: Vec<Vertex> = seen.iter().collect();
                let outside = outside_neighbors(g, within, &set);
                let required = 2 * set.len() - 1;
                // a greedy path can dead-end without any violation; search properly
                if outside >= required {
                    if let Some(p) = bounded_path_search(g, within, v, target) {
                        return (p, None);
                    }
                }
                return (
                    path,
                    Some(ExpansionViolation {
                        set,
                        outside,
                        required,
                    }),
                );
            }
        }
    }
}

const PATH_SEARCH_BUDGET: usize = 1 << 20;

/// Depth-first search for a path from `v` with `target` edges, giving up after
/// a fixed number of steps.
fn bounded_path_search(
    g: &Graph,
    within: &VertexSet,
    v: Vertex,
    target: usize,
) -> Option<Vec<Vertex>> {
    fn go(
        g: &Graph,
        within: &VertexSet,
        path: &mut Vec<Vertex>,
        on: &mut [bool],
        target: usize,
        budget: &mut usize,
    ) -> bool {
        if path.len() > target {
            return true;
        }
        let u = *path.last().unwrap();
        let next: Vec<Vertex> = g
            .neighbors(u)
            .filter(|&x| within.contains(x) && !on[x])
            .collect();
        for x in next {
            if *budget == 0 {
                return false;
            }
            *budget -= 1;
            path.push(x);
            on[x] = true;
            if go(g, within, path, on, target, budget) {
                return true;
            }
            on[x] = false;
            path.pop();
        }
        false
    }
    let mut on = vec![false; g.n()];
    on[v] = true;
    let mut path = vec![v];
    let mut budget = PATH_SEARCH_BUDGET;
    go(g, within, &mut path, &mut on, target, &mut budget).then_some(path)
}

/// A path with endpoint `v` and at least `3t - 2` edges, by rotation-extension.
/// Small sets are checked for the expansion hypothesis first; any violation,
/// or an endpoint set on which rotation gets stuck, is returned as an
/// [`Error::ExpansionFailure`].
pub fn posa_path(g: &Graph, v: Vertex, t: usize) -> Result<Vec<Vertex>> {
    if v >= g.n() {
        return Err(Error::param("v", format!("vertex {v} out of range")));
    }
    if t == 0 {
        return Err(Error::param("t", "expansion scale must be at least 1"));
    }
    let all = VertexSet::from_iter(g.n(), 0..g.n());
    if let Some(bad) = precheck(g, &all, t) {
        return Err(bad.into());
    }
    let (path, stuck) = rotate_extend(g, &all, v, 3 * t - 2);
    match stuck {
        Some(bad) => Err(bad.into()),
        None => Ok(path),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpecialVertexMethod {
    /// Most neighbors among the high-degree vertices.
    HighDegree,
    /// Best vertex across the cut after clearing the first candidate's second neighborhood.
    Cut,
    /// Neither candidate met the threshold; global maximum instead.
    Argmax,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpecialVertex {
    pub w: Vertex,
    pub second_edges: usize,
    pub threshold: f64,
    pub method: SpecialVertexMethod,
}

fn second_edges(g: &Graph, w: Vertex) -> usize {
    g.edges_within(&second_neighborhood(g, w))
}

fn argmax_by<F: Fn(Vertex) -> usize>(vs: impl Iterator<Item = Vertex>, f: F) -> Option<Vertex> {
    let mut best: Option<(usize, Vertex)> = None;
    for v in vs {
        let s = f(v);
        if best.is_none_or(|(b, _)| s > b) {
            best = Some((s, v));
        }
    }
    best.map(|(_, v)| v)
}

/// A vertex whose second neighborhood spans at least `(ε/16) n² p` edges.
pub fn find_special_vertex(g: &Graph, eps: f64, p: f64) -> Result<SpecialVertex> {
    if !(eps > 0.0 && eps <= 1.0) {
        return Err(Error::param(
            "eps",
            format!("must lie in (0, 1], got {eps}"),
        ));
    }
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::param("p", format!("must lie in (0, 1], got {p}")));
    }
    let n = g.n();
    let nf = n as f64;
    let threshold = eps / 16.0 * nf * nf * p;
    let make = |w: Vertex, method| SpecialVertex {
        w,
        second_edges: second_edges(g, w),
        threshold,
        method,
    };

    let high_deg = (0.5 + eps / 2.0) * nf * p;
    let high = VertexSet::from_iter(n, (0..n).filter(|&v| g.degree(v) as f64 >= high_deg));
    let v0 = argmax_by(0..n, |v| high.intersection_count(g.row(v))).unwrap();
    let cand = make(v0, SpecialVertexMethod::HighDegree);
    if cand.second_edges as f64 >= threshold {
        return Ok(cand);
    }

    // X: part of N²(v0); the cut graph drops every edge inside X.
    let x_size = ((0.5 + eps / 80.0) * nf).ceil() as usize;
    let x = VertexSet::from_iter(n, second_neighborhood(g, v0).iter().take(x_size));
    let mut y = VertexSet::from_iter(n, 0..n);
    y.difference_with(&x);
    let cross: usize = x.iter().map(|v| y.intersection_count(g.row(v))).sum();
    let r = cross as f64 / (nf * nf * p);
    let bx_deg = (2.0 * r - eps / 20.0) * nf * p;
    let bx = VertexSet::from_iter(
        n,
        x.iter()
            .filter(|&v| y.intersection_count(g.row(v)) as f64 >= bx_deg),
    );
    if let Some(v1) = argmax_by(y.iter(), |v| bx.intersection_count(g.row(v))) {
        let cand = make(v1, SpecialVertexMethod::Cut);
        if cand.second_edges as f64 >= threshold {
            return Ok(cand);
        }
    }

    let w = argmax_by(0..n, |v| second_edges(g, v)).unwrap();
    let out = make(w, SpecialVertexMethod::Argmax);
    log::warn!(
        "no vertex met the second-neighborhood threshold {:.1}; using the maximum {} at vertex {}",
        threshold,
        out.second_edges,
        w
    );
    Ok(out)
}

/// Inputs of [`short_cycles_without_hamilton`]. `cap`, when set, replaces the
/// default upper length `⌊εn/25600⌋`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ShortCycleParams {
    pub eps: f64,
    pub p: f64,
    pub cap: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ShortCycles {
    /// Lengths `5..=upper` were attempted.
    pub upper: usize,
    pub special: Option<SpecialVertex>,
    /// Certificates use the vertex numbers of the input as labels.
    pub spectrum: CycleSpectrum,
    /// Set when the whole range was skipped.
    pub skipped: Option<MissingReason>,
}

/// Cycles of lengths `5..=upper` through a special vertex `w`:
/// `w, w1, w2, x1, ..., xs, xs', w` with the `x`'s on a rotation-extension
/// path inside a min-degree core of `N²(w)`.
pub fn short_cycles_without_hamilton(g: &Graph, params: &ShortCycleParams) -> Result<ShortCycles> {
    let (eps, p) = (params.eps, params.p);
    let n = g.n();
    let nf = n as f64;
    let upper = params.cap.unwrap_or((eps * nf / 25600.0).floor() as usize);
    let mut out = ShortCycles {
        upper,
        special: None,
        spectrum: CycleSpectrum::default(),
        skipped: None,
    };
    if upper < 5 {
        out.skipped = Some(MissingReason::RangeEmpty);
        return Ok(out);
    }
    let fail_from = |out: &mut ShortCycles, from: usize, stage: &str| {
        for t in from..=upper {
            out.spectrum.missing.push(MissingLength {
                t,
                reason: MissingReason::StageFailure(stage.to_string()),
            });
        }
    };
    if g.edge_count() as f64 <= (0.5 + eps) * nf * nf * p / 2.0 {
        out.skipped = Some(MissingReason::StageFailure("precondition".into()));
        fail_from(&mut out, 5, "precondition");
        return Ok(out);
    }

    let special = find_special_vertex(g, eps, p)?;
    out.special = Some(special);
    let w = special.w;
    let d = ((eps / 16.0 * nf * p).ceil() as usize).max(1);
    let z = peel_within(g, &second_neighborhood(g, w), d);
    if z.is_empty() {
        fail_from(&mut out, 5, "peel");
        return Ok(out);
    }

    // w2 ∈ Z and w1 ∈ N(w) ∩ N(w2) with the fewest neighbors in Z
    let first_nbhd = VertexSet::from_iter(n, g.neighbors(w));
    let pick = z.iter().find_map(|w2| {
        let w1 = argmax_by(g.neighbors(w2).filter(|&u| first_nbhd.contains(u)), |u| {
            usize::MAX - z.intersection_count(g.row(u))
        })?;
        Some((w1, w2))
    });
    let Some((w1, w2)) = pick else {
        fail_from(&mut out, 5, "anchor");
        return Ok(out);
    };
    let mut z1 = z.clone();
    for u in g.neighbors(w1) {
        if u != w2 {
            z1.remove(u);
        }
    }
    // the degree loss inside Z1 is at most the largest codegree with w1
    let max_codeg = z1
        .iter()
        .map(|u| z.intersection_count(&and_rows(g, w1, u)))
        .max()
        .unwrap_or(0);
    let d1 = d.saturating_sub(max_codeg).max(1);
    let core = peel_within(g, &z1, d1);
    if !core.contains(w2) {
        fail_from(&mut out, 5, "codegree");
        return Ok(out);
    }

    let (path, stuck) = rotate_extend(g, &core, w2, upper - 4);
    for s in 1..=upper - 4 {
        let t = s + 4;
        if s >= path.len() {
            let stage = if stuck.is_some() { "posa" } else { "path" };
            fail_from(&mut out, t, stage);
            break;
        }
        let xs = path[s];
        let closing = g.neighbors(xs).find(|&u| u != w1 && first_nbhd.contains(u));
        let Some(xs2) = closing else {
            out.spectrum.missing.push(MissingLength {
                t,
                reason: MissingReason::StageFailure("closure".into()),
            });
            continue;
        };
        let mut cycle = vec![w, w1];
        cycle.extend_from_slice(&path[..=s]);
        cycle.push(xs2);
        let cert = CycleCertificate::from_cycle(cycle, n);
        if verify_certificate(g, &CycleLabeling::identity(n), &cert) {
            out.spectrum.found.insert(t, cert);
        } else {
            out.spectrum.missing.push(MissingLength {
                t,
                reason: MissingReason::StageFailure("verify".into()),
            });
        }
    }
    Ok(out)
}

fn and_rows(g: &Graph, a: Vertex, b: Vertex) -> Vec<u64> {
    g.row(a).iter().zip(g.row(b)).map(|(x, y)| x & y).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::longest_path_from;

    fn lengths(found: &std::collections::BTreeMap<usize, CycleCertificate>) -> Vec<usize> {
        found.keys().copied().collect()
    }

    fn path_graph(n: usize) -> Graph {
        Graph::from_edges(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }

    fn is_path(g: &Graph, p: &[Vertex]) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        p.iter().all(|&v| seen.insert(v)) && p.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }

    #[test]
    fn peel_examples() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(peel_min_degree(&k4, 3).unwrap().unwrap(), k4);
        assert!(peel_min_degree(&path_graph(4), 2).unwrap().is_none());
        assert!(peel_min_degree(&k4, 0).is_err());
        // a triangle with a pendant path keeps only the triangle
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap();
        let core = peel_min_degree(&g, 2).unwrap().unwrap();
        assert_eq!(core.edge_count(), 3);
        assert_eq!(core.degree(3), 0);
    }

    #[test]
    fn second_neighborhood_examples() {
        let g = path_graph(6);
        assert_eq!(
            second_neighborhood(&g, 0).iter().collect::<Vec<_>>(),
            vec![2]
        );
        assert_eq!(
            second_neighborhood(&g, 2).iter().collect::<Vec<_>>(),
            vec![0, 4]
        );
        assert!(second_neighborhood(&Graph::complete(7).unwrap(), 3).is_empty());
    }

    #[test]
    fn posa_on_complete_graph() {
        let g = Graph::complete(7).unwrap();
        let p = posa_path(&g, 0, 2).unwrap();
        assert_eq!(p[0], 0);
        assert!(p.len() > 4 && is_path(&g, &p));
        assert!(p.len() - 1 <= longest_path_from(&g, 0));
    }

    #[test]
    fn posa_recovers_from_dead_end() {
        // greedy extension from 1 can end at the pendant vertex 2
        let edges = [
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (0, 5),
            (0, 6),
            (0, 8),
            (0, 9),
            (0, 10),
            (1, 3),
            (1, 5),
            (1, 7),
            (1, 9),
            (1, 10),
            (3, 7),
            (3, 8),
            (3, 9),
            (4, 6),
            (4, 9),
            (5, 7),
            (5, 8),
            (5, 9),
            (6, 8),
            (6, 9),
            (7, 10),
            (8, 9),
            (8, 10),
            (9, 10),
        ];
        let g = Graph::from_edges(11, edges).unwrap();
        let p = posa_path(&g, 1, 2).unwrap();
        assert_eq!(p[0], 1);
        assert!(p.len() > 4 && is_path(&g, &p));
    }

    #[test]
    fn posa_reports_violators() {
        match posa_path(&star(5), 0, 2) {
            Err(Error::ExpansionFailure {
                set,
                outside,
                required,
            }) => {
                assert_eq!(set, vec![1, 2]);
                assert_eq!((outside, required), (1, 3));
            }
            other => panic!("unexpected {other:?}"),
        }
        match posa_path(&Graph::cycle(9).unwrap(), 0, 2) {
            Err(Error::ExpansionFailure { set, outside, .. }) => {
                assert_eq!(set, vec![0, 1]);
                assert_eq!(outside, 2);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn stuck_rotation_returns_endpoint_set() {
        // two triangles joined at vertex 0: no path of 5 edges from 1
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        let all = VertexSet::from_iter(5, 0..5);
        let (p, stuck) = rotate_extend(&g, &all, 1, 5);
        assert!(is_path(&g, &p));
        assert_eq!(p.len() - 1, longest_path_from(&g, 1));
        assert!(stuck.is_some());
    }

    #[test]
    fn special_vertex_on_complete_graph_falls_back() {
        let sv = find_special_vertex(&Graph::complete(30).unwrap(), 1.0 / 16.0, 1.0).unwrap();
        assert_eq!(sv.method, SpecialVertexMethod::Argmax);
        assert_eq!(sv.second_edges, 0);
    }

    /// `w = 0` adjacent to `A = 1..=10`; `B = 11..=40` is a clique and each
    /// `b ∈ B` also sees two vertices of `A`.
    fn hub_graph() -> Graph {
        let mut g = Graph::empty(41).unwrap();
        for a in 1..=10 {
            g.add_edge(0, a);
        }
        for b in 11..=40 {
            for c in b + 1..=40 {
                g.add_edge(b, c);
            }
            g.add_edge(b, 1 + b % 10);
            g.add_edge(b, 1 + (b + 1) % 10);
        }
        g
    }

    #[test]
    fn override_cap_pipeline() {
        let g = hub_graph();
        let params = ShortCycleParams {
            eps: 0.5,
            p: 0.5,
            cap: Some(20),
        };
        let res = short_cycles_without_hamilton(&g, &params).unwrap();
        assert_eq!(res.special.unwrap().w, 0);
        assert_eq!(lengths(&res.spectrum.found), (5..=20).collect::<Vec<_>>());
        let id = CycleLabeling::identity(41);
        for c in res.spectrum.found.values() {
            assert!(verify_certificate(&g, &id, c));
        }
    }

    #[test]
    fn pipeline_range_and_precondition() {
        let g = hub_graph();
        let res = short_cycles_without_hamilton(
            &g,
            &ShortCycleParams {
                eps: 0.1,
                p: 0.5,
                cap: None,
            },
        )
        .unwrap();
        assert_eq!(res.skipped, Some(MissingReason::RangeEmpty));
        assert!(res.spectrum.found.is_empty() && res.spectrum.missing.is_empty());
        let c = Graph::cycle(60).unwrap();
        let res = short_cycles_without_hamilton(
            &c,
            &ShortCycleParams {
                eps: 0.1,
                p: 0.5,
                cap: Some(10),
            },
        )
        .unwrap();
        assert_eq!(
            res.skipped,
            Some(MissingReason::StageFailure("precondition".into()))
        );
        assert!(res.spectrum.found.is_empty());
    }
}
