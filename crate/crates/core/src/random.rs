//! Seeded binomial random graphs, the two-round exposure coupling and
//! Chernoff tolerances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{CycleLabeling, Edge, Graph};

/// `(seed, stream_id)` determines every random choice of one trial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RngSeed {
    pub seed: u64,
    pub stream_id: u64,
}

impl RngSeed {
    pub fn new(seed: u64, stream_id: u64) -> Self {
        RngSeed { seed, stream_id }
    }

    pub fn rng(&self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(self.stream_id);
        rng
    }

    /// A stream derived from this one, for a sub-step of the same trial.
    pub fn fork(&self, salt: u64) -> RngSeed {
        RngSeed {
            seed: self.seed ^ splitmix64(salt.wrapping_add(0x5eed)),
            stream_id: self.stream_id,
        }
    }
}

pub fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GnpParams {
    pub n: usize,
    pub p: f64,
    /// Set when `p = C · n^{-1/2}`.
    pub c: Option<f64>,
}

impl GnpParams {
    pub fn new(n: usize, p: f64) -> Result<Self> {
        if n < 3 {
            return Err(Error::param("n", format!("need n >= 3, got {n}")));
        }
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::param("p", format!("must lie in [0, 1], got {p}")));
        }
        Ok(GnpParams { n, p, c: None })
    }

    /// `p = min(1, C / sqrt(n))`.
    pub fn threshold(n: usize, c: f64) -> Result<Self> {
        if !(c > 0.0) {
            return Err(Error::param("C", format!("must be positive, got {c}")));
        }
        let mut params = Self::new(n, (c / (n as f64).sqrt()).min(1.0))?;
        params.c = Some(c);
        Ok(params)
    }

    pub fn expected_edges(&self) -> f64 {
        (self.n * (self.n - 1) / 2) as f64 * self.p
    }
}

/// `G(n, p)`: every pair independently with probability `p`.
pub fn sample_gnp(params: &GnpParams, seed: RngSeed) -> Graph {
    let n = params.n;
    let mut rng = seed.rng();
    let mut g = Graph::empty(n).expect("validated params");
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < params.p {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// `G(n, p) ∪ C_n` with the identity labeling as the Hamilton witness.
pub fn plant_hamilton(params: &GnpParams, seed: RngSeed) -> (Graph, CycleLabeling) {
    let mut g = sample_gnp(params, seed);
    let n = params.n;
    for i in 0..n {
        g.add_edge(i, (i + 1) % n);
    }
    (g, CycleLabeling::identity(n))
}

/// Keeps each edge independently with probability `q` (second exposure round).
pub fn subsample_coupling(g: &Graph, q: f64, seed: RngSeed) -> Result<Graph> {
    if !(0.0..=1.0).contains(&q) {
        return Err(Error::param("q", format!("must lie in [0, 1], got {q}")));
    }
    let mut rng = seed.rng();
    let mut out = Graph::empty(g.n())?;
    for Edge(u, v) in g.edges() {
        if rng.gen::<f64>() < q {
            out.add_edge(u, v);
        }
    }
    Ok(out)
}

/// Two-sided Chernoff bound `exp(-ε² μ / 3)` on `|X - μ| > εμ`.
pub fn chernoff_tail(mean: f64, eps: f64) -> f64 {
    if mean <= 0.0 || eps <= 0.0 {
        return 1.0;
    }
    (-eps * eps * mean / 3.0).exp().min(1.0)
}

/// Smallest relative deviation whose two-sided Chernoff bound is at most `failure`.
pub fn chernoff_eps(mean: f64, failure: f64) -> f64 {
    (3.0 * (2.0 / failure).ln() / mean).sqrt()
}
