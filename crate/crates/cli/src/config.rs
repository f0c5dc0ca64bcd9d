use std::path::{Path, PathBuf};

use anyhow::Context;
use pancyclic::hypergraph::DEFAULT_GUARD_N;
use pancyclic::random::{splitmix64, GnpParams};
use pancyclic::{AdversarySpec, Error, SpectrumRequest};
use serde::{Deserialize, Serialize};

pub const DEFAULT_C: f64 = 3.0;

/// Everything one experiment needs. Loaded from JSON, then overridden by flags.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    pub n: usize,
    /// `p = C · n^{-1/2}`; mutually exclusive with `p`.
    #[serde(rename = "C")]
    pub c: Option<f64>,
    pub p: Option<f64>,
    pub adversary: Option<AdversarySpec>,
    pub eps: f64,
    pub delta: Option<f64>,
    pub beta: Option<f64>,
    pub eps_prime: Option<f64>,
    /// Shortcut gap for hypergraph runs; checks that need one default to `0`.
    pub l: Option<usize>,
    pub trials: usize,
    pub seed: u64,
    pub out: Option<PathBuf>,
    pub json: Option<PathBuf>,
    pub guard_n: usize,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            n: 200,
            c: None,
            p: None,
            adversary: None,
            eps: 0.1,
            delta: None,
            beta: None,
            eps_prime: None,
            l: None,
            trials: 1,
            seed: 0,
            out: None,
            json: None,
            guard_n: DEFAULT_GUARD_N,
        }
    }
}

fn invalid(name: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParameter {
        name,
        reason: reason.into(),
    }
}

impl ExperimentConfig {
    pub fn from_json_file(path: &Path) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))?;
        serde_json::from_str(&text).with_context(|| format!("parsing config {}", path.display()))
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.n < 3 {
            return Err(invalid("n", format!("need n >= 3, got {}", self.n)));
        }
        if self.trials == 0 {
            return Err(invalid("trials", "need at least one trial"));
        }
        if self.c.is_some() && self.p.is_some() {
            return Err(invalid("p", "give either p or C, not both"));
        }
        if let Some(c) = self.c {
            if !(c > 0.0 && c.is_finite()) {
                return Err(invalid("C", format!("must be positive, got {c}")));
            }
        }
        GnpParams::new(self.n, self.p())?;
        if let Some(spec) = &self.adversary {
            spec.validate(self.n)?;
        }
        self.request()?;
        Ok(())
    }

    /// Model edge probability, clamped to 1 when `C · n^{-1/2}` exceeds it.
    pub fn p(&self) -> f64 {
        self.p
            .unwrap_or_else(|| (self.c.unwrap_or(DEFAULT_C) / (self.n as f64).sqrt()).min(1.0))
    }

    pub fn gnp(&self) -> Result<GnpParams, Error> {
        GnpParams::new(self.n, self.p())
    }

    /// Spectrum parameters: defaults derived from `eps`, each overridable.
    /// The goodness density is left unset so it follows the graph under test.
    pub fn request(&self) -> Result<SpectrumRequest, Error> {
        let mut req = SpectrumRequest::new(self.eps)?;
        if let Some(d) = self.delta {
            req.delta = d;
            if self.beta.is_none() {
                req.beta = (d / 4.0).min(self.eps / 10.0);
            }
        }
        if let Some(b) = self.beta {
            req.beta = b;
        }
        if let Some(e) = self.eps_prime {
            req.eps_prime = e;
        }
        req.validate()?;
        Ok(req)
    }

    /// `base XOR splitmix64(i)`.
    pub fn trial_seed(&self, trial: usize) -> u64 {
        self.seed ^ splitmix64(trial as u64)
    }
}
