//! The cycle finder: a certificate for every length `3..=n` of a graph that
//! contains the labeled Hamilton cycle `C_n`.
//!
//! Lengths are split into three ranges. Tiny lengths (3 to 7) use direct
//! search. Short lengths `8..=δn` and long lengths `(1-δ)n..n` use
//! shortcuts. Everything in between uses crossing pairs. Each stage falls
//! back to the others, and finally to a chord-bounded search, before a length
//! is reported missing.

mod appendix;
mod medium;
mod search;
mod shortcuts;
mod tiny;

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::certificate::{verify_certificate, CycleCertificate};
use crate::error::{Error, Result};
use crate::graph::{CycleLabeling, Graph};
use crate::shortcut::{cycles_from_shortcut, Shortcut};

pub use appendix::{
    check_expansion, find_special_vertex, peel_min_degree, posa_path, second_neighborhood,
    short_cycles_without_hamilton, ExpansionViolation, ShortCycleParams, ShortCycles,
    SpecialVertex, SpecialVertexMethod,
};
pub use medium::{good_directions, GoodDirections, MediumSearch, SliceCounts};
pub use search::{find_cycle_with_chords, SearchOutcome};
pub use tiny::find_tiny_cycles;

/// Parameters of one spectrum run.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumRequest {
    pub eps: f64,
    pub delta: f64,
    pub beta: f64,
    pub eps_prime: f64,
    /// Model density for the goodness test; the edge density of the input when unset.
    pub p: Option<f64>,
}

impl SpectrumRequest {
    /// Defaults: `δ = ε/64`, `β = min(δ/4, ε/10)`, `ε′ = ε/10`.
    pub fn new(eps: f64) -> Result<Self> {
        let delta = eps / 64.0;
        let req = SpectrumRequest {
            eps,
            delta,
            beta: (delta / 4.0).min(eps / 10.0),
            eps_prime: eps / 10.0,
            p: None,
        };
        req.validate()?;
        Ok(req)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.eps > 0.0 && self.eps <= 1.0) {
            return Err(Error::param(
                "eps",
                format!("must lie in (0, 1], got {}", self.eps),
            ));
        }
        if !(self.beta > 0.0 && self.beta < 1.0 / 6.0) {
            return Err(Error::param(
                "beta",
                format!("must lie in (0, 1/6), got {}", self.beta),
            ));
        }
        for (name, v) in [("delta", self.delta), ("eps_prime", self.eps_prime)] {
            if !(v > 0.0 && v < 1.0) {
                return Err(Error::param(name, format!("must lie in (0, 1), got {v}")));
            }
        }
        if let Some(p) = self.p {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::param("p", format!("must lie in [0, 1], got {p}")));
            }
        }
        Ok(())
    }

    fn density_for(&self, g: &Graph) -> f64 {
        self.p.unwrap_or_else(|| {
            let n = g.n();
            g.edge_count() as f64 / (n * (n - 1) / 2) as f64
        })
    }
}

/// Why a length has no certificate.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MissingReason {
    NoOddCycle,
    NoShortcut,
    NoCrossing,
    RangeEmpty,
    StageFailure(String),
}

impl fmt::Display for MissingReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MissingReason::NoOddCycle => f.write_str("no-odd-cycle"),
            MissingReason::NoShortcut => f.write_str("no-shortcut"),
            MissingReason::NoCrossing => f.write_str("no-crossing"),
            MissingReason::RangeEmpty => f.write_str("range-empty"),
            MissingReason::StageFailure(stage) => write!(f, "stage-failure:{stage}"),
        }
    }
}

impl std::str::FromStr for MissingReason {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "no-odd-cycle" => MissingReason::NoOddCycle,
            "no-shortcut" => MissingReason::NoShortcut,
            "no-crossing" => MissingReason::NoCrossing,
            "range-empty" => MissingReason::RangeEmpty,
            _ => match s.strip_prefix("stage-failure:") {
                Some(stage) if !stage.is_empty() => MissingReason::StageFailure(stage.to_string()),
                _ => {
                    return Err(Error::param(
                        "reason",
                        format!("unknown missing reason {s:?}"),
                    ))
                }
            },
        })
    }
}

impl Serialize for MissingReason {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for MissingReason {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MissingLength {
    pub t: usize,
    pub reason: MissingReason,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleSpectrum {
    pub found: BTreeMap<usize, CycleCertificate>,
    pub missing: Vec<MissingLength>,
}

impl CycleSpectrum {
    /// Found lengths over the `n - 2` lengths `3..=n`.
    pub fn found_ratio(&self, n: usize) -> f64 {
        self.found.len() as f64 / (n - 2) as f64
    }

    pub fn max_extra_edges(&self) -> usize {
        self.found
            .values()
            .map(|c| c.extra_count())
            .max()
            .unwrap_or(0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spectrum serializes")
    }
}

/// First `l`-shortcut of `g` under `labeling`, if any. Requires `2l <= n`.
pub fn find_shortcut(g: &Graph, labeling: &CycleLabeling, l: usize) -> Option<Shortcut> {
    shortcuts::find_shortcut_labeled(&labeling.relabel(g), l)
}

/// Crossing-pair certificate for a medium length `t`.
pub fn find_medium_cycle(
    g: &Graph,
    labeling: &CycleLabeling,
    t: usize,
    req: &SpectrumRequest,
) -> Option<CycleCertificate> {
    let ms = MediumSearch::new(
        labeling.relabel(g),
        req.beta,
        req.eps_prime,
        req.density_for(g),
    );
    ms.find(t)
}

/// Budget of the chord-bounded fallback search per length.
fn fallback_budget(n: usize) -> u64 {
    if n <= 16 {
        50_000_000
    } else {
        2_000_000
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Range {
    Tiny,
    Shortcut,
    Medium,
}

struct Finder {
    h: Graph,
    bipartite: bool,
    medium: MediumSearch,
}

impl Finder {
    fn via_shortcut(&self, t: usize) -> Option<CycleCertificate> {
        let n = self.h.n();
        if t >= 8 && 2 * (t - 8) <= n {
            if let Some(s) = shortcuts::find_shortcut_labeled(&self.h, t - 8) {
                return cycles_from_shortcut(&s, n).ok().map(|(short, _)| short);
            }
        }
        if 2 * (n - t) <= n {
            if let Some(s) = shortcuts::find_shortcut_labeled(&self.h, n - t) {
                return cycles_from_shortcut(&s, n).ok().map(|(_, long)| long);
            }
        }
        None
    }

    fn via_chords(&self, t: usize) -> Option<CycleCertificate> {
        let n = self.h.n();
        match find_cycle_with_chords(&self.h, t, 4, fallback_budget(n)) {
            (SearchOutcome::Found, Some(c)) => Some(CycleCertificate::from_cycle(c, n)),
            _ => None,
        }
    }

    fn length(
        &self,
        t: usize,
        range: Range,
    ) -> std::result::Result<CycleCertificate, MissingReason> {
        let n = self.h.n();
        if t == n {
            return Ok(CycleCertificate::from_cycle((0..n).collect(), n));
        }
        if t % 2 == 1 && self.bipartite {
            return Err(MissingReason::NoOddCycle);
        }
        match range {
            Range::Tiny => tiny::tiny_cycle_labeled(&self.h, t, self.bipartite),
            Range::Shortcut => self
                .via_shortcut(t)
                .or_else(|| self.medium.find(t))
                .or_else(|| self.via_chords(t))
                .ok_or(MissingReason::NoShortcut),
            Range::Medium => self
                .medium
                .find(t)
                .or_else(|| self.via_shortcut(t))
                .or_else(|| self.via_chords(t))
                .ok_or(MissingReason::NoCrossing),
        }
    }
}

/// Certificates for every length `3..=n`, each checked with
/// [`verify_certificate`] before it is reported.
pub fn find_all_cycles(
    g: &Graph,
    labeling: &CycleLabeling,
    req: &SpectrumRequest,
) -> Result<CycleSpectrum> {
    req.validate()?;
    labeling.validate(g)?;
    let n = g.n();
    let h = labeling.relabel(g);
    let finder = Finder {
        bipartite: h.bipartition().is_some(),
        medium: MediumSearch::new(h.clone(), req.beta, req.eps_prime, req.density_for(g)),
        h,
    };
    let edge = (req.delta * n as f64).floor() as usize;
    let range_of = |t: usize| {
        if t <= tiny::TINY_MAX {
            Range::Tiny
        } else if t <= edge || t >= n.saturating_sub(edge) {
            Range::Shortcut
        } else {
            Range::Medium
        }
    };
    let results: Vec<(usize, std::result::Result<CycleCertificate, MissingReason>)> = (3..=n)
        .into_par_iter()
        .map(|t| {
            let res = finder.length(t, range_of(t)).and_then(|c| {
                if c.t == t && verify_certificate(g, labeling, &c) {
                    Ok(c)
                } else {
                    log::error!("certificate for t = {t} failed verification and was dropped");
                    Err(MissingReason::StageFailure("verify".into()))
                }
            });
            (t, res)
        })
        .collect();
    let mut spectrum = CycleSpectrum::default();
    for (t, res) in results {
        match res {
            Ok(c) => {
                spectrum.found.insert(t, c);
            }
            Err(reason) => spectrum.missing.push(MissingLength { t, reason }),
        }
    }
    Ok(spectrum)
}
