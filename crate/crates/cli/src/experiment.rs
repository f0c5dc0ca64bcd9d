//! Spectrum runs and keep-fraction sweeps over planted random graphs.

use std::collections::BTreeMap;
use std::io::Write;

use pancyclic::random::{plant_hamilton, RngSeed};
use pancyclic::{
    apply_adversary, find_all_cycles, good_directions, verify_certificate, AdversaryRecord,
    AdversarySpec, Error, MissingLength, SpectrumRequest,
};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::ExperimentConfig;

/// Bumped whenever the columns of any CSV output change.
pub const CSV_SCHEMA_VERSION: u32 = 1;

const PLANT_STREAM: u64 = 0;
const ADVERSARY_STREAM: u64 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrialReport {
    pub trial: usize,
    pub seed: u64,
    pub edges_g: usize,
    pub edges_g_prime: usize,
    /// `e(G′) / e(G)`.
    pub edge_fraction: f64,
    pub bad_directions: usize,
    pub found_count: usize,
    pub found_ratio: f64,
    pub missing: Vec<MissingLength>,
    pub max_extra_edges: usize,
    pub certificates_verified: bool,
    pub adversary: Option<AdversaryRecord>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Aggregate {
    pub trials: usize,
    pub failed_trials: usize,
    pub mean_edge_fraction: f64,
    pub mean_found_ratio: f64,
    pub std_found_ratio: f64,
    pub all_certificates_verified: bool,
    pub missing_by_reason: BTreeMap<String, usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub config: ExperimentConfig,
    pub p: f64,
    pub request: SpectrumRequest,
    pub trials: Vec<TrialReport>,
    pub aggregate: Aggregate,
}

impl ExperimentReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Per-trial summary rows.
    pub fn write_csv<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record([
            "schema_version",
            "trial",
            "seed",
            "edges_g",
            "edges_g_prime",
            "edge_fraction",
            "bad_directions",
            "found_count",
            "found_ratio",
            "missing_count",
            "max_extra_edges",
            "certificates_verified",
        ])?;
        for t in &self.trials {
            w.write_record([
                CSV_SCHEMA_VERSION.to_string(),
                t.trial.to_string(),
                t.seed.to_string(),
                t.edges_g.to_string(),
                t.edges_g_prime.to_string(),
                t.edge_fraction.to_string(),
                t.bad_directions.to_string(),
                t.found_count.to_string(),
                t.found_ratio.to_string(),
                t.missing.len().to_string(),
                t.max_extra_edges.to_string(),
                t.certificates_verified.to_string(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}

fn mean_std(xs: &[f64]) -> (f64, f64) {
    if xs.is_empty() {
        return (0.0, 0.0);
    }
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let std = if xs.len() > 1 {
        (xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt()
    } else {
        0.0
    };
    (mean, std)
}

fn run_trial(
    cfg: &ExperimentConfig,
    req: &SpectrumRequest,
    trial: usize,
) -> Result<TrialReport, Error> {
    let seed = cfg.trial_seed(trial);
    let (g, labeling) = plant_hamilton(&cfg.gnp()?, RngSeed::new(seed, PLANT_STREAM));
    let (gp, record) = match &cfg.adversary {
        Some(spec) => {
            let (gp, rec) =
                apply_adversary(spec, &g, &labeling, RngSeed::new(seed, ADVERSARY_STREAM))?;
            (gp, Some(rec))
        }
        None => (g.clone(), None),
    };
    let spectrum = find_all_cycles(&gp, &labeling, req)?;
    let verified = spectrum
        .found
        .values()
        .all(|c| verify_certificate(&gp, &labeling, c));
    let n = cfg.n;
    let density = req
        .p
        .unwrap_or(gp.edge_count() as f64 / (n * (n - 1) / 2) as f64);
    let bad = good_directions(&gp, &labeling, req.beta, req.eps_prime, density)?.bad_count;
    Ok(TrialReport {
        trial,
        seed,
        edges_g: g.edge_count(),
        edges_g_prime: gp.edge_count(),
        edge_fraction: gp.edge_count() as f64 / g.edge_count() as f64,
        bad_directions: bad,
        found_count: spectrum.found.len(),
        found_ratio: spectrum.found_ratio(n),
        max_extra_edges: spectrum.max_extra_edges(),
        missing: spectrum.missing,
        certificates_verified: verified,
        adversary: record,
        error: None,
    })
}

/// Plants, attacks and searches every trial. Trials run in parallel and are
/// folded in index order, so the report depends only on the config.
pub fn run_spectrum(cfg: &ExperimentConfig) -> Result<ExperimentReport, Error> {
    cfg.validate()?;
    let req = cfg.request()?;
    let trials: Vec<TrialReport> = (0..cfg.trials)
        .into_par_iter()
        .map(|k| {
            run_trial(cfg, &req, k).unwrap_or_else(|e| {
                log::warn!("trial {k} failed: {e}");
                TrialReport {
                    trial: k,
                    seed: cfg.trial_seed(k),
                    edges_g: 0,
                    edges_g_prime: 0,
                    edge_fraction: 0.0,
                    bad_directions: 0,
                    found_count: 0,
                    found_ratio: 0.0,
                    missing: Vec::new(),
                    max_extra_edges: 0,
                    certificates_verified: false,
                    adversary: None,
                    error: Some(e.to_string()),
                }
            })
        })
        .collect();

    let ok: Vec<&TrialReport> = trials.iter().filter(|t| t.error.is_none()).collect();
    let ratios: Vec<f64> = ok.iter().map(|t| t.found_ratio).collect();
    let (mean_found_ratio, std_found_ratio) = mean_std(&ratios);
    let fractions: Vec<f64> = ok.iter().map(|t| t.edge_fraction).collect();
    let mut missing_by_reason = BTreeMap::new();
    for m in ok.iter().flat_map(|t| &t.missing) {
        *missing_by_reason.entry(m.reason.to_string()).or_insert(0) += 1;
    }
    let aggregate = Aggregate {
        trials: trials.len(),
        failed_trials: trials.len() - ok.len(),
        mean_edge_fraction: mean_std(&fractions).0,
        mean_found_ratio,
        std_found_ratio,
        all_certificates_verified: trials.iter().all(|t| t.certificates_verified),
        missing_by_reason,
    };
    Ok(ExperimentReport {
        p: cfg.p(),
        config: cfg.clone(),
        request: req,
        trials,
        aggregate,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepPoint {
    pub fraction: f64,
    pub mean_found_ratio: f64,
    pub std_found_ratio: f64,
    pub trials: usize,
    /// Found ratio of trial `k`, in trial order.
    pub found_ratios: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub config: ExperimentConfig,
    pub points: Vec<SweepPoint>,
}

impl SweepReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn write_csv<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record([
            "schema_version",
            "fraction",
            "mean_found_ratio",
            "std_found_ratio",
            "trials",
        ])?;
        for pt in &self.points {
            w.write_record([
                CSV_SCHEMA_VERSION.to_string(),
                pt.fraction.to_string(),
                pt.mean_found_ratio.to_string(),
                pt.std_found_ratio.to_string(),
                pt.trials.to_string(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }

    /// Whether every trial's found ratio is non-decreasing along the fractions.
    pub fn per_trial_monotone(&self) -> bool {
        self.points.windows(2).all(|w| {
            w[0].found_ratios
                .iter()
                .zip(&w[1].found_ratios)
                .all(|(a, b)| a <= b)
        })
    }
}

/// One spectrum run per keep fraction with the uniform-thinning adversary.
/// Trial `k` uses the same seeds at every fraction, so its kept chord sets are
/// nested.
pub fn run_threshold_sweep(
    cfg: &ExperimentConfig,
    fractions: &[f64],
) -> Result<SweepReport, Error> {
    if fractions.is_empty() {
        return Err(Error::InvalidParameter {
            name: "fractions",
            reason: "need at least one keep fraction".into(),
        });
    }
    if fractions.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidParameter {
            name: "fractions",
            reason: "keep fractions must be strictly increasing".into(),
        });
    }
    let mut points = Vec::with_capacity(fractions.len());
    for &f in fractions {
        let run_cfg = ExperimentConfig {
            adversary: Some(AdversarySpec::uniform_thin(f)),
            ..cfg.clone()
        };
        let report = run_spectrum(&run_cfg)?;
        points.push(SweepPoint {
            fraction: f,
            mean_found_ratio: report.aggregate.mean_found_ratio,
            std_found_ratio: report.aggregate.std_found_ratio,
            trials: report.trials.len(),
            found_ratios: report.trials.iter().map(|t| t.found_ratio).collect(),
        });
    }
    Ok(SweepReport {
        config: cfg.clone(),
        points,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use pancyclic::{AdversaryKind, MissingReason};

    fn small(n: usize) -> ExperimentConfig {
        ExperimentConfig {
            n,
            trials: 3,
            seed: 7,
            ..Default::default()
        }
    }

    #[test]
    fn report_is_reproducible() {
        let cfg = small(60);
        let a = run_spectrum(&cfg).unwrap().to_json();
        let b = run_spectrum(&cfg).unwrap().to_json();
        assert_eq!(a, b);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        let c = pool.install(|| run_spectrum(&cfg).unwrap().to_json());
        assert_eq!(a, c);
    }

    #[test]
    fn bipartite_adversary_misses_every_odd_length() {
        let cfg = ExperimentConfig {
            adversary: Some(AdversarySpec::new(AdversaryKind::BipartiteEven)),
            ..small(40)
        };
        let report = run_spectrum(&cfg).unwrap();
        for t in &report.trials {
            assert!(t.error.is_none());
            let odd: Vec<_> = t.missing.iter().filter(|m| m.t % 2 == 1).collect();
            assert_eq!(odd.len(), 19);
            assert!(odd.iter().all(|m| m.reason == MissingReason::NoOddCycle));
        }
    }

    #[test]
    fn single_fraction_sweep_matches_spectrum() {
        let cfg = small(50);
        let sweep = run_threshold_sweep(&cfg, &[1.0]).unwrap();
        let direct = run_spectrum(&ExperimentConfig {
            adversary: Some(AdversarySpec::uniform_thin(1.0)),
            ..cfg.clone()
        })
        .unwrap();
        assert_eq!(
            sweep.points[0].mean_found_ratio,
            direct.aggregate.mean_found_ratio
        );
        let mut csv = Vec::new();
        sweep.write_csv(&mut csv).unwrap();
        let text = String::from_utf8(csv).unwrap();
        assert!(text
            .starts_with("schema_version,fraction,mean_found_ratio,std_found_ratio,trials\n1,1,"));
    }

    #[test]
    fn sweep_rejects_unsorted_fractions() {
        assert!(run_threshold_sweep(&small(30), &[0.5, 0.4]).is_err());
        assert!(run_threshold_sweep(&small(30), &[]).is_err());
    }
}
