//! Seeded experiments over planted random graphs: spectrum runs, keep-fraction
//! sweeps and lemma checks, with JSON and CSV reports.

pub mod checks;
pub mod config;
pub mod experiment;

pub use checks::{run_lemma_checks, CheckInstance, CheckReport, LemmaCheck};
pub use config::ExperimentConfig;
pub use experiment::{
    run_spectrum, run_threshold_sweep, ExperimentReport, SweepPoint, SweepReport, TrialReport,
    CSV_SCHEMA_VERSION,
};
