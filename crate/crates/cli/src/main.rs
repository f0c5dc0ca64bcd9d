use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use pancyclic::hypergraph::build_shortcut_hypergraph;
use pancyclic::random::{plant_hamilton, RngSeed};
use pancyclic::{apply_adversary, AdversaryKind, AdversarySpec, CycleLabeling, Graph};
use pancyclic_cli::{
    run_lemma_checks, run_spectrum, run_threshold_sweep, ExperimentConfig, LemmaCheck,
    CSV_SCHEMA_VERSION,
};

#[derive(Parser)]
#[command(
    name = "pancyclic",
    version,
    about = "Pancyclicity experiments on planted random graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample G(n, p) plus a planted Hamilton cycle and write its edge list.
    Gen {
        #[command(flatten)]
        common: Common,
        /// Also write the Hamilton labeling here.
        #[arg(long)]
        labeling: Option<PathBuf>,
    },
    /// Apply an adversary to a planted (or given) graph.
    Adversary {
        #[command(flatten)]
        common: Common,
        /// Edge list to attack instead of a freshly planted graph.
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Labeling of `--graph`; identity when omitted.
        #[arg(long)]
        labeling: Option<PathBuf>,
    },
    /// Run the cycle finder on every trial and report the spectra.
    Spectrum {
        #[command(flatten)]
        common: Common,
    },
    /// Uniform thinning over a list of keep fractions.
    Sweep {
        #[command(flatten)]
        common: Common,
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "0.4,0.45,0.5,0.55,0.6,0.65,0.7"
        )]
        fractions: Vec<f64>,
    },
    /// Run one of the lemma checks.
    Check {
        which: CheckArg,
        #[command(flatten)]
        common: Common,
    },
    /// Enumerate the shortcut hypergraph and emit its regression row.
    Hypergraph {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckArg {
    Saturation,
    Goodness,
    Closecross,
    Boundedness,
    Peel,
    Posa,
}

impl From<CheckArg> for LemmaCheck {
    fn from(c: CheckArg) -> Self {
        match c {
            CheckArg::Saturation => LemmaCheck::Saturation,
            CheckArg::Goodness => LemmaCheck::Goodness,
            CheckArg::Closecross => LemmaCheck::Closecross,
            CheckArg::Boundedness => LemmaCheck::Boundedness,
            CheckArg::Peel => LemmaCheck::Peel,
            CheckArg::Posa => LemmaCheck::Posa,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    TriangleBreaker,
    BipartiteEven,
    NearBipartiteOdd,
    UniformThin,
}

impl From<KindArg> for AdversaryKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::TriangleBreaker => AdversaryKind::TriangleBreaker,
            KindArg::BipartiteEven => AdversaryKind::BipartiteEven,
            KindArg::NearBipartiteOdd => AdversaryKind::NearBipartiteOdd,
            KindArg::UniformThin => AdversaryKind::UniformThin,
        }
    }
}

/// Flags shared by every subcommand; each one overrides the config file.
#[derive(Args)]
struct Common {
    /// JSON config file.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, conflicts_with = "c")]
    p: Option<f64>,
    /// Density constant: p = C / sqrt(n).
    #[arg(long = "C", id = "c")]
    c: Option<f64>,
    #[arg(long)]
    eps: Option<f64>,
    #[arg(long)]
    delta: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long)]
    eps_prime: Option<f64>,
    #[arg(long)]
    adversary: Option<KindArg>,
    /// Keep fraction for uniform thinning.
    #[arg(long)]
    keep: Option<f64>,
    /// Shortcut gap for the hypergraph and boundedness runs.
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// CSV output path.
    #[arg(long)]
    out: Option<PathBuf>,
    /// JSON report path.
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long)]
    guard_n: Option<usize>,
}

impl Common {
    fn config(&self) -> Result<ExperimentConfig> {
        let mut cfg = match &self.config {
            Some(path) => ExperimentConfig::from_json_file(path)?,
            None => ExperimentConfig::default(),
        };
        macro_rules! set {
            ($($field:ident),*) => {
                $(if let Some(v) = self.$field.clone() { cfg.$field = v.into(); })*
            };
        }
        set!(n, eps, trials, seed, guard_n);
        set!(delta, beta, eps_prime, l, out, json);
        if let Some(p) = self.p {
            cfg.p = Some(p);
            cfg.c = None;
        }
        if let Some(c) = self.c {
            cfg.c = Some(c);
            cfg.p = None;
        }
        if let Some(kind) = self.adversary {
            let keep = self.keep.or(cfg.adversary.map(|a| a.keep_fraction));
            cfg.adversary = Some(AdversarySpec {
                kind: kind.into(),
                keep_fraction: keep.unwrap_or(1.0),
            });
        } else if let Some(keep) = self.keep {
            match cfg.adversary.as_mut() {
                Some(a) => a.keep_fraction = keep,
                None => cfg.adversary = Some(AdversarySpec::uniform_thin(keep)),
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

/// A failure that maps to exit code 1 rather than 2.
#[derive(Debug)]
struct ChecksFailed(String);

impl std::fmt::Display for ChecksFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ChecksFailed {}

fn create(path: &Path) -> Result<BufWriter<File>> {
    let f = File::create(path).with_context(|| format!("creating {}", path.display()))?;
    Ok(BufWriter::new(f))
}

/// Writes to `path`, or to stdout when there is none.
fn emit(path: Option<&Path>, write: impl FnOnce(&mut dyn Write) -> Result<()>) -> Result<()> {
    match path {
        Some(p) => {
            let mut w = create(p)?;
            write(&mut w)?;
            w.flush()
                .with_context(|| format!("writing {}", p.display()))
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            write(&mut lock)
        }
    }
}

fn write_json(path: Option<&Path>, text: &str) -> Result<()> {
    emit(path, |w| {
        writeln!(w, "{text}")?;
        Ok(())
    })
}

fn read_graph(path: &Path) -> Result<Graph> {
    let f = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    Graph::read_edge_list(BufReader::new(f)).with_context(|| format!("reading {}", path.display()))
}

fn read_labeling(path: &Path) -> Result<CycleLabeling> {
    let f = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    CycleLabeling::read(BufReader::new(f)).with_context(|| format!("reading {}", path.display()))
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Gen { common, labeling } => {
            let cfg = common.config()?;
            let (g, lab) = plant_hamilton(&cfg.gnp()?, RngSeed::new(cfg.trial_seed(0), 0));
            emit(cfg.out.as_deref(), |w| Ok(g.write_edge_list(w)?))?;
            if let Some(path) = labeling {
                let mut w = create(&path)?;
                lab.write(&mut w)?;
                w.flush()?;
            }
        }
        Command::Adversary {
            common,
            graph,
            labeling,
        } => {
            let cfg = common.config()?;
            let spec = cfg
                .adversary
                .context("no adversary given (use --adversary or the config file)")?;
            let seed = cfg.trial_seed(0);
            let (g, lab) = match &graph {
                Some(path) => {
                    let g = read_graph(path)?;
                    let lab = match &labeling {
                        Some(lp) => read_labeling(lp)?,
                        None => CycleLabeling::identity(g.n()),
                    };
                    (g, lab)
                }
                None => plant_hamilton(&cfg.gnp()?, RngSeed::new(seed, 0)),
            };
            lab.validate(&g)?;
            let (gp, record) = apply_adversary(&spec, &g, &lab, RngSeed::new(seed, 1))?;
            emit(cfg.out.as_deref(), |w| Ok(gp.write_edge_list(w)?))?;
            let text = serde_json::to_string(&record)?;
            if cfg.json.is_some() || cfg.out.is_some() {
                write_json(cfg.json.as_deref(), &text)?;
            } else {
                eprintln!("{text}");
            }
        }
        Command::Spectrum { common } => {
            let cfg = common.config()?;
            let report = run_spectrum(&cfg)?;
            if let Some(path) = &cfg.out {
                let mut w = create(path)?;
                report.write_csv(&mut w)?;
            }
            write_json(cfg.json.as_deref(), &report.to_json())?;
            let a = &report.aggregate;
            if !a.all_certificates_verified || a.failed_trials > 0 {
                return Err(ChecksFailed(format!(
                    "{} failed trials, certificates verified: {}",
                    a.failed_trials, a.all_certificates_verified
                ))
                .into());
            }
        }
        Command::Sweep { common, fractions } => {
            let cfg = common.config()?;
            let report = run_threshold_sweep(&cfg, &fractions)?;
            emit(cfg.out.as_deref(), |w| Ok(report.write_csv(w)?))?;
            if let Some(path) = &cfg.json {
                write_json(Some(path), &report.to_json())?;
            }
        }
        Command::Check { which, common } => {
            let cfg = common.config()?;
            let report = run_lemma_checks(which.into(), &cfg)?;
            write_json(cfg.json.as_deref(), &report.to_json())?;
            eprintln!(
                "{}: {} passed, {} failed",
                report.check, report.passed, report.failed
            );
            if !report.all_pass() {
                return Err(ChecksFailed(format!("{} check failed", report.check)).into());
            }
        }
        Command::Hypergraph { common } => {
            let cfg = common.config()?;
            let l = cfg.l.unwrap_or(0);
            let hg = build_shortcut_hypergraph(cfg.n, l, cfg.guard_n)?;
            let row = hg.regression_row();
            emit(cfg.out.as_deref(), |w| {
                let mut csv = csv::Writer::from_writer(w);
                csv.write_record(["schema_version", "n", "l", "edges", "c"])?;
                csv.write_record([
                    CSV_SCHEMA_VERSION.to_string(),
                    row.n.to_string(),
                    row.l.to_string(),
                    row.edges.to_string(),
                    row.c.to_string(),
                ])?;
                csv.flush()?;
                Ok(())
            })?;
            if let Some(path) = &cfg.json {
                write_json(Some(path), &serde_json::to_string_pretty(&row)?)?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is::<ChecksFailed>() => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
