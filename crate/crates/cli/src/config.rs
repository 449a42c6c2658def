use std::collections::HashSet;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use tser::distances::{Distance, WarpingWindow};
use tser::knn::Weighting;

use crate::error::CliError;

/// Location of the public archive. `{name}` and `{split}` (`TRAIN`/`TEST`)
/// are substituted when present; otherwise `/<name>_<split>.ts` is appended.
pub const DEFAULT_ARCHIVE_URL: &str = "http://tseregression.org/data";

fn default_runs() -> usize {
    5
}

fn default_output_dir() -> PathBuf {
    PathBuf::from("results")
}

fn default_archive_url() -> String {
    DEFAULT_ARCHIVE_URL.to_string()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    /// Archive names, dataset directories, or paths to `*_TRAIN.ts` files.
    pub datasets: Vec<String>,
    pub algorithms: Vec<AlgorithmSpec>,
    #[serde(default = "default_runs")]
    pub runs: usize,
    #[serde(default)]
    pub base_seed: u64,
    #[serde(default = "default_output_dir")]
    pub output_dir: PathBuf,
    #[serde(default = "default_archive_url")]
    pub archive_url: String,
    #[serde(default)]
    pub cache_dir: Option<PathBuf>,
    /// Sweep cells evaluated concurrently; defaults to the rayon default.
    #[serde(default)]
    pub workers: Option<usize>,
}

impl ExperimentConfig {
    pub fn from_toml(text: &str) -> Result<Self, CliError> {
        let cfg: Self = toml::from_str(text).map_err(|e| CliError::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    /// Reads a config file. Relative paths inside it are taken relative to
    /// the file's directory.
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        let mut cfg = Self::from_toml(&text)?;
        let base = path.parent().unwrap_or(Path::new(""));
        // Joining an absolute path yields it unchanged.
        cfg.output_dir = base.join(&cfg.output_dir);
        cfg.cache_dir = cfg.cache_dir.as_deref().map(|p| base.join(p));
        for d in &mut cfg.datasets {
            let p = Path::new(d.as_str());
            if p.is_relative() && (d.contains('/') || d.ends_with(".ts")) {
                *d = base.join(p).to_string_lossy().into_owned();
            }
        }
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let bad = |m: String| Err(CliError::Config(m));
        if self.runs == 0 {
            return bad("runs must be at least 1".into());
        }
        if self.datasets.is_empty() {
            return bad("no datasets configured".into());
        }
        if self.algorithms.is_empty() {
            return bad("no algorithms configured".into());
        }
        if self.workers == Some(0) {
            return bad("workers must be at least 1".into());
        }
        let mut names = HashSet::new();
        for a in &self.algorithms {
            a.kind
                .validate()
                .map_err(|m| CliError::Config(format!("{}: {m}", a.name())))?;
            if !names.insert(a.name()) {
                return bad(format!("duplicate algorithm name {}", a.name()));
            }
        }
        Ok(())
    }

    /// Seed for run `run` of `algorithm`: `base_seed + run`, mixed with a
    /// hash of the algorithm name so that algorithms draw unrelated streams.
    pub fn run_seed(&self, algorithm: &str, run: usize) -> u64 {
        splitmix64(self.base_seed.wrapping_add(run as u64) ^ fnv1a(algorithm.as_bytes()))
    }
}

pub(crate) fn fnv1a(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0xcbf2_9ce4_8422_2325u64, |h, &b| {
        (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3)
    })
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlgorithmSpec {
    /// Column label in result tables; derived from the parameters if absent.
    #[serde(default)]
    pub name: Option<String>,
    #[serde(flatten)]
    pub kind: AlgorithmKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceKind {
    Ed,
    DtwD,
    DtwI,
}

fn default_window() -> f64 {
    0.1
}

fn default_kernels() -> usize {
    tser::rocket::DEFAULT_KERNEL_COUNT
}

fn default_n_basis() -> usize {
    7
}

fn default_degree() -> usize {
    3
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum AlgorithmKind {
    Knn {
        k: usize,
        distance: DistanceKind,
        #[serde(default = "default_window")]
        window: f64,
        #[serde(default)]
        weighting: Weighting,
    },
    Rocket {
        #[serde(default = "default_kernels")]
        n_kernels: usize,
        #[serde(default)]
        lambdas: Option<Vec<f64>>,
    },
    Fpcr {
        /// Fixed component count; by default chosen by explained variance.
        #[serde(default)]
        components: Option<usize>,
    },
    FlmBspline {
        #[serde(default = "default_n_basis")]
        n_basis: usize,
        #[serde(default = "default_degree")]
        degree: usize,
    },
    RidgeFlat {
        #[serde(default)]
        lambdas: Option<Vec<f64>>,
    },
}

impl AlgorithmKind {
    fn validate(&self) -> Result<(), String> {
        let check_lambdas = |l: &Option<Vec<f64>>| match l {
            Some(v) if v.is_empty() => Err("empty lambda grid".to_string()),
            Some(v) if v.iter().any(|x| !x.is_finite() || *x < 0.0) => {
                Err("lambdas must be finite and non-negative".to_string())
            }
            _ => Ok(()),
        };
        match self {
            AlgorithmKind::Knn { k, window, .. } => {
                if *k == 0 {
                    return Err("k must be at least 1".into());
                }
                WarpingWindow::new(*window).map(|_| ()).map_err(|e| e.to_string())
            }
            AlgorithmKind::Rocket { n_kernels, lambdas } => {
                if *n_kernels == 0 {
                    return Err("n_kernels must be at least 1".into());
                }
                check_lambdas(lambdas)
            }
            AlgorithmKind::Fpcr { components } => match components {
                Some(0) => Err("components must be at least 1".into()),
                _ => Ok(()),
            },
            AlgorithmKind::FlmBspline { n_basis, degree } => {
                if *n_basis <= *degree {
                    Err(format!("n_basis {n_basis} must exceed degree {degree}"))
                } else {
                    Ok(())
                }
            }
            AlgorithmKind::RidgeFlat { lambdas } => check_lambdas(lambdas),
        }
    }

    pub fn distance(kind: DistanceKind, window: f64) -> Distance {
        // Validated fractions only reach here.
        let window = WarpingWindow::new(window).unwrap_or_default();
        match kind {
            DistanceKind::Ed => Distance::Euclidean,
            DistanceKind::DtwD => Distance::DtwDependent { window },
            DistanceKind::DtwI => Distance::DtwIndependent { window },
        }
    }
}

impl AlgorithmSpec {
    pub fn new(kind: AlgorithmKind) -> Self {
        Self { name: None, kind }
    }

    pub fn name(&self) -> String {
        if let Some(n) = &self.name {
            return n.clone();
        }
        match &self.kind {
            AlgorithmKind::Knn { k, distance, .. } => {
                let d = match distance {
                    DistanceKind::Ed => "ED",
                    DistanceKind::DtwD => "DTWD",
                    DistanceKind::DtwI => "DTWI",
                };
                format!("{k}-NN-{d}")
            }
            AlgorithmKind::Rocket { .. } => "Rocket".into(),
            AlgorithmKind::Fpcr { .. } => "FPCR".into(),
            AlgorithmKind::FlmBspline { .. } => "FPCR-BSpline".into(),
            AlgorithmKind::RidgeFlat { .. } => "Ridge-Flat".into(),
        }
    }

    /// Whether repeated runs give identical results, so one run suffices.
    pub fn is_deterministic(&self) -> bool {
        !matches!(self.kind, AlgorithmKind::Rocket { .. })
    }

    /// Hash of the parameters, used to tell stale resume records apart.
    pub fn fingerprint(&self) -> u64 {
        fnv1a(serde_json::to_string(self).unwrap_or_default().as_bytes())
    }
}
