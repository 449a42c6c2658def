//! Random convolutional kernel transform with a ridge regression head.
//!
//! Each kernel reads a single input dimension and yields two features: the
//! maximum of its dilated feature map and the proportion of positive values
//! (PPV). Kernels are drawn from a ChaCha8 stream seeded with the model seed
//! in a fixed order (dimension assignment shuffle, then per kernel: length,
//! weights, bias, dilation, padding), so a seed reproduces the bank on every
//! platform.

use std::path::Path;

use nalgebra::DMatrix;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dataset::TimeSeriesDataset;
use crate::error::{Error, Result};
pub use crate::linear::FeatureScaler;
use crate::linear::{ridge_fit_with, RidgeConfig, RidgeModel};

pub const KERNEL_LENGTHS: [usize; 3] = [7, 9, 11];
pub const DEFAULT_KERNEL_COUNT: usize = 10_000;
const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RocketKernel {
    pub weights: Vec<f64>,
    pub bias: f64,
    pub dilation: usize,
    pub padding: usize,
    pub dimension: usize,
}

impl RocketKernel {
    pub fn length(&self) -> usize {
        self.weights.len()
    }

    /// Number of input samples covered by one application.
    pub fn span(&self) -> usize {
        (self.length().max(1) - 1) * self.dilation + 1
    }
}

/// Draws `count` kernels for inputs whose dimension `j` has length
/// `lengths[j]`. Dimensions are assigned round-robin, then shuffled.
pub fn generate_kernels(count: usize, lengths: &[usize], seed: u64) -> Result<Vec<RocketKernel>> {
    if count == 0 {
        return Err(Error::InvalidParameter("kernel count must be at least 1".into()));
    }
    if lengths.is_empty() {
        return Err(Error::InvalidParameter("no input dimensions".into()));
    }
    let shortest = KERNEL_LENGTHS[0];
    if let Some(&len) = lengths.iter().find(|&&l| l < shortest) {
        return Err(Error::SeriesTooShort {
            length: len,
            required: shortest,
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut assignment: Vec<usize> = (0..count).map(|i| i % lengths.len()).collect();
    assignment.shuffle(&mut rng);

    let kernels = assignment
        .into_iter()
        .map(|dimension| {
            let input_len = lengths[dimension];
            let allowed: Vec<usize> = KERNEL_LENGTHS.iter().copied().filter(|&l| l <= input_len).collect();
            let length = allowed[rng.random_range(0..allowed.len())];

            let mut weights: Vec<f64> = (0..length).map(|_| rng.sample(StandardNormal)).collect();
            let mean = weights.iter().sum::<f64>() / length as f64;
            weights.iter_mut().for_each(|w| *w -= mean);

            let bias = rng.random_range(-1.0..1.0);

            let max_exponent = ((input_len - 1) as f64 / (length - 1) as f64).log2();
            let exponent = rng.random_range(0.0..=max_exponent.max(0.0));
            let dilation = (2f64.powf(exponent).floor() as usize).max(1);

            let padding = if rng.random_bool(0.5) {
                ((length - 1) * dilation) / 2
            } else {
                0
            };

            RocketKernel {
                weights,
                bias,
                dilation,
                padding,
                dimension,
            }
        })
        .collect();
    Ok(kernels)
}

/// Returns `(max, ppv)` of the dilated feature map of `kernel` over `series`.
/// Reads outside the series (under padding) contribute zero.
pub fn apply_kernel(series: &[f64], kernel: &RocketKernel) -> Result<(f64, f64)> {
    let n = series.len();
    let span = kernel.span();
    let padded = n + 2 * kernel.padding;
    if padded < span {
        return Err(Error::SeriesTooShort {
            length: n,
            required: span.saturating_sub(2 * kernel.padding),
        });
    }
    let out_len = padded - span + 1;
    let (w, d, p) = (&kernel.weights, kernel.dilation, kernel.padding);
    let reach = span - 1;

    let mut max = f64::NEG_INFINITY;
    let mut positive = 0usize;
    for t in 0..out_len {
        let mut acc = kernel.bias;
        if t >= p && t - p + reach < n {
            let start = t - p;
            for (m, &wm) in w.iter().enumerate() {
                acc += wm * series[start + m * d];
            }
        } else {
            for (m, &wm) in w.iter().enumerate() {
                let idx = (t + m * d) as isize - p as isize;
                if idx >= 0 && (idx as usize) < n {
                    acc += wm * series[idx as usize];
                }
            }
        }
        if acc > max {
            max = acc;
        }
        if acc > 0.0 {
            positive += 1;
        }
    }
    Ok((max, positive as f64 / out_len as f64))
}

/// Feature matrix with columns `[max_0, ppv_0, max_1, ppv_1, ...]`.
pub fn rocket_transform(ds: &TimeSeriesDataset, kernels: &[RocketKernel]) -> Result<DMatrix<f64>> {
    if let Some(dimension) = ds.instances().iter().find_map(|i| i.first_missing_dimension()) {
        return Err(Error::MissingValuesPresent { dimension });
    }
    let rows: Vec<Vec<f64>> = ds
        .instances()
        .par_iter()
        .map(|inst| {
            let mut row = Vec::with_capacity(2 * kernels.len());
            for k in kernels {
                let series = inst.dimensions().get(k.dimension).ok_or_else(|| {
                    Error::ShapeMismatch(format!(
                        "kernel reads dimension {} of {}",
                        k.dimension,
                        inst.n_dimensions()
                    ))
                })?;
                let (mx, ppv) = apply_kernel(series, k)?;
                row.push(mx);
                row.push(ppv);
            }
            Ok(row)
        })
        .collect::<Result<_>>()?;
    Ok(DMatrix::from_fn(rows.len(), 2 * kernels.len(), |i, j| rows[i][j]))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RocketConfig {
    pub n_kernels: usize,
    pub seed: u64,
    pub ridge: RidgeConfig,
}

impl Default for RocketConfig {
    fn default() -> Self {
        Self {
            n_kernels: DEFAULT_KERNEL_COUNT,
            seed: 0,
            ridge: RidgeConfig::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RocketRegressor {
    pub seed: u64,
    pub input_lengths: Vec<usize>,
    pub kernels: Vec<RocketKernel>,
    pub scaler: FeatureScaler,
    pub ridge: RidgeModel,
}

#[derive(Serialize, Deserialize)]
struct Persisted {
    format: String,
    version: u32,
    model: RocketRegressor,
}

impl RocketRegressor {
    pub fn fit(train: &TimeSeriesDataset, cfg: &RocketConfig) -> Result<Self> {
        train.ensure_valid()?;
        let input_lengths = train.dimension_lengths().unwrap_or_default();
        let kernels = generate_kernels(cfg.n_kernels, &input_lengths, cfg.seed)?;
        let mut x = rocket_transform(train, &kernels)?;
        let scaler = FeatureScaler::fit(&x);
        scaler.transform(&mut x);
        let ridge = ridge_fit_with(&x, &train.targets(), &cfg.ridge)?;
        Ok(Self {
            seed: cfg.seed,
            input_lengths,
            kernels,
            scaler,
            ridge,
        })
    }

    pub fn n_features(&self) -> usize {
        2 * self.kernels.len()
    }

    /// Standardised features for `ds` under the training statistics.
    pub fn features(&self, ds: &TimeSeriesDataset) -> Result<DMatrix<f64>> {
        if let Some(inst) = ds.instances().iter().find(|i| i.lengths() != self.input_lengths) {
            return Err(Error::ShapeMismatch(format!(
                "model expects lengths {:?}, got {:?}",
                self.input_lengths,
                inst.lengths()
            )));
        }
        let mut x = rocket_transform(ds, &self.kernels)?;
        self.scaler.transform(&mut x);
        Ok(x)
    }

    pub fn predict(&self, ds: &TimeSeriesDataset) -> Result<Vec<f64>> {
        let x = self.features(ds)?;
        self.ridge.predict(&x)
    }

    pub fn to_json(&self) -> Result<String> {
        let doc = Persisted {
            format: "tser-rocket".into(),
            version: FORMAT_VERSION,
            model: self.clone(),
        };
        serde_json::to_string(&doc).map_err(|e| Error::Persistence(e.to_string()))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: Persisted = serde_json::from_str(text).map_err(|e| Error::Persistence(e.to_string()))?;
        if doc.format != "tser-rocket" || doc.version != FORMAT_VERSION {
            return Err(Error::Persistence(format!(
                "unsupported model format {} v{}",
                doc.format, doc.version
            )));
        }
        Ok(doc.model)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_json()?).map_err(|e| Error::Persistence(e.to_string()))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Persistence(e.to_string()))?;
        Self::from_json(&text)
    }
}

pub fn rocket_fit(train: &TimeSeriesDataset, count: usize, seed: u64) -> Result<RocketRegressor> {
    RocketRegressor::fit(
        train,
        &RocketConfig {
            n_kernels: count,
            seed,
            ..Default::default()
        },
    )
}

pub fn rocket_predict(model: &RocketRegressor, ds: &TimeSeriesDataset) -> Result<Vec<f64>> {
    model.predict(ds)
}
