//! k-nearest-neighbour regression over the distances in [`crate::distances`].

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dataset::{TimeSeriesDataset, TimeSeriesInstance};
use crate::distances::Distance;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Weighting {
    #[default]
    Uniform,
    InverseDistance,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KnnConfig {
    pub k: usize,
    pub distance: Distance,
    pub weighting: Weighting,
    /// Stop distance computations once they exceed the current k-th best.
    pub early_abandon: bool,
}

impl KnnConfig {
    pub fn new(k: usize, distance: Distance) -> Self {
        Self {
            k,
            distance,
            weighting: Weighting::Uniform,
            early_abandon: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct KnnRegressor {
    config: KnnConfig,
    train: TimeSeriesDataset,
}

impl KnnRegressor {
    pub fn fit(train: TimeSeriesDataset, config: KnnConfig) -> Result<Self> {
        if config.k == 0 {
            return Err(Error::InvalidParameter("k must be at least 1".into()));
        }
        if config.k > train.len() {
            return Err(Error::KTooLarge {
                k: config.k,
                available: train.len(),
            });
        }
        train.ensure_valid()?;
        if let Some(dimension) = train.instances().iter().find_map(|i| i.first_missing_dimension()) {
            return Err(Error::MissingValuesPresent { dimension });
        }
        Ok(Self { config, train })
    }

    pub fn config(&self) -> &KnnConfig {
        &self.config
    }

    pub fn training_set(&self) -> &TimeSeriesDataset {
        &self.train
    }

    /// The `k` nearest training indices with their distances, nearest first.
    /// Equal distances go to the smaller training index.
    pub fn neighbours(&self, query: &TimeSeriesInstance) -> Result<Vec<(usize, f64)>> {
        let k = self.config.k;
        let mut best: Vec<(usize, f64)> = Vec::with_capacity(k + 1);
        for (idx, inst) in self.train.instances().iter().enumerate() {
            let bound = if self.config.early_abandon && best.len() == k {
                best[k - 1].1
            } else {
                f64::INFINITY
            };
            let d = self.config.distance.evaluate_bounded(query, inst, bound)?;
            if best.len() == k && d >= best[k - 1].1 {
                continue;
            }
            // Strictly-smaller insertion keeps earlier indices ahead on ties.
            let pos = best.partition_point(|&(_, bd)| bd <= d);
            best.insert(pos, (idx, d));
            best.truncate(k);
        }
        Ok(best)
    }

    pub fn predict(&self, query: &TimeSeriesInstance) -> Result<f64> {
        let nn = self.neighbours(query)?;
        let targets = self.train.instances();
        Ok(match self.config.weighting {
            Weighting::Uniform => nn.iter().map(|&(i, _)| targets[i].target()).sum::<f64>() / nn.len() as f64,
            Weighting::InverseDistance => {
                if let Some(&(i, _)) = nn.iter().find(|&&(_, d)| d == 0.0) {
                    targets[i].target()
                } else {
                    let (num, den) = nn.iter().fold((0.0, 0.0), |(num, den), &(i, d)| {
                        (num + targets[i].target() / d, den + 1.0 / d)
                    });
                    num / den
                }
            }
        })
    }

    /// Predictions for every instance of `ds`, in order.
    pub fn predict_dataset(&self, ds: &TimeSeriesDataset) -> Result<Vec<f64>> {
        ds.instances().par_iter().map(|q| self.predict(q)).collect()
    }
}

pub fn knn_fit(train: TimeSeriesDataset, config: KnnConfig) -> Result<KnnRegressor> {
    KnnRegressor::fit(train, config)
}

pub fn knn_predict(model: &KnnRegressor, query: &TimeSeriesInstance) -> Result<f64> {
    model.predict(query)
}
