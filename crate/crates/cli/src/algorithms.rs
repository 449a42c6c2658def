//! Dispatch from configured algorithms to the core regressors.

use tser::knn::{KnnConfig, KnnRegressor};
use tser::linear::{FlattenedRidge, RidgeConfig};
use tser::rocket::{RocketConfig, RocketRegressor};
use tser::sofr::{flm_fit, BasisKind, Components};
use tser::TimeSeriesDataset;

use crate::config::{AlgorithmKind, AlgorithmSpec};

fn ridge_config(lambdas: &Option<Vec<f64>>) -> RidgeConfig {
    match lambdas {
        Some(l) => RidgeConfig {
            lambdas: l.clone(),
            ..RidgeConfig::default()
        },
        None => RidgeConfig::default(),
    }
}

/// Fits on `train` and predicts every instance of `test`.
pub fn fit_predict(
    spec: &AlgorithmSpec,
    train: &TimeSeriesDataset,
    test: &TimeSeriesDataset,
    seed: u64,
) -> tser::Result<Vec<f64>> {
    match &spec.kind {
        AlgorithmKind::Knn {
            k,
            distance,
            window,
            weighting,
        } => {
            let cfg = KnnConfig {
                weighting: *weighting,
                ..KnnConfig::new(*k, AlgorithmKind::distance(*distance, *window))
            };
            KnnRegressor::fit(train.clone(), cfg)?.predict_dataset(test)
        }
        AlgorithmKind::Rocket { n_kernels, lambdas } => {
            let cfg = RocketConfig {
                n_kernels: *n_kernels,
                seed,
                ridge: ridge_config(lambdas),
            };
            RocketRegressor::fit(train, &cfg)?.predict(test)
        }
        AlgorithmKind::Fpcr { components } => {
            let components = components.map(Components::Fixed).unwrap_or_default();
            flm_fit(train, BasisKind::Fpc { components })?.predict(test)
        }
        AlgorithmKind::FlmBspline { n_basis, degree } => flm_fit(
            train,
            BasisKind::BSpline {
                n_basis: *n_basis,
                degree: *degree,
            },
        )?
        .predict(test),
        AlgorithmKind::RidgeFlat { lambdas } => FlattenedRidge::fit(train, &ridge_config(lambdas))?.predict(test),
    }
}
