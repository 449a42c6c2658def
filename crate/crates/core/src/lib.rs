//! Extrinsic regression on time series: predicting a continuous scalar from
//! a whole (possibly multivariate) series.
//!
//! The crate covers the `.ts` data format, elastic distances, k-NN and
//! random-kernel regressors, ridge and functional linear models, and the
//! rank-based statistics used to compare regressors across datasets.

pub mod archive;
pub mod dataset;
pub mod distances;
pub mod error;
pub mod evaluation;
pub mod knn;
pub mod linear;
pub mod rocket;
pub mod sofr;
pub mod ts_format;

pub use dataset::{Split, TimeSeriesDataset, TimeSeriesInstance, ValidationReport};
pub use distances::{Distance, WarpingWindow};
pub use error::{Error, Result};
pub use evaluation::{rmse, RankTable, ResultsMatrix};
pub use knn::{KnnConfig, KnnRegressor, Weighting};
pub use linear::{FlattenedRidge, RidgeConfig, RidgeModel};
pub use rocket::{RocketConfig, RocketRegressor};
pub use sofr::{BasisKind, Components, FunctionalLinearModel};
pub use ts_format::{read_ts_file, write_ts_file, FormatError};
