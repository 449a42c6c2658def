//! Error metrics, rankings and the statistical comparison of regressors
//! across datasets.

mod diagram;
pub mod published;
mod results;
mod stats;

pub use diagram::{cd_cliques, render_cd_diagram, CdDiagram};
pub use results::{RankTable, ResultsMatrix};
pub use stats::{friedman_test, nemenyi_cd, nemenyi_q, FriedmanResult};

use crate::error::{Error, Result};

/// Root mean squared error.
pub fn rmse(predictions: &[f64], targets: &[f64]) -> Result<f64> {
    if predictions.len() != targets.len() {
        return Err(Error::LengthMismatch {
            left: predictions.len(),
            right: targets.len(),
        });
    }
    if predictions.is_empty() {
        return Err(Error::EmptyInput);
    }
    let sse: f64 = predictions.iter().zip(targets).map(|(p, t)| (p - t) * (p - t)).sum();
    Ok((sse / predictions.len() as f64).sqrt())
}

/// Median; even counts average the two central values.
pub fn median(values: &[f64]) -> Option<f64> {
    if values.is_empty() {
        return None;
    }
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let mid = v.len() / 2;
    Some(if v.len().is_multiple_of(2) {
        (v[mid - 1] + v[mid]) / 2.0
    } else {
        v[mid]
    })
}

/// `value / (value + median(all))`. Returns 0.5 when both are zero.
pub fn scaled_rmse(value: f64, all: &[f64]) -> Result<f64> {
    let med = median(all).ok_or(Error::EmptyInput)?;
    if value < 0.0 || all.iter().any(|v| *v < 0.0 || !v.is_finite()) || !value.is_finite() {
        return Err(Error::InvalidParameter(
            "RMSE values must be finite and non-negative".into(),
        ));
    }
    let denom = value + med;
    Ok(if denom == 0.0 { 0.5 } else { value / denom })
}

/// Ascending fractional ranks (1 = smallest); ties share the mean rank.
pub fn fractional_ranks(row: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..row.len()).collect();
    order.sort_by(|&a, &b| row[a].total_cmp(&row[b]));
    let mut ranks = vec![0.0; row.len()];
    let mut i = 0;
    while i < order.len() {
        let mut j = i;
        while j + 1 < order.len() && row[order[j + 1]] == row[order[i]] {
            j += 1;
        }
        let shared = (i + j) as f64 / 2.0 + 1.0;
        for &idx in &order[i..=j] {
            ranks[idx] = shared;
        }
        i = j + 1;
    }
    ranks
}
