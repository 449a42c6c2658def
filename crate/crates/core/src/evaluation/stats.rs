use serde::{Deserialize, Serialize};
use statrs::distribution::{ChiSquared, ContinuousCDF, FisherSnedecor};

use super::RankTable;
use crate::error::{Error, Result};

/// Two-tailed Nemenyi critical values `q_alpha` (studentized range over
/// `sqrt(2)`, infinite degrees of freedom) for k = 2..=20.
const Q_005: [f64; 19] = [
    1.960, 2.343, 2.569, 2.728, 2.850, 2.949, 3.031, 3.102, 3.164, 3.219, 3.268, 3.313, 3.354, 3.391, 3.426, 3.458,
    3.489, 3.517, 3.544,
];
const Q_010: [f64; 19] = [
    1.645, 2.052, 2.291, 2.459, 2.589, 2.693, 2.780, 2.855, 2.920, 2.978, 3.030, 3.077, 3.120, 3.159, 3.196, 3.230,
    3.261, 3.291, 3.319,
];

pub fn nemenyi_q(k: usize, alpha: f64) -> Result<f64> {
    let table = if (alpha - 0.05).abs() < 1e-12 {
        &Q_005
    } else if (alpha - 0.10).abs() < 1e-12 {
        &Q_010
    } else {
        return Err(Error::UnsupportedAlpha(alpha));
    };
    if !(2..=20).contains(&k) {
        return Err(Error::UnsupportedK(k));
    }
    Ok(table[k - 2])
}

/// Critical difference `q_alpha * sqrt(k (k + 1) / (6 N))`.
pub fn nemenyi_cd(k: usize, n_datasets: usize, alpha: f64) -> Result<f64> {
    if n_datasets == 0 {
        return Err(Error::TooFewDatasets(0));
    }
    let q = nemenyi_q(k, alpha)?;
    let (k, n) = (k as f64, n_datasets as f64);
    Ok(q * (k * (k + 1.0) / (6.0 * n)).sqrt())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FriedmanResult {
    pub statistic: f64,
    pub df: usize,
    pub p_value: f64,
    /// Iman-Davenport F statistic with `(k - 1, (k - 1)(N - 1))` degrees of freedom.
    pub iman_davenport: f64,
    pub iman_davenport_p_value: f64,
}

/// Friedman chi-square test on the average ranks of a rank table.
pub fn friedman_test(table: &RankTable) -> Result<FriedmanResult> {
    let k = table.algorithms.len();
    let n = table.n_datasets();
    if k < 3 {
        return Err(Error::TooFewAlgorithms(k));
    }
    if n < 2 {
        return Err(Error::TooFewDatasets(n));
    }
    let (kf, nf) = (k as f64, n as f64);
    let sum_sq: f64 = table.average_ranks.iter().map(|r| r * r).sum();
    let raw = 12.0 * nf / (kf * (kf + 1.0)) * (sum_sq - kf * (kf + 1.0).powi(2) / 4.0);
    // Rounding can leave a tiny negative value on fully tied tables.
    let statistic = if raw.abs() < 1e-9 { 0.0 } else { raw };
    let df = k - 1;
    let chi = ChiSquared::new(df as f64).map_err(|e| Error::InvalidParameter(e.to_string()))?;
    let p_value = chi.sf(statistic);

    let d1 = (k - 1) as f64;
    let d2 = ((k - 1) * (n - 1)) as f64;
    let denom = nf * (kf - 1.0) - statistic;
    let (iman_davenport, iman_davenport_p_value) = if denom <= 0.0 {
        (f64::INFINITY, 0.0)
    } else {
        let f = (nf - 1.0) * statistic / denom;
        let dist = FisherSnedecor::new(d1, d2).map_err(|e| Error::InvalidParameter(e.to_string()))?;
        (f, dist.sf(f))
    };
    Ok(FriedmanResult {
        statistic,
        df,
        p_value,
        iman_davenport,
        iman_davenport_p_value,
    })
}
