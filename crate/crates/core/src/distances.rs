//! Lock-step and elastic distances between multivariate series.
//!
//! DTW uses squared point costs and takes the square root of the
//! accumulated minimum, so a zero-width band coincides with the Euclidean
//! distance on univariate series.

use serde::{Deserialize, Serialize};

use crate::dataset::{is_missing, TimeSeriesInstance};
use crate::error::{Error, Result};

/// Sakoe-Chiba band expressed as a fraction of the series length.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WarpingWindow {
    fraction: f64,
}

impl WarpingWindow {
    pub fn new(fraction: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&fraction) {
            return Err(Error::InvalidParameter(format!(
                "warping fraction {fraction} not in [0, 1]"
            )));
        }
        Ok(Self { fraction })
    }

    pub fn unconstrained() -> Self {
        Self { fraction: 1.0 }
    }

    pub fn diagonal() -> Self {
        Self { fraction: 0.0 }
    }

    pub fn fraction(&self) -> f64 {
        self.fraction
    }

    /// Band half-width `floor(fraction * len)`.
    pub fn resolved_width(&self, len: usize) -> usize {
        ((self.fraction * len as f64).floor() as usize).min(len)
    }
}

impl Default for WarpingWindow {
    fn default() -> Self {
        Self { fraction: 0.1 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Distance {
    Euclidean,
    DtwDependent { window: WarpingWindow },
    DtwIndependent { window: WarpingWindow },
}

impl Distance {
    pub fn evaluate(&self, p: &TimeSeriesInstance, q: &TimeSeriesInstance) -> Result<f64> {
        self.evaluate_bounded(p, q, f64::INFINITY)
    }

    /// Like [`Distance::evaluate`], but may return `f64::INFINITY` as soon as
    /// the distance is known to exceed `bound`. Values not exceeding `bound`
    /// are returned exactly as the unbounded computation would.
    pub fn evaluate_bounded(&self, p: &TimeSeriesInstance, q: &TimeSeriesInstance, bound: f64) -> Result<f64> {
        match *self {
            Distance::Euclidean => euclidean_bounded(p, q, bound),
            Distance::DtwDependent { window } => dtw_dependent_bounded(p, q, window, bound),
            Distance::DtwIndependent { window } => dtw_independent_bounded(p, q, window, bound),
        }
    }
}

fn check_shapes(p: &TimeSeriesInstance, q: &TimeSeriesInstance) -> Result<()> {
    if p.n_dimensions() != q.n_dimensions() {
        return Err(Error::ShapeMismatch(format!(
            "{} vs {} dimensions",
            p.n_dimensions(),
            q.n_dimensions()
        )));
    }
    for (j, (a, b)) in p.dimensions().iter().zip(q.dimensions()).enumerate() {
        if a.len() != b.len() {
            return Err(Error::ShapeMismatch(format!(
                "dimension {j}: length {} vs {}",
                a.len(),
                b.len()
            )));
        }
    }
    for inst in [p, q] {
        if let Some(dimension) = inst.first_missing_dimension() {
            return Err(Error::MissingValuesPresent { dimension });
        }
    }
    Ok(())
}

/// Sum over dimensions of the per-dimension Euclidean norm of `p - q`.
pub fn euclidean_distance(p: &TimeSeriesInstance, q: &TimeSeriesInstance) -> Result<f64> {
    euclidean_bounded(p, q, f64::INFINITY)
}

fn euclidean_bounded(p: &TimeSeriesInstance, q: &TimeSeriesInstance, bound: f64) -> Result<f64> {
    check_shapes(p, q)?;
    let mut total = 0.0;
    for (a, b) in p.dimensions().iter().zip(q.dimensions()) {
        total += squared_euclidean(a, b).sqrt();
        if total > bound {
            return Ok(f64::INFINITY);
        }
    }
    Ok(total)
}

#[inline]
fn squared_euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// Multivariate DTW with the point cost summed over all dimensions.
/// Requires every dimension to share one length.
pub fn dtw_dependent(p: &TimeSeriesInstance, q: &TimeSeriesInstance, window: WarpingWindow) -> Result<f64> {
    dtw_dependent_bounded(p, q, window, f64::INFINITY)
}

fn dtw_dependent_bounded(
    p: &TimeSeriesInstance,
    q: &TimeSeriesInstance,
    window: WarpingWindow,
    bound: f64,
) -> Result<f64> {
    check_shapes(p, q)?;
    let len = p.dimension(0).len();
    if p.dimensions().iter().any(|d| d.len() != len) {
        return Err(Error::ShapeMismatch(
            "dependent DTW needs a common length across dimensions; use independent DTW".into(),
        ));
    }
    let (pd, qd) = (p.dimensions(), q.dimensions());
    let band = window.resolved_width(len);
    let acc = if pd.len() == 1 {
        let (a, b) = (&pd[0], &qd[0]);
        dtw_accumulate(len, band, sq_bound(bound), |i, k| (a[i] - b[k]) * (a[i] - b[k]))
    } else {
        dtw_accumulate(len, band, sq_bound(bound), |i, k| {
            pd.iter().zip(qd).map(|(a, b)| (a[i] - b[k]) * (a[i] - b[k])).sum()
        })
    };
    Ok(finish(acc))
}

/// Sum of univariate DTW distances, one per dimension, each banded from its
/// own length.
pub fn dtw_independent(p: &TimeSeriesInstance, q: &TimeSeriesInstance, window: WarpingWindow) -> Result<f64> {
    dtw_independent_bounded(p, q, window, f64::INFINITY)
}

fn dtw_independent_bounded(
    p: &TimeSeriesInstance,
    q: &TimeSeriesInstance,
    window: WarpingWindow,
    bound: f64,
) -> Result<f64> {
    check_shapes(p, q)?;
    let mut total = 0.0;
    for (a, b) in p.dimensions().iter().zip(q.dimensions()) {
        let band = window.resolved_width(a.len());
        let acc = dtw_accumulate(a.len(), band, sq_bound(bound - total), |i, k| {
            (a[i] - b[k]) * (a[i] - b[k])
        });
        total += finish(acc);
        if total > bound {
            return Ok(f64::INFINITY);
        }
    }
    Ok(total)
}

/// Univariate DTW on raw slices of equal length.
pub fn dtw_series(a: &[f64], b: &[f64], band: usize) -> f64 {
    assert_eq!(a.len(), b.len(), "dtw_series needs equal lengths");
    debug_assert!(!a.iter().chain(b).any(|&v| is_missing(v)));
    finish(dtw_accumulate(a.len(), band, f64::INFINITY, |i, k| {
        (a[i] - b[k]) * (a[i] - b[k])
    }))
}

// Slack keeps rounding in `bound * bound` from abandoning a path whose
// final cost would not exceed the bound.
fn sq_bound(bound: f64) -> f64 {
    if bound.is_finite() {
        bound.max(0.0) * bound.max(0.0) * (1.0 + 1e-9) + f64::MIN_POSITIVE
    } else {
        f64::INFINITY
    }
}

fn finish(acc: f64) -> f64 {
    if acc.is_finite() {
        acc.sqrt()
    } else {
        f64::INFINITY
    }
}

/// Banded DTW recurrence over an `n x n` grid with two rolling rows.
/// Returns the accumulated cost, or infinity once every cell of a row
/// exceeds `abandon_above`.
fn dtw_accumulate(n: usize, band: usize, abandon_above: f64, cost: impl Fn(usize, usize) -> f64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    let mut prev = vec![f64::INFINITY; n];
    let mut curr = vec![f64::INFINITY; n];
    for i in 0..n {
        let lo = i.saturating_sub(band);
        let hi = (i + band).min(n - 1);
        let mut row_min = f64::INFINITY;
        if lo > 0 {
            curr[lo - 1] = f64::INFINITY;
        }
        for k in lo..=hi {
            let best = if i == 0 && k == 0 {
                0.0
            } else {
                let up = if i > 0 { prev[k] } else { f64::INFINITY };
                let left = if k > 0 { curr[k - 1] } else { f64::INFINITY };
                let diag = if i > 0 && k > 0 { prev[k - 1] } else { f64::INFINITY };
                up.min(left).min(diag)
            };
            let v = cost(i, k) + best;
            curr[k] = v;
            row_min = row_min.min(v);
        }
        if hi + 1 < n {
            curr[hi + 1] = f64::INFINITY;
        }
        if row_min > abandon_above {
            return f64::INFINITY;
        }
        std::mem::swap(&mut prev, &mut curr);
    }
    prev[n - 1]
}
