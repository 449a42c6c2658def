//! Scalar-on-function regression.
//!
//! Series are treated as functions sampled on a uniform grid over `[0, 1)`;
//! multivariate series are concatenated dimension-major first. Two
//! functional linear models are provided:
//!
//! * FPCR: regress the target on functional principal component scores.
//! * B-spline FLM: expand the coefficient function in an open-uniform
//!   B-spline basis and approximate the integral against each basis
//!   function with a left Riemann sum.

use nalgebra::{DMatrix, SVD};
use serde::{Deserialize, Serialize};

use crate::dataset::TimeSeriesDataset;
use crate::error::{Error, Result};
use crate::linear::{log_grid, ridge_fit_with, rows_to_matrix, RidgeConfig};

/// Left-Riemann grid point `m / len`.
#[inline]
fn grid_point(m: usize, len: usize) -> f64 {
    m as f64 / len as f64
}

/// Open-uniform knot vector on `[0, 1]` for `n_basis` functions.
pub fn open_uniform_knots(n_basis: usize, degree: usize) -> Result<Vec<f64>> {
    if n_basis < degree + 1 {
        return Err(Error::InvalidBasisSize(format!(
            "{n_basis} basis functions cannot carry degree {degree} (need at least {})",
            degree + 1
        )));
    }
    let interior = n_basis - degree - 1;
    let mut knots = vec![0.0; degree + 1];
    knots.extend((1..=interior).map(|i| i as f64 / (interior + 1) as f64));
    knots.extend(std::iter::repeat_n(1.0, degree + 1));
    Ok(knots)
}

/// Values of all `knots.len() - degree - 1` basis functions at `x` by the
/// Cox-de Boor recursion. The right end `x = 1` belongs to the last span.
pub fn bspline_values(knots: &[f64], degree: usize, x: f64) -> Vec<f64> {
    let n_basis = knots.len() - degree - 1;
    let last = knots[knots.len() - 1];
    let m = knots.len() - 1;
    let mut n: Vec<f64> = (0..m)
        .map(|i| {
            let (a, b) = (knots[i], knots[i + 1]);
            let inside = (a <= x && x < b) || (x == last && b == last && a < b);
            if inside {
                1.0
            } else {
                0.0
            }
        })
        .collect();
    for p in 1..=degree {
        let next: Vec<f64> = (0..m - p)
            .map(|i| {
                let left_den = knots[i + p] - knots[i];
                let right_den = knots[i + p + 1] - knots[i + 1];
                let left = if left_den > 0.0 {
                    (x - knots[i]) / left_den * n[i]
                } else {
                    0.0
                };
                let right = if right_den > 0.0 {
                    (knots[i + p + 1] - x) / right_den * n[i + 1]
                } else {
                    0.0
                };
                left + right
            })
            .collect();
        n = next;
    }
    n.truncate(n_basis);
    n
}

/// `len x n_basis` matrix of B-spline values on the grid `m / len`.
pub fn bspline_basis(len: usize, n_basis: usize, degree: usize) -> Result<DMatrix<f64>> {
    if len == 0 {
        return Err(Error::InvalidBasisSize("empty grid".into()));
    }
    let knots = open_uniform_knots(n_basis, degree)?;
    let mut out = DMatrix::zeros(len, n_basis);
    for m in 0..len {
        for (k, v) in bspline_values(&knots, degree, grid_point(m, len))
            .into_iter()
            .enumerate()
        {
            out[(m, k)] = v;
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Fpca {
    pub mean: Vec<f64>,
    /// One unit-norm loading vector per component.
    pub loadings: Vec<Vec<f64>>,
    /// `N x K` scores of the training rows.
    pub scores: Vec<Vec<f64>>,
    /// Explained-variance ratio per component, non-increasing.
    pub explained_variance: Vec<f64>,
}

/// Component count for FPCR.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Components {
    Fixed(usize),
    /// Smallest count reaching `threshold` explained variance, at most `cap`.
    ExplainedVariance {
        threshold: f64,
        cap: usize,
    },
}

impl Default for Components {
    fn default() -> Self {
        Components::ExplainedVariance {
            threshold: 0.95,
            cap: 10,
        }
    }
}

fn flattened_matrix(ds: &TimeSeriesDataset) -> Result<DMatrix<f64>> {
    ds.ensure_valid()?;
    rows_to_matrix(&ds.flatten_rows()?)
}

pub fn fpca_decompose(ds: &TimeSeriesDataset, n_components: usize) -> Result<Fpca> {
    let x = flattened_matrix(ds)?;
    fpca_matrix(&x, n_components)
}

fn fpca_matrix(x: &DMatrix<f64>, n_components: usize) -> Result<Fpca> {
    let (n, m) = x.shape();
    let max = n.min(m);
    if n_components == 0 {
        return Err(Error::InvalidParameter("need at least one component".into()));
    }
    if n_components > max {
        return Err(Error::KTooLarge {
            k: n_components,
            available: max,
        });
    }
    let mean: Vec<f64> = x.column_iter().map(|c| c.mean()).collect();
    let mut xc = x.clone();
    for (j, mut col) in xc.column_iter_mut().enumerate() {
        col.add_scalar_mut(-mean[j]);
    }

    let svd = SVD::new(xc.clone(), false, true);
    let v_t = svd.v_t.expect("requested right singular vectors");
    let sv = svd.singular_values;
    let mut order: Vec<usize> = (0..sv.len()).collect();
    order.sort_by(|&a, &b| sv[b].total_cmp(&sv[a]).then(a.cmp(&b)));

    let total: f64 = sv.iter().map(|s| s * s).sum();
    let mut loadings = Vec::with_capacity(n_components);
    let mut explained_variance = Vec::with_capacity(n_components);
    for &idx in order.iter().take(n_components) {
        let mut v: Vec<f64> = v_t.row(idx).iter().copied().collect();
        // Sign: largest-magnitude entry positive.
        let pivot = v
            .iter()
            .copied()
            .fold(0.0f64, |acc, e| if e.abs() > acc.abs() { e } else { acc });
        if pivot < 0.0 {
            v.iter_mut().for_each(|e| *e = -*e);
        }
        loadings.push(v);
        explained_variance.push(if total > 0.0 { sv[idx] * sv[idx] / total } else { 0.0 });
    }
    let scores = project(&xc, &loadings);
    Ok(Fpca {
        mean,
        loadings,
        scores,
        explained_variance,
    })
}

fn project(xc: &DMatrix<f64>, loadings: &[Vec<f64>]) -> Vec<Vec<f64>> {
    xc.row_iter()
        .map(|row| {
            loadings
                .iter()
                .map(|v| row.iter().zip(v).map(|(a, b)| a * b).sum())
                .collect()
        })
        .collect()
}

fn choose_components(x: &DMatrix<f64>, components: Components) -> Result<usize> {
    match components {
        Components::Fixed(k) => Ok(k),
        Components::ExplainedVariance { threshold, cap } => {
            let max = x.nrows().min(x.ncols()).min(cap.max(1));
            let full = fpca_matrix(x, max)?;
            let mut cumulative = 0.0;
            for (i, r) in full.explained_variance.iter().enumerate() {
                cumulative += r;
                if cumulative >= threshold {
                    return Ok(i + 1);
                }
            }
            Ok(max)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FunctionalBasis {
    Fpc {
        mean: Vec<f64>,
        loadings: Vec<Vec<f64>>,
        explained_variance: Vec<f64>,
    },
    BSpline {
        knots: Vec<f64>,
        degree: usize,
        n_basis: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BasisKind {
    Fpc { components: Components },
    BSpline { n_basis: usize, degree: usize },
}

impl BasisKind {
    pub fn default_bspline() -> Self {
        BasisKind::BSpline { n_basis: 7, degree: 3 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FunctionalLinearModel {
    pub basis: FunctionalBasis,
    pub lengths: Vec<usize>,
    pub basis_coefficients: Vec<f64>,
    /// Coefficient function on the flattened grid.
    pub coefficient_function: Vec<f64>,
    pub intercept: f64,
    pub lambda: f64,
    pub residuals: Vec<f64>,
}

/// Penalty grid for the B-spline model: `1e-8 ..= 1`, nine points.
pub fn light_lambda_grid() -> Vec<f64> {
    log_grid(1e-8, 1.0, 9)
}

pub fn fpcr_fit(train: &TimeSeriesDataset, components: Components) -> Result<FunctionalLinearModel> {
    flm_fit(train, BasisKind::Fpc { components })
}

pub fn flm_fit(train: &TimeSeriesDataset, kind: BasisKind) -> Result<FunctionalLinearModel> {
    let x = flattened_matrix(train)?;
    if !train.equal_length() {
        return Err(Error::ShapeMismatch(
            "functional models need equal-length dimensions".into(),
        ));
    }
    let lengths = train.dimension_lengths().unwrap_or_default();
    let y = train.targets();
    let grid_len = x.ncols();

    match kind {
        BasisKind::Fpc { components } => {
            let k = choose_components(&x, components)?;
            let fpca = fpca_matrix(&x, k)?;
            let z = rows_to_matrix(&fpca.scores)?;
            let ridge = ridge_fit_with(
                &z,
                &y,
                &RidgeConfig {
                    lambdas: vec![0.0],
                    fit_intercept: true,
                },
            )?;
            let mut beta = vec![0.0; grid_len];
            for (b, v) in ridge.coefficients.iter().zip(&fpca.loadings) {
                for (acc, vt) in beta.iter_mut().zip(v) {
                    *acc += b * vt;
                }
            }
            let fitted = ridge.predict(&z)?;
            let residuals = y.iter().zip(&fitted).map(|(t, f)| t - f).collect();
            Ok(FunctionalLinearModel {
                basis: FunctionalBasis::Fpc {
                    mean: fpca.mean,
                    loadings: fpca.loadings,
                    explained_variance: fpca.explained_variance,
                },
                lengths,
                basis_coefficients: ridge.coefficients,
                coefficient_function: beta,
                intercept: ridge.intercept,
                lambda: ridge.lambda,
                residuals,
            })
        }
        BasisKind::BSpline { n_basis, degree } => {
            let basis = bspline_basis(grid_len, n_basis, degree)?;
            let z = &x * &basis / grid_len as f64;
            let ridge = ridge_fit_with(
                &z,
                &y,
                &RidgeConfig {
                    lambdas: light_lambda_grid(),
                    fit_intercept: true,
                },
            )?;
            let beta: Vec<f64> = (0..grid_len)
                .map(|t| (0..n_basis).map(|k| basis[(t, k)] * ridge.coefficients[k]).sum())
                .collect();
            let fitted = ridge.predict(&z)?;
            let residuals = y.iter().zip(&fitted).map(|(t, f)| t - f).collect();
            Ok(FunctionalLinearModel {
                basis: FunctionalBasis::BSpline {
                    knots: open_uniform_knots(n_basis, degree)?,
                    degree,
                    n_basis,
                },
                lengths,
                basis_coefficients: ridge.coefficients,
                coefficient_function: beta,
                intercept: ridge.intercept,
                lambda: ridge.lambda,
                residuals,
            })
        }
    }
}

impl FunctionalLinearModel {
    pub fn predict(&self, ds: &TimeSeriesDataset) -> Result<Vec<f64>> {
        if let Some(inst) = ds.instances().iter().find(|i| i.lengths() != self.lengths) {
            return Err(Error::ShapeMismatch(format!(
                "model expects lengths {:?}, got {:?}",
                self.lengths,
                inst.lengths()
            )));
        }
        let rows = ds.flatten_rows()?;
        Ok(rows.iter().map(|r| self.predict_flat(r)).collect())
    }

    fn predict_flat(&self, row: &[f64]) -> f64 {
        match &self.basis {
            FunctionalBasis::Fpc { mean, .. } => {
                self.intercept
                    + row
                        .iter()
                        .zip(mean)
                        .zip(&self.coefficient_function)
                        .map(|((x, m), b)| (x - m) * b)
                        .sum::<f64>()
            }
            FunctionalBasis::BSpline { .. } => {
                let m = row.len() as f64;
                self.intercept
                    + row
                        .iter()
                        .zip(&self.coefficient_function)
                        .map(|(x, b)| x * b)
                        .sum::<f64>()
                        / m
            }
        }
    }

    /// Design-matrix row for the B-spline model (`None` for FPCR).
    pub fn design_row(&self, row: &[f64]) -> Option<Vec<f64>> {
        match &self.basis {
            FunctionalBasis::BSpline { knots, degree, n_basis } => {
                let len = row.len();
                let mut z = vec![0.0; *n_basis];
                for (t, x) in row.iter().enumerate() {
                    for (k, b) in bspline_values(knots, *degree, grid_point(t, len))
                        .into_iter()
                        .enumerate()
                    {
                        z[k] += x * b;
                    }
                }
                z.iter_mut().for_each(|v| *v /= len as f64);
                Some(z)
            }
            FunctionalBasis::Fpc { .. } => None,
        }
    }
}

pub fn flm_predict(model: &FunctionalLinearModel, ds: &TimeSeriesDataset) -> Result<Vec<f64>> {
    model.predict(ds)
}
