//! Ridge regression with the penalty chosen by efficient leave-one-out
//! cross-validation, and a ridge baseline on flattened series.
//!
//! Features and target are centred, so the intercept is never penalised.
//! The system is solved through an eigendecomposition of either the
//! `p x p` Gram matrix or, when features outnumber rows, the `n x n`
//! kernel matrix. Both routes give the closed-form hat-matrix diagonal, so
//! every candidate penalty is scored for the cost of one factorisation.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::dataset::TimeSeriesDataset;
use crate::error::{Error, Result};

/// Ten log-spaced penalties over `[1e-3, 1e3]`.
pub fn default_lambda_grid() -> Vec<f64> {
    log_grid(1e-3, 1e3, 10)
}

pub fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    assert!(lo > 0.0 && hi >= lo && n >= 1);
    if n == 1 {
        return vec![lo];
    }
    let (a, b) = (lo.log10(), hi.log10());
    (0..n)
        .map(|i| 10f64.powf(a + (b - a) * i as f64 / (n - 1) as f64))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RidgeConfig {
    pub lambdas: Vec<f64>,
    pub fit_intercept: bool,
}

impl Default for RidgeConfig {
    fn default() -> Self {
        Self {
            lambdas: default_lambda_grid(),
            fit_intercept: true,
        }
    }
}

/// Mean squared leave-one-out residual for one candidate penalty.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LambdaScore {
    pub lambda: f64,
    pub score: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RidgeModel {
    pub coefficients: Vec<f64>,
    pub intercept: f64,
    pub lambda: f64,
    pub scores: Vec<LambdaScore>,
}

pub fn ridge_fit(x: &DMatrix<f64>, y: &[f64], lambdas: &[f64]) -> Result<RidgeModel> {
    ridge_fit_with(
        x,
        y,
        &RidgeConfig {
            lambdas: lambdas.to_vec(),
            fit_intercept: true,
        },
    )
}

pub fn ridge_fit_with(x: &DMatrix<f64>, y: &[f64], cfg: &RidgeConfig) -> Result<RidgeModel> {
    let (n, p) = x.shape();
    if p == 0 {
        return Err(Error::DegenerateSystem("feature matrix has no columns".into()));
    }
    if n != y.len() {
        return Err(Error::LengthMismatch {
            left: n,
            right: y.len(),
        });
    }
    if n < 2 {
        return Err(Error::DegenerateSystem(format!("need at least 2 rows, got {n}")));
    }
    if cfg.lambdas.is_empty() {
        return Err(Error::InvalidParameter("empty penalty grid".into()));
    }
    if let Some(l) = cfg.lambdas.iter().find(|l| !(l.is_finite() && **l >= 0.0)) {
        return Err(Error::InvalidParameter(format!(
            "penalty {l} must be finite and non-negative"
        )));
    }
    if x.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite("feature matrix".into()));
    }
    if y.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite("targets".into()));
    }

    let (x_mean, y_mean) = if cfg.fit_intercept {
        let xm: Vec<f64> = x.column_iter().map(|c| c.mean()).collect();
        (xm, y.iter().sum::<f64>() / n as f64)
    } else {
        (vec![0.0; p], 0.0)
    };
    let mut xc = x.clone();
    for (j, mut col) in xc.column_iter_mut().enumerate() {
        col.add_scalar_mut(-x_mean[j]);
    }
    let yc = DVector::from_iterator(n, y.iter().map(|v| v - y_mean));
    let base_leverage = if cfg.fit_intercept { 1.0 / n as f64 } else { 0.0 };

    let solver = if p <= n {
        Solver::primal(&xc, &yc)
    } else {
        Solver::dual(&xc, &yc)
    };

    let mut scores = Vec::with_capacity(cfg.lambdas.len());
    let mut best: Option<(usize, f64)> = None;
    for (i, &lambda) in cfg.lambdas.iter().enumerate() {
        let (fitted, leverage) = solver.fitted_and_leverage(lambda);
        let mut sse = 0.0;
        let mut defined = true;
        for r in 0..n {
            let denom = 1.0 - base_leverage - leverage[r];
            let resid = yc[r] - fitted[r];
            if denom <= 1e-12 {
                defined = false;
                break;
            }
            sse += (resid / denom).powi(2);
        }
        let score = if defined { sse / n as f64 } else { f64::INFINITY };
        scores.push(LambdaScore { lambda, score });
        if score.is_finite() && best.is_none_or(|(_, s)| score < s) {
            best = Some((i, score));
        }
    }
    // No finite score: fall back to the strongest penalty.
    let chosen = match best {
        Some((i, _)) => i,
        None => cfg
            .lambdas
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.total_cmp(b.1))
            .map(|(i, _)| i)
            .unwrap_or(0),
    };
    let lambda = cfg.lambdas[chosen];
    let beta = solver.coefficients(&xc, lambda);
    let intercept = y_mean - beta.iter().zip(&x_mean).map(|(b, m)| b * m).sum::<f64>();
    let coefficients: Vec<f64> = beta.iter().copied().collect();
    if coefficients.iter().any(|c| !c.is_finite()) {
        return Err(Error::DegenerateSystem("non-finite coefficients".into()));
    }
    Ok(RidgeModel {
        coefficients,
        intercept,
        lambda,
        scores,
    })
}

enum Solver {
    /// Gram `XᵀX = V S Vᵀ`; keeps `XV` and `VᵀXᵀy`.
    Primal {
        v: DMatrix<f64>,
        s: Vec<f64>,
        xv: DMatrix<f64>,
        vtxty: DVector<f64>,
        tol: f64,
    },
    /// Kernel `XXᵀ = U S Uᵀ`; keeps `Uᵀy`.
    Dual {
        u: DMatrix<f64>,
        s: Vec<f64>,
        uty: DVector<f64>,
        tol: f64,
    },
}

fn eig_tol(s: &[f64], dim: usize) -> f64 {
    let max = s.iter().copied().fold(0.0, f64::max);
    max * dim as f64 * f64::EPSILON
}

impl Solver {
    fn primal(xc: &DMatrix<f64>, yc: &DVector<f64>) -> Self {
        let gram = xc.tr_mul(xc);
        let eig = SymmetricEigen::new(gram);
        let s: Vec<f64> = eig.eigenvalues.iter().map(|v| v.max(0.0)).collect();
        let v = eig.eigenvectors;
        let xv = xc * &v;
        let vtxty = v.tr_mul(&xc.tr_mul(yc));
        let tol = eig_tol(&s, xc.ncols().max(xc.nrows()));
        Solver::Primal { v, s, xv, vtxty, tol }
    }

    fn dual(xc: &DMatrix<f64>, yc: &DVector<f64>) -> Self {
        let kernel = xc * xc.transpose();
        let eig = SymmetricEigen::new(kernel);
        let s: Vec<f64> = eig.eigenvalues.iter().map(|v| v.max(0.0)).collect();
        let u = eig.eigenvectors;
        let uty = u.tr_mul(yc);
        let tol = eig_tol(&s, xc.ncols().max(xc.nrows()));
        Solver::Dual { u, s, uty, tol }
    }

    /// Shrinkage `1 / (s + λ)`; numerically null directions are dropped,
    /// which makes `λ = 0` the pseudo-inverse solution.
    fn inv(s: f64, lambda: f64, tol: f64) -> f64 {
        if s <= tol {
            0.0
        } else {
            1.0 / (s + lambda)
        }
    }

    fn fitted_and_leverage(&self, lambda: f64) -> (DVector<f64>, Vec<f64>) {
        match self {
            Solver::Primal { s, xv, vtxty, tol, .. } => {
                let n = xv.nrows();
                let w: Vec<f64> = s.iter().map(|&sk| Self::inv(sk, lambda, *tol)).collect();
                let mut fitted = DVector::zeros(n);
                let mut lev = vec![0.0; n];
                for (k, &wk) in w.iter().enumerate() {
                    if wk == 0.0 {
                        continue;
                    }
                    let col = xv.column(k);
                    let c = wk * vtxty[k];
                    for r in 0..n {
                        fitted[r] += col[r] * c;
                        lev[r] += col[r] * col[r] * wk;
                    }
                }
                (fitted, lev)
            }
            Solver::Dual { u, s, uty, tol } => {
                let n = u.nrows();
                let mut fitted = DVector::zeros(n);
                let mut lev = vec![0.0; n];
                for (k, &sk) in s.iter().enumerate() {
                    let shrink = sk * Self::inv(sk, lambda, *tol);
                    if shrink == 0.0 {
                        continue;
                    }
                    let col = u.column(k);
                    let c = shrink * uty[k];
                    for r in 0..n {
                        fitted[r] += col[r] * c;
                        lev[r] += col[r] * col[r] * shrink;
                    }
                }
                (fitted, lev)
            }
        }
    }

    fn coefficients(&self, xc: &DMatrix<f64>, lambda: f64) -> DVector<f64> {
        match self {
            Solver::Primal { v, s, vtxty, tol, .. } => {
                let scaled = DVector::from_iterator(
                    s.len(),
                    s.iter()
                        .zip(vtxty.iter())
                        .map(|(&sk, &t)| Self::inv(sk, lambda, *tol) * t),
                );
                v * scaled
            }
            Solver::Dual { u, s, uty, tol } => {
                let scaled = DVector::from_iterator(
                    s.len(),
                    s.iter()
                        .zip(uty.iter())
                        .map(|(&sk, &t)| Self::inv(sk, lambda, *tol) * t),
                );
                let alpha = u * scaled;
                xc.tr_mul(&alpha)
            }
        }
    }
}

impl RidgeModel {
    pub fn n_features(&self) -> usize {
        self.coefficients.len()
    }

    pub fn predict(&self, x: &DMatrix<f64>) -> Result<Vec<f64>> {
        if x.ncols() != self.coefficients.len() {
            return Err(Error::ShapeMismatch(format!(
                "model has {} features, input has {}",
                self.coefficients.len(),
                x.ncols()
            )));
        }
        let beta = DVector::from_column_slice(&self.coefficients);
        Ok((x * beta).iter().map(|v| v + self.intercept).collect())
    }

    pub fn predict_row(&self, row: &[f64]) -> Result<f64> {
        if row.len() != self.coefficients.len() {
            return Err(Error::ShapeMismatch(format!(
                "model has {} features, input has {}",
                self.coefficients.len(),
                row.len()
            )));
        }
        Ok(self.intercept + row.iter().zip(&self.coefficients).map(|(a, b)| a * b).sum::<f64>())
    }
}

pub fn ridge_predict(model: &RidgeModel, x: &DMatrix<f64>) -> Result<Vec<f64>> {
    model.predict(x)
}

pub fn rows_to_matrix(rows: &[Vec<f64>]) -> Result<DMatrix<f64>> {
    let n = rows.len();
    let p = rows.first().map_or(0, Vec::len);
    if let Some(bad) = rows.iter().find(|r| r.len() != p) {
        return Err(Error::LengthMismatch {
            left: bad.len(),
            right: p,
        });
    }
    Ok(DMatrix::from_fn(n, p, |i, j| rows[i][j]))
}

/// Per-column standardisation learned on training features.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureScaler {
    pub means: Vec<f64>,
    pub stds: Vec<f64>,
    /// False for zero-variance columns, which are mapped to 0.
    pub retained: Vec<bool>,
}

impl FeatureScaler {
    pub fn fit(x: &DMatrix<f64>) -> Self {
        let n = x.nrows().max(1) as f64;
        let mut means = Vec::with_capacity(x.ncols());
        let mut stds = Vec::with_capacity(x.ncols());
        let mut retained = Vec::with_capacity(x.ncols());
        for col in x.column_iter() {
            let mean = col.sum() / n;
            let var = col.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n;
            let sd = var.sqrt();
            let keep = sd > 1e-10 * mean.abs().max(1.0);
            means.push(mean);
            stds.push(if keep { sd } else { 1.0 });
            retained.push(keep);
        }
        Self { means, stds, retained }
    }

    pub fn transform(&self, x: &mut DMatrix<f64>) {
        for (j, mut col) in x.column_iter_mut().enumerate() {
            if self.retained[j] {
                let (m, s) = (self.means[j], self.stds[j]);
                col.apply(|v| *v = (*v - m) / s);
            } else {
                col.fill(0.0);
            }
        }
    }
}

/// Ridge regression on instances flattened into one long feature vector.
/// Time points are standardised on the training set first, so the penalty
/// grid does not depend on the scale of the series.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FlattenedRidge {
    pub lengths: Vec<usize>,
    pub scaler: FeatureScaler,
    pub ridge: RidgeModel,
}

impl FlattenedRidge {
    pub fn fit(train: &TimeSeriesDataset, cfg: &RidgeConfig) -> Result<Self> {
        train.ensure_valid()?;
        let lengths = train.dimension_lengths().unwrap_or_default();
        let mut x = rows_to_matrix(&train.flatten_rows()?)?;
        let scaler = FeatureScaler::fit(&x);
        scaler.transform(&mut x);
        let ridge = ridge_fit_with(&x, &train.targets(), cfg)?;
        Ok(Self { lengths, scaler, ridge })
    }

    pub fn predict(&self, ds: &TimeSeriesDataset) -> Result<Vec<f64>> {
        if let Some(inst) = ds.instances().iter().find(|i| i.lengths() != self.lengths) {
            return Err(Error::ShapeMismatch(format!(
                "expected lengths {:?}, got {:?}",
                self.lengths,
                inst.lengths()
            )));
        }
        let mut x = rows_to_matrix(&ds.flatten_rows()?)?;
        self.scaler.transform(&mut x);
        self.ridge.predict(&x)
    }
}
