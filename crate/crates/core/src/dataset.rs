//! In-memory data model for regression datasets of (possibly multivariate)
//! time series with a scalar target.
//!
//! Missing observations are stored as [`MISSING`] (a NaN). Timestamps are
//! implicit: value `i` of a dimension sits at index `i`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sentinel used for a missing observation.
pub const MISSING: f64 = f64::NAN;

#[inline]
pub fn is_missing(v: f64) -> bool {
    v.is_nan()
}

/// One multivariate series plus its continuous target.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimeSeriesInstance {
    dimensions: Vec<Vec<f64>>,
    target: f64,
}

impl TimeSeriesInstance {
    pub fn new(dimensions: Vec<Vec<f64>>, target: f64) -> Result<Self> {
        if dimensions.is_empty() {
            return Err(Error::InvalidInstance(
                "an instance needs at least one dimension".into(),
            ));
        }
        if let Some(j) = dimensions.iter().position(Vec::is_empty) {
            return Err(Error::InvalidInstance(format!("dimension {j} is empty")));
        }
        if !target.is_finite() {
            return Err(Error::InvalidInstance(format!("target {target} is not finite")));
        }
        Ok(Self { dimensions, target })
    }

    pub fn univariate(values: Vec<f64>, target: f64) -> Result<Self> {
        Self::new(vec![values], target)
    }

    /// Rebuilds an instance from a dimension-major flat vector.
    pub fn unflatten(values: &[f64], lengths: &[usize], target: f64) -> Result<Self> {
        let total: usize = lengths.iter().sum();
        if total != values.len() {
            return Err(Error::LengthMismatch {
                left: values.len(),
                right: total,
            });
        }
        let mut offset = 0;
        let dimensions = lengths
            .iter()
            .map(|&len| {
                let dim = values[offset..offset + len].to_vec();
                offset += len;
                dim
            })
            .collect();
        Self::new(dimensions, target)
    }

    pub fn dimensions(&self) -> &[Vec<f64>] {
        &self.dimensions
    }

    pub fn dimension(&self, j: usize) -> &[f64] {
        &self.dimensions[j]
    }

    pub fn n_dimensions(&self) -> usize {
        self.dimensions.len()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.dimensions.iter().map(Vec::len).collect()
    }

    pub fn total_length(&self) -> usize {
        self.dimensions.iter().map(Vec::len).sum()
    }

    pub fn target(&self) -> f64 {
        self.target
    }

    pub fn with_target(mut self, target: f64) -> Result<Self> {
        if !target.is_finite() {
            return Err(Error::InvalidInstance(format!("target {target} is not finite")));
        }
        self.target = target;
        Ok(self)
    }

    pub fn has_missing(&self) -> bool {
        self.dimensions.iter().flatten().any(|&v| is_missing(v))
    }

    /// Index of the first dimension containing a missing value.
    pub fn first_missing_dimension(&self) -> Option<usize> {
        self.dimensions.iter().position(|d| d.iter().any(|&v| is_missing(v)))
    }

    /// Fills gaps by linear interpolation between the nearest observed
    /// neighbours. Leading and trailing gaps hold the nearest observed value.
    pub fn interpolate_missing(&self) -> Result<Self> {
        let dimensions = self
            .dimensions
            .iter()
            .enumerate()
            .map(|(j, dim)| interpolate_series(dim).ok_or(Error::AllMissingDimension { dimension: j }))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            dimensions,
            target: self.target,
        })
    }

    /// Concatenates dimensions in order (dimension-major).
    pub fn flatten(&self) -> Result<Vec<f64>> {
        if let Some(dimension) = self.first_missing_dimension() {
            return Err(Error::MissingValuesPresent { dimension });
        }
        Ok(self.dimensions.concat())
    }

    /// Per-dimension z-normalisation. Constant dimensions become all zeros.
    pub fn z_normalized(&self) -> Self {
        let dimensions = self
            .dimensions
            .iter()
            .map(|dim| {
                let n = dim.len() as f64;
                let mean = dim.iter().sum::<f64>() / n;
                let var = dim.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n;
                let sd = var.sqrt();
                if sd > 0.0 {
                    dim.iter().map(|v| (v - mean) / sd).collect()
                } else {
                    vec![0.0; dim.len()]
                }
            })
            .collect();
        Self {
            dimensions,
            target: self.target,
        }
    }
}

/// Returns `None` when every value is missing.
fn interpolate_series(values: &[f64]) -> Option<Vec<f64>> {
    let observed: Vec<usize> = (0..values.len()).filter(|&i| !is_missing(values[i])).collect();
    let (&first, &last) = (observed.first()?, observed.last()?);
    let mut out = values.to_vec();
    out[..first].fill(values[first]);
    out[last + 1..].fill(values[last]);
    for pair in observed.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        if b - a < 2 {
            continue;
        }
        let (va, vb) = (values[a], values[b]);
        let span = (b - a) as f64;
        for (i, slot) in out.iter_mut().enumerate().take(b).skip(a + 1) {
            let t = (i - a) as f64 / span;
            *slot = va + (vb - va) * t;
        }
    }
    Some(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Split {
    #[default]
    Train,
    Test,
}

impl fmt::Display for Split {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Split::Train => "train",
            Split::Test => "test",
        })
    }
}

/// Named collection of instances from one split of a problem.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimeSeriesDataset {
    pub name: String,
    pub split: Split,
    instances: Vec<TimeSeriesInstance>,
}

impl TimeSeriesDataset {
    pub fn new(name: impl Into<String>, split: Split, instances: Vec<TimeSeriesInstance>) -> Self {
        Self {
            name: name.into(),
            split,
            instances,
        }
    }

    pub fn instances(&self) -> &[TimeSeriesInstance] {
        &self.instances
    }

    pub fn into_instances(self) -> Vec<TimeSeriesInstance> {
        self.instances
    }

    pub fn len(&self) -> usize {
        self.instances.len()
    }

    pub fn is_empty(&self) -> bool {
        self.instances.is_empty()
    }

    pub fn targets(&self) -> Vec<f64> {
        self.instances.iter().map(TimeSeriesInstance::target).collect()
    }

    /// Dimension count of the first instance.
    pub fn n_dimensions(&self) -> Option<usize> {
        self.instances.first().map(TimeSeriesInstance::n_dimensions)
    }

    /// Per-dimension lengths of the first instance.
    pub fn dimension_lengths(&self) -> Option<Vec<usize>> {
        self.instances.first().map(TimeSeriesInstance::lengths)
    }

    /// True when every dimension of every instance has the same length.
    pub fn equal_length(&self) -> bool {
        let mut lens = self.instances.iter().flat_map(|i| i.dimensions.iter().map(Vec::len));
        match lens.next() {
            Some(first) => lens.all(|l| l == first),
            None => true,
        }
    }

    pub fn series_length(&self) -> Option<usize> {
        if self.equal_length() {
            self.dimension_lengths().map(|l| l[0])
        } else {
            None
        }
    }

    pub fn has_missing(&self) -> bool {
        self.instances.iter().any(TimeSeriesInstance::has_missing)
    }

    pub fn validate(&self) -> ValidationReport {
        validate_dataset(self)
    }

    /// Fails with [`Error::InvalidDataset`] listing every violated invariant.
    pub fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidDataset(format!(
                "{}: {}",
                self.name,
                report.reasons().join("; ")
            )))
        }
    }

    pub fn interpolate_missing(&self) -> Result<Self> {
        let instances = self
            .instances
            .iter()
            .map(TimeSeriesInstance::interpolate_missing)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            name: self.name.clone(),
            split: self.split,
            instances,
        })
    }

    pub fn z_normalized(&self) -> Self {
        let instances = self.instances.iter().map(TimeSeriesInstance::z_normalized).collect();
        Self {
            name: self.name.clone(),
            split: self.split,
            instances,
        }
    }

    /// Rows of flattened instances.
    pub fn flatten_rows(&self) -> Result<Vec<Vec<f64>>> {
        self.instances.iter().map(TimeSeriesInstance::flatten).collect()
    }

    /// Checks that `other` has the same dimension count and per-dimension
    /// lengths as this dataset.
    pub fn check_compatible(&self, other: &TimeSeriesDataset) -> Result<()> {
        match (self.dimension_lengths(), other.dimension_lengths()) {
            (Some(a), Some(b)) if a != b => Err(Error::ShapeMismatch(format!("dimension lengths {a:?} vs {b:?}"))),
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Invariant {
    NonEmpty,
    DimensionCount,
    DimensionLengths,
    FiniteTargets,
}

impl Invariant {
    fn reason(self) -> &'static str {
        match self {
            Invariant::NonEmpty => "no instances",
            Invariant::DimensionCount => "dimension count mismatch",
            Invariant::DimensionLengths => "dimension length mismatch",
            Invariant::FiniteTargets => "non-finite target",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub invariant: Invariant,
    pub passed: bool,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// Short reason for every failed check, with detail when available.
    pub fn reasons(&self) -> Vec<String> {
        self.failed()
            .map(|c| match &c.detail {
                Some(d) => format!("{} ({d})", c.invariant.reason()),
                None => c.invariant.reason().to_string(),
            })
            .collect()
    }

    pub fn has_failure(&self, invariant: Invariant) -> bool {
        self.failed().any(|c| c.invariant == invariant)
    }
}

pub fn validate_dataset(ds: &TimeSeriesDataset) -> ValidationReport {
    let mut checks = Vec::with_capacity(4);
    let insts = ds.instances();

    checks.push(Check {
        invariant: Invariant::NonEmpty,
        passed: !insts.is_empty(),
        detail: None,
    });

    let d0 = insts.first().map(TimeSeriesInstance::n_dimensions);
    let bad_d = insts.iter().position(|i| Some(i.n_dimensions()) != d0);
    checks.push(Check {
        invariant: Invariant::DimensionCount,
        passed: bad_d.is_none(),
        detail: bad_d.map(|i| {
            format!(
                "instance {i} has {} dimensions, expected {}",
                insts[i].n_dimensions(),
                d0.unwrap_or(0)
            )
        }),
    });

    let l0 = insts.first().map(TimeSeriesInstance::lengths);
    let bad_l = if bad_d.is_none() {
        insts.iter().position(|i| Some(i.lengths()) != l0)
    } else {
        None
    };
    checks.push(Check {
        invariant: Invariant::DimensionLengths,
        passed: bad_l.is_none(),
        detail: bad_l.map(|i| {
            format!(
                "instance {i} has lengths {:?}, expected {:?}",
                insts[i].lengths(),
                l0.clone().unwrap_or_default()
            )
        }),
    });

    let bad_t = insts.iter().position(|i| !i.target().is_finite());
    checks.push(Check {
        invariant: Invariant::FiniteTargets,
        passed: bad_t.is_none(),
        detail: bad_t.map(|i| format!("instance {i}")),
    });

    ValidationReport { checks }
}
