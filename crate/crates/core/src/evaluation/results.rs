use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use super::{fractional_ranks, nemenyi_cd, nemenyi_q, scaled_rmse};
use crate::error::{Error, Result};

/// Mean test RMSE per dataset (rows) and algorithm (columns).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultsMatrix {
    pub datasets: Vec<String>,
    pub algorithms: Vec<String>,
    pub rmse: Vec<Vec<f64>>,
}

impl ResultsMatrix {
    pub fn new(datasets: Vec<String>, algorithms: Vec<String>, rmse: Vec<Vec<f64>>) -> Result<Self> {
        let m = Self {
            datasets,
            algorithms,
            rmse,
        };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<()> {
        if self.datasets.len() != self.rmse.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} dataset names for {} rows",
                self.datasets.len(),
                self.rmse.len()
            )));
        }
        if self.algorithms.is_empty() {
            return Err(Error::TooFewAlgorithms(0));
        }
        for (name, row) in self.datasets.iter().zip(&self.rmse) {
            if row.len() != self.algorithms.len() {
                return Err(Error::ShapeMismatch(format!(
                    "row {name} has {} values for {} algorithms",
                    row.len(),
                    self.algorithms.len()
                )));
            }
            if let Some(v) = row.iter().find(|v| !v.is_finite() || **v < 0.0) {
                return Err(Error::NonFinite(format!("RMSE {v} for dataset {name}")));
            }
        }
        Ok(())
    }

    pub fn n_datasets(&self) -> usize {
        self.datasets.len()
    }

    pub fn n_algorithms(&self) -> usize {
        self.algorithms.len()
    }

    pub fn algorithm_index(&self, name: &str) -> Option<usize> {
        self.algorithms.iter().position(|a| a == name)
    }

    pub fn column(&self, algorithm: usize) -> Vec<f64> {
        self.rmse.iter().map(|r| r[algorithm]).collect()
    }

    /// Each cell divided by itself plus the row median.
    pub fn scaled(&self) -> Result<Vec<Vec<f64>>> {
        self.rmse
            .iter()
            .map(|row| row.iter().map(|&v| scaled_rmse(v, row)).collect())
            .collect()
    }

    pub fn rank_table(&self, alpha: f64) -> RankTable {
        RankTable::from_results(self, alpha)
    }

    /// `dataset,<alg1>,<alg2>,...` with one row per dataset.
    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        let persist = |e: csv::Error| Error::Persistence(e.to_string());
        let mut header = vec!["dataset".to_string()];
        header.extend(self.algorithms.iter().cloned());
        w.write_record(&header).map_err(persist)?;
        for (name, row) in self.datasets.iter().zip(&self.rmse) {
            let mut rec = vec![name.clone()];
            rec.extend(row.iter().map(|v| format!("{v:?}")));
            w.write_record(&rec).map_err(persist)?;
        }
        w.flush().map_err(|e| Error::Persistence(e.to_string()))
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        // Writing into memory cannot fail.
        self.write_csv(&mut buf).expect("in-memory csv");
        String::from_utf8(buf).expect("csv is utf-8")
    }

    pub fn read_csv<R: Read>(reader: R) -> Result<Self> {
        let persist = |e: csv::Error| Error::Persistence(e.to_string());
        let mut r = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
        let header = r.headers().map_err(persist)?.clone();
        if header.len() < 2 {
            return Err(Error::Persistence(
                "results header needs a dataset column and one algorithm".into(),
            ));
        }
        let algorithms: Vec<String> = header.iter().skip(1).map(str::to_string).collect();
        let mut datasets = Vec::new();
        let mut rmse = Vec::new();
        for (i, rec) in r.records().enumerate() {
            let rec = rec.map_err(persist)?;
            datasets.push(rec.get(0).unwrap_or_default().to_string());
            let row = rec
                .iter()
                .skip(1)
                .map(|f| {
                    f.parse::<f64>()
                        .map_err(|_| Error::Persistence(format!("row {}: cannot parse {f:?} as a number", i + 2)))
                })
                .collect::<Result<Vec<_>>>()?;
            rmse.push(row);
        }
        Self::new(datasets, algorithms, rmse)
    }

    pub fn from_csv_str(s: &str) -> Result<Self> {
        Self::read_csv(s.as_bytes())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("results serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let m: Self = serde_json::from_str(s).map_err(|e| Error::Persistence(e.to_string()))?;
        m.validate()?;
        Ok(m)
    }
}

/// Per-dataset fractional ranks and their column means, with the Nemenyi
/// critical difference when `q_alpha` is tabulated for this many algorithms.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankTable {
    pub algorithms: Vec<String>,
    pub datasets: Vec<String>,
    pub ranks: Vec<Vec<f64>>,
    pub average_ranks: Vec<f64>,
    pub alpha: f64,
    pub q_alpha: Option<f64>,
    pub critical_difference: Option<f64>,
}

impl RankTable {
    pub fn from_results(results: &ResultsMatrix, alpha: f64) -> Self {
        let ranks: Vec<Vec<f64>> = results.rmse.iter().map(|r| fractional_ranks(r)).collect();
        let k = results.n_algorithms();
        let n = ranks.len();
        let average_ranks = (0..k)
            .map(|j| {
                if n == 0 {
                    f64::NAN
                } else {
                    ranks.iter().map(|r| r[j]).sum::<f64>() / n as f64
                }
            })
            .collect();
        let q_alpha = nemenyi_q(k, alpha).ok();
        let critical_difference = nemenyi_cd(k, n, alpha).ok();
        Self {
            algorithms: results.algorithms.clone(),
            datasets: results.datasets.clone(),
            ranks,
            average_ranks,
            alpha,
            q_alpha,
            critical_difference,
        }
    }

    pub fn n_datasets(&self) -> usize {
        self.ranks.len()
    }

    /// Algorithm indices from best (lowest average rank) to worst.
    pub fn order(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.algorithms.len()).collect();
        idx.sort_by(|&a, &b| self.average_ranks[a].total_cmp(&self.average_ranks[b]).then(a.cmp(&b)));
        idx
    }

    pub fn to_csv_string(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["dataset".to_string()];
        header.extend(self.algorithms.iter().cloned());
        w.write_record(&header).expect("in-memory csv");
        for (name, row) in self.datasets.iter().zip(&self.ranks) {
            let mut rec = vec![name.clone()];
            rec.extend(row.iter().map(|v| format!("{v:?}")));
            w.write_record(&rec).expect("in-memory csv");
        }
        let mut rec = vec!["average".to_string()];
        rec.extend(self.average_ranks.iter().map(|v| format!("{v:?}")));
        w.write_record(&rec).expect("in-memory csv");
        String::from_utf8(w.into_inner().expect("in-memory csv")).expect("csv is utf-8")
    }
}
