//! Seeded multi-run sweeps over datasets and algorithms.
//!
//! Each finished run is appended to `runs.jsonl` in the output directory.
//! A rerun reads that file back and only evaluates cells that are missing
//! or failed, so an interrupted sweep can be resumed by running it again.

use std::collections::HashMap;
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Read, Seek, SeekFrom, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use tser::evaluation::rmse;
use tser::ts_format::read_ts_file;
use tser::{ResultsMatrix, TimeSeriesDataset};

use crate::algorithms::fit_predict;
use crate::config::{AlgorithmSpec, ExperimentConfig};
use crate::error::CliError;
use crate::fetch::{cached_paths, default_cache_dir, fetch_dataset, FetchConfig};

pub const RUNS_FILE: &str = "runs.jsonl";
pub const MATRIX_CSV: &str = "results.csv";
pub const MATRIX_JSON: &str = "results.json";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub dataset: String,
    pub algorithm: String,
    pub run: usize,
    pub seed: u64,
    /// Hash of the algorithm parameters the record was produced with.
    pub fingerprint: u64,
    #[serde(default)]
    pub rmse: Option<f64>,
    #[serde(default)]
    pub error: Option<String>,
    /// Copied from run 0 of a deterministic algorithm.
    #[serde(default)]
    pub replicated: bool,
    #[serde(default)]
    pub seconds: f64,
}

impl RunRecord {
    fn key(&self) -> (String, String, usize) {
        (self.dataset.clone(), self.algorithm.clone(), self.run)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellFailure {
    pub dataset: String,
    pub algorithm: String,
    pub run: usize,
    pub cause: String,
}

/// Mean RMSE per cell, with the per-cell standard deviation over runs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AggregatedResults {
    pub matrix: ResultsMatrix,
    pub std: Vec<Vec<f64>>,
    pub runs: usize,
}

/// Averages run records into a matrix. Datasets and algorithms keep their
/// order of first appearance; every cell must hold the same runs `0..R`.
pub fn aggregate_results(records: &[RunRecord]) -> Result<AggregatedResults, CliError> {
    let inconsistent = |m: String| Err(CliError::InconsistentRecords(m));
    if records.is_empty() {
        return inconsistent("no records".into());
    }
    let mut datasets: Vec<&str> = Vec::new();
    let mut algorithms: Vec<&str> = Vec::new();
    let mut cells: HashMap<(&str, &str), Vec<(usize, f64)>> = HashMap::new();
    for r in records {
        let Some(v) = r.rmse else {
            return inconsistent(format!("{}/{} run {} has no RMSE", r.dataset, r.algorithm, r.run));
        };
        if !datasets.contains(&r.dataset.as_str()) {
            datasets.push(&r.dataset);
        }
        if !algorithms.contains(&r.algorithm.as_str()) {
            algorithms.push(&r.algorithm);
        }
        cells.entry((&r.dataset, &r.algorithm)).or_default().push((r.run, v));
    }
    let mut runs = None;
    let mut mean = Vec::with_capacity(datasets.len());
    let mut std = Vec::with_capacity(datasets.len());
    for d in &datasets {
        let mut mrow = Vec::with_capacity(algorithms.len());
        let mut srow = Vec::with_capacity(algorithms.len());
        for a in &algorithms {
            let Some(cell) = cells.get_mut(&(*d, *a)) else {
                return inconsistent(format!("no records for {d}/{a}"));
            };
            cell.sort_by_key(|&(run, _)| run);
            if cell.iter().enumerate().any(|(i, &(run, _))| run != i) {
                return inconsistent(format!(
                    "{d}/{a} has runs {:?}",
                    cell.iter().map(|c| c.0).collect::<Vec<_>>()
                ));
            }
            match runs {
                None => runs = Some(cell.len()),
                Some(n) if n != cell.len() => {
                    return inconsistent(format!("{d}/{a} has {} runs, expected {n}", cell.len()));
                }
                _ => {}
            }
            let values: Vec<f64> = cell.iter().map(|c| c.1).collect();
            let n = values.len() as f64;
            let m = if values.iter().all(|v| *v == values[0]) {
                values[0]
            } else {
                values.iter().sum::<f64>() / n
            };
            let s = if values.len() > 1 {
                (values.iter().map(|v| (v - m) * (v - m)).sum::<f64>() / (n - 1.0)).sqrt()
            } else {
                0.0
            };
            mrow.push(m);
            srow.push(s);
        }
        mean.push(mrow);
        std.push(srow);
    }
    let matrix = ResultsMatrix::new(
        datasets.iter().map(|s| s.to_string()).collect(),
        algorithms.iter().map(|s| s.to_string()).collect(),
        mean,
    )?;
    Ok(AggregatedResults {
        matrix,
        std,
        runs: runs.unwrap_or(0),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentOutcome {
    /// Only datasets on which every cell succeeded.
    pub results: Option<AggregatedResults>,
    pub failures: Vec<CellFailure>,
    pub records: Vec<RunRecord>,
    pub total_cells: usize,
}

#[derive(Debug, Clone)]
struct ResolvedDataset {
    name: String,
    train: PathBuf,
    test: PathBuf,
}

fn resolve_dataset(entry: &str, cfg: &ExperimentConfig) -> Result<ResolvedDataset, CliError> {
    let not_found = |reason: String| CliError::DatasetNotFound {
        name: entry.to_string(),
        reason,
    };
    let path = Path::new(entry);
    if path.is_dir() {
        let name = path
            .file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_default();
        let train = path.join(format!("{name}_TRAIN.ts"));
        let test = path.join(format!("{name}_TEST.ts"));
        if !train.is_file() || !test.is_file() {
            return Err(not_found(format!(
                "expected {} and {}",
                train.display(),
                test.display()
            )));
        }
        return Ok(ResolvedDataset { name, train, test });
    }
    if let Some(stem) = entry.strip_suffix("_TRAIN.ts") {
        let test = PathBuf::from(format!("{stem}_TEST.ts"));
        if !path.is_file() || !test.is_file() {
            return Err(not_found(format!("expected {entry} and {}", test.display())));
        }
        let name = Path::new(stem)
            .file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_default();
        return Ok(ResolvedDataset {
            name,
            train: path.to_path_buf(),
            test,
        });
    }
    let cache_dir = cfg.cache_dir.clone().unwrap_or_else(default_cache_dir);
    let fetch_cfg = FetchConfig {
        archive_url: cfg.archive_url.clone(),
        cache_dir: cache_dir.clone(),
    };
    fetch_dataset(entry, &fetch_cfg).map_err(|e| not_found(e.to_string()))?;
    let (train, test) = cached_paths(entry, &cache_dir);
    Ok(ResolvedDataset {
        name: entry.to_string(),
        train,
        test,
    })
}

fn load_split(path: &Path) -> Result<TimeSeriesDataset, CliError> {
    let ds = read_ts_file(path).map_err(tser::Error::from)?;
    Ok(ds.interpolate_missing()?)
}

/// Reads existing records, skipping lines that do not parse (such as a line
/// cut short by an interrupted write).
pub fn read_records(path: &Path) -> Result<Vec<RunRecord>, CliError> {
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
        Err(e) => return Err(CliError::io(format!("reading {}", path.display()), e)),
    };
    let mut out = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| CliError::io(format!("reading {}", path.display()), e))?;
        if line.trim().is_empty() {
            continue;
        }
        match serde_json::from_str::<RunRecord>(&line) {
            Ok(r) => out.push(r),
            Err(e) => log::warn!("{}:{}: ignoring unreadable record: {e}", path.display(), i + 1),
        }
    }
    Ok(out)
}

struct Appender {
    file: Mutex<File>,
    path: PathBuf,
}

impl Appender {
    fn open(path: &Path) -> Result<Self, CliError> {
        let ctx = || format!("opening {}", path.display());
        let mut file = OpenOptions::new()
            .create(true)
            .read(true)
            .append(true)
            .open(path)
            .map_err(|e| CliError::io(ctx(), e))?;
        // Terminate a partial last line so new records start cleanly.
        let len = file.metadata().map_err(|e| CliError::io(ctx(), e))?.len();
        if len > 0 {
            let mut last = [0u8; 1];
            file.seek(SeekFrom::End(-1))
                .and_then(|_| file.read_exact(&mut last))
                .map_err(|e| CliError::io(ctx(), e))?;
            if last[0] != b'\n' {
                file.write_all(b"\n").map_err(|e| CliError::io(ctx(), e))?;
            }
        }
        Ok(Self {
            file: Mutex::new(file),
            path: path.to_path_buf(),
        })
    }

    fn append(&self, records: &[RunRecord]) -> Result<(), CliError> {
        let mut text = String::new();
        for r in records {
            text.push_str(&serde_json::to_string(r).expect("record serializes"));
            text.push('\n');
        }
        let mut f = self.file.lock().unwrap_or_else(|p| p.into_inner());
        f.write_all(text.as_bytes())
            .and_then(|_| f.flush())
            .map_err(|e| CliError::io(format!("appending to {}", self.path.display()), e))
    }
}

enum Task<'a> {
    /// Evaluate `run`, then write the result under each of `write_as`.
    Evaluate {
        spec: &'a AlgorithmSpec,
        run: usize,
        write_as: Vec<usize>,
    },
    /// Copy an existing run-0 result of a deterministic algorithm.
    Replicate { source: RunRecord, write_as: Vec<usize> },
}

type Done = HashMap<(String, String, usize), RunRecord>;

fn plan<'a>(cfg: &'a ExperimentConfig, dataset: &str, done: &Done) -> Vec<Task<'a>> {
    let mut tasks = Vec::new();
    for spec in &cfg.algorithms {
        let name = spec.name();
        let ok = |run: usize| {
            done.get(&(dataset.to_string(), name.clone(), run))
                .filter(|r| r.rmse.is_some() && r.fingerprint == spec.fingerprint())
        };
        let missing: Vec<usize> = (0..cfg.runs).filter(|&r| ok(r).is_none()).collect();
        if missing.is_empty() {
            continue;
        }
        if spec.is_deterministic() {
            match ok(0) {
                Some(source) => tasks.push(Task::Replicate {
                    source: source.clone(),
                    write_as: missing,
                }),
                None => tasks.push(Task::Evaluate {
                    spec,
                    run: 0,
                    write_as: missing,
                }),
            }
        } else {
            tasks.extend(missing.into_iter().map(|run| Task::Evaluate {
                spec,
                run,
                write_as: vec![run],
            }));
        }
    }
    tasks
}

fn evaluate_cell(
    cfg: &ExperimentConfig,
    spec: &AlgorithmSpec,
    run: usize,
    train: &TimeSeriesDataset,
    test: &TimeSeriesDataset,
) -> RunRecord {
    let name = spec.name();
    let seed = cfg.run_seed(&name, run);
    let start = Instant::now();
    let outcome = fit_predict(spec, train, test, seed).and_then(|p| rmse(&p, &test.targets()));
    let seconds = start.elapsed().as_secs_f64();
    let (rmse, error) = match outcome {
        Ok(v) if v.is_finite() => (Some(v), None),
        Ok(v) => (None, Some(format!("non-finite RMSE {v}"))),
        Err(e) => (None, Some(e.to_string())),
    };
    if let Some(e) = &error {
        log::warn!("{} / {name} run {run} failed: {e}", train.name);
    } else {
        log::info!(
            "{} / {name} run {run}: rmse {:.6} ({seconds:.2}s)",
            train.name,
            rmse.unwrap_or_default()
        );
    }
    RunRecord {
        dataset: train.name.clone(),
        algorithm: name,
        run,
        seed,
        fingerprint: spec.fingerprint(),
        rmse,
        error,
        replicated: false,
        seconds,
    }
}

fn with_runs(rec: &RunRecord, runs: &[usize]) -> Vec<RunRecord> {
    runs.iter()
        .map(|&run| RunRecord {
            run,
            replicated: run != rec.run || rec.replicated,
            ..rec.clone()
        })
        .collect()
}

/// Runs the configured sweep, resuming from any records already in the
/// output directory, and writes the averaged matrix as CSV and JSON.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ExperimentOutcome, CliError> {
    cfg.validate()?;
    let resolved = cfg
        .datasets
        .iter()
        .map(|d| resolve_dataset(d, cfg))
        .collect::<Result<Vec<_>, _>>()?;
    fs::create_dir_all(&cfg.output_dir)
        .map_err(|e| CliError::io(format!("creating {}", cfg.output_dir.display()), e))?;
    let runs_path = cfg.output_dir.join(RUNS_FILE);
    let mut done: Done = HashMap::new();
    for r in read_records(&runs_path)? {
        done.insert(r.key(), r);
    }
    let appender = Appender::open(&runs_path)?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(w) = cfg.workers {
        builder = builder.num_threads(w);
    }
    let pool = builder.build().map_err(|e| CliError::Config(e.to_string()))?;

    for ds in &resolved {
        let tasks = plan(cfg, &ds.name, &done);
        if tasks.is_empty() {
            continue;
        }
        let mut train = load_split(&ds.train)?;
        let mut test = load_split(&ds.test)?;
        train.name.clone_from(&ds.name);
        test.name.clone_from(&ds.name);
        let written: Vec<Result<Vec<RunRecord>, CliError>> = pool.install(|| {
            tasks
                .par_iter()
                .map(|task| {
                    let records = match task {
                        Task::Evaluate { spec, run, write_as } => {
                            with_runs(&evaluate_cell(cfg, spec, *run, &train, &test), write_as)
                        }
                        Task::Replicate { source, write_as } => with_runs(source, write_as),
                    };
                    appender.append(&records)?;
                    Ok(records)
                })
                .collect()
        });
        for batch in written {
            for r in batch? {
                done.insert(r.key(), r);
            }
        }
    }

    let mut records = Vec::new();
    let mut failures = Vec::new();
    let mut complete = Vec::new();
    for ds in &resolved {
        let mut row = Vec::new();
        let mut row_ok = true;
        for spec in &cfg.algorithms {
            for run in 0..cfg.runs {
                let rec = done
                    .get(&(ds.name.clone(), spec.name(), run))
                    .expect("every planned cell has a record")
                    .clone();
                if let Some(cause) = &rec.error {
                    row_ok = false;
                    failures.push(CellFailure {
                        dataset: rec.dataset.clone(),
                        algorithm: rec.algorithm.clone(),
                        run,
                        cause: cause.clone(),
                    });
                }
                row.push(rec);
            }
        }
        if row_ok {
            complete.extend(row.iter().cloned());
        }
        records.extend(row);
    }
    let results = if complete.is_empty() {
        None
    } else {
        Some(aggregate_results(&complete)?)
    };
    write_outputs(&cfg.output_dir, results.as_ref(), &failures)?;
    Ok(ExperimentOutcome {
        results,
        failures,
        records,
        total_cells: resolved.len() * cfg.algorithms.len() * cfg.runs,
    })
}

#[derive(Serialize)]
struct MatrixFile<'a> {
    datasets: &'a [String],
    algorithms: &'a [String],
    rmse: &'a [Vec<f64>],
    std: &'a [Vec<f64>],
    runs: usize,
    failures: &'a [CellFailure],
}

fn write_outputs(dir: &Path, results: Option<&AggregatedResults>, failures: &[CellFailure]) -> Result<(), CliError> {
    let empty = AggregatedResults {
        matrix: ResultsMatrix {
            datasets: vec![],
            algorithms: vec![],
            rmse: vec![],
        },
        std: vec![],
        runs: 0,
    };
    let r = results.unwrap_or(&empty);
    let csv_path = dir.join(MATRIX_CSV);
    let write = |path: &Path, text: String| {
        fs::write(path, text).map_err(|e| CliError::io(format!("writing {}", path.display()), e))
    };
    if results.is_some() {
        write(&csv_path, r.matrix.to_csv_string())?;
    } else if csv_path.exists() {
        fs::remove_file(&csv_path).map_err(|e| CliError::io(format!("removing {}", csv_path.display()), e))?;
    }
    let file = MatrixFile {
        datasets: &r.matrix.datasets,
        algorithms: &r.matrix.algorithms,
        rmse: &r.matrix.rmse,
        std: &r.std,
        runs: r.runs,
        failures,
    };
    write(
        &dir.join(MATRIX_JSON),
        serde_json::to_string_pretty(&file).expect("matrix serializes") + "\n",
    )
}
