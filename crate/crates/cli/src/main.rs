use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use tser_cli::config::DEFAULT_ARCHIVE_URL;
use tser_cli::error::CliError;
use tser_cli::fetch::{default_cache_dir, fetch_dataset, FetchConfig};
use tser_cli::report::{cd_diagram, evaluation_report, load_matrix};
use tser_cli::{run_experiment, ExperimentConfig};

#[derive(Parser)]
#[command(name = "tser", version, about = "Time series extrinsic regression benchmarks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Download datasets into the local cache
    Fetch {
        #[arg(required = true)]
        datasets: Vec<String>,
        #[arg(long, default_value = DEFAULT_ARCHIVE_URL)]
        archive_url: String,
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
    /// Run (or resume) an experiment sweep
    Run {
        #[arg(long)]
        config: PathBuf,
        /// Overrides the configured worker count
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Ranks, Friedman test and Nemenyi critical difference for a results CSV
    Evaluate {
        #[arg(long)]
        results: PathBuf,
        #[arg(long, default_value_t = 0.05)]
        alpha: f64,
    },
    /// Critical difference diagram (SVG) for a results CSV
    Diagram {
        #[arg(long)]
        results: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 0.05)]
        alpha: f64,
    },
    /// Write the embedded published RMSE table as CSV
    OracleTable {
        #[arg(long)]
        out: PathBuf,
    },
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::io(format!("writing {}", path.display()), e))
}

fn execute(command: Command) -> Result<(), CliError> {
    match command {
        Command::Fetch {
            datasets,
            archive_url,
            cache_dir,
        } => {
            let cfg = FetchConfig {
                archive_url,
                cache_dir: cache_dir.unwrap_or_else(default_cache_dir),
            };
            for name in datasets {
                let dir = fetch_dataset(&name, &cfg)?;
                println!("{name}\t{}", dir.display());
            }
            Ok(())
        }
        Command::Run { config, workers } => {
            let mut cfg = ExperimentConfig::load(&config)?;
            if workers.is_some() {
                cfg.workers = workers;
            }
            let outcome = run_experiment(&cfg)?;
            if let Some(r) = &outcome.results {
                print!("{}", r.matrix.to_csv_string());
            }
            for f in &outcome.failures {
                eprintln!("failed: {} / {} run {}: {}", f.dataset, f.algorithm, f.run, f.cause);
            }
            log::info!("results written to {}", cfg.output_dir.display());
            if outcome.failures.is_empty() {
                Ok(())
            } else {
                Err(CliError::PartialFailure {
                    failed: outcome.failures.len(),
                    total: outcome.total_cells,
                })
            }
        }
        Command::Evaluate { results, alpha } => {
            print!("{}", evaluation_report(&load_matrix(&results)?, alpha)?);
            Ok(())
        }
        Command::Diagram { results, out, alpha } => {
            let diagram = cd_diagram(&load_matrix(&results)?, alpha)?;
            write_file(&out, &diagram.to_svg())?;
            print!("{}", diagram.summary());
            Ok(())
        }
        Command::OracleTable { out } => write_file(&out, &tser::evaluation::published::rmse_table().to_csv_string()),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
