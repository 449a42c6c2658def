//! Downloading archive datasets into a local cache.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::time::Duration;

use tser::ts_format::read_ts_file;

use crate::error::CliError;

pub const CACHE_ENV: &str = "TSER_CACHE_DIR";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FetchConfig {
    pub archive_url: String,
    pub cache_dir: PathBuf,
}

/// `$TSER_CACHE_DIR`, else `$XDG_DATA_HOME/tser`, else `~/.local/share/tser`.
pub fn default_cache_dir() -> PathBuf {
    let env = |k: &str| std::env::var_os(k).filter(|v| !v.is_empty()).map(PathBuf::from);
    if let Some(p) = env(CACHE_ENV) {
        return p;
    }
    if let Some(p) = env("XDG_DATA_HOME") {
        return p.join("tser");
    }
    env("HOME")
        .unwrap_or_else(|| PathBuf::from("."))
        .join(".local/share/tser")
}

pub fn split_url(base: &str, name: &str, split: &str) -> String {
    if base.contains("{name}") || base.contains("{split}") {
        base.replace("{name}", name).replace("{split}", split)
    } else {
        format!("{}/{name}_{split}.ts", base.trim_end_matches('/'))
    }
}

/// Cached paths of the train and test files for `name`.
pub fn cached_paths(name: &str, cache_dir: &Path) -> (PathBuf, PathBuf) {
    let dir = cache_dir.join(name);
    (
        dir.join(format!("{name}_TRAIN.ts")),
        dir.join(format!("{name}_TEST.ts")),
    )
}

/// Ensures both splits of `name` are in the cache, downloading what is
/// missing, and returns the dataset's cache directory. Every downloaded file
/// is parsed before it is kept.
pub fn fetch_dataset(name: &str, cfg: &FetchConfig) -> Result<PathBuf, CliError> {
    if name.is_empty() || name.contains(['/', '\\']) || name.starts_with('.') {
        return Err(CliError::Config(format!("invalid dataset name {name:?}")));
    }
    let (train, test) = cached_paths(name, &cfg.cache_dir);
    let dir = train.parent().expect("cache path has a parent").to_path_buf();
    for (path, split) in [(train, "TRAIN"), (test, "TEST")] {
        if path.is_file() {
            log::debug!("cache hit {}", path.display());
            continue;
        }
        fs::create_dir_all(&dir).map_err(|e| CliError::io(format!("creating {}", dir.display()), e))?;
        let url = split_url(&cfg.archive_url, name, split);
        let partial = path.with_extension("ts.part");
        log::info!("downloading {url}");
        download(&url, &partial)?;
        if let Err(e) = read_ts_file(&partial) {
            let _ = fs::remove_file(&partial);
            return Err(CliError::ParseFailureAfterDownload {
                path,
                cause: e.to_string(),
            });
        }
        fs::rename(&partial, &path).map_err(|e| CliError::io(format!("moving into {}", path.display()), e))?;
    }
    Ok(dir)
}

fn download(url: &str, dest: &Path) -> Result<(), CliError> {
    let network = |cause: String| CliError::Network {
        url: url.to_string(),
        cause,
    };
    if let Some(local) = url.strip_prefix("file://") {
        fs::copy(local, dest).map_err(|e| network(e.to_string()))?;
        return Ok(());
    }
    let agent: ureq::Agent = ureq::Agent::config_builder()
        .timeout_connect(Some(Duration::from_secs(30)))
        .build()
        .into();
    let mut response = agent.get(url).call().map_err(|e| network(e.to_string()))?;
    let mut file = fs::File::create(dest).map_err(|e| CliError::io(format!("creating {}", dest.display()), e))?;
    if let Err(e) = io::copy(&mut response.body_mut().as_reader(), &mut file) {
        let _ = fs::remove_file(dest);
        return Err(network(e.to_string()));
    }
    Ok(())
}
