//! Text and SVG reports over a results matrix.

use std::fmt::Write as _;
use std::path::Path;

use tser::evaluation::{friedman_test, nemenyi_cd, render_cd_diagram, CdDiagram};
use tser::ResultsMatrix;

use crate::error::CliError;

pub fn load_matrix(path: &Path) -> Result<ResultsMatrix, CliError> {
    let file = std::fs::File::open(path).map_err(|e| CliError::io(format!("opening {}", path.display()), e))?;
    Ok(ResultsMatrix::read_csv(file)?)
}

/// Average ranks (best first), the Friedman test and the Nemenyi critical
/// difference with its cliques.
pub fn evaluation_report(m: &ResultsMatrix, alpha: f64) -> Result<String, CliError> {
    let table = m.rank_table(alpha);
    let mut out = String::new();
    let _ = writeln!(out, "{} datasets, {} algorithms", m.n_datasets(), m.n_algorithms());
    let _ = writeln!(out, "average ranks:");
    for (pos, i) in table.order().into_iter().enumerate() {
        let _ = writeln!(
            out,
            "{:>3}. {:<24} {:.4}",
            pos + 1,
            table.algorithms[i],
            table.average_ranks[i]
        );
    }
    match friedman_test(&table) {
        Ok(f) => {
            let _ = writeln!(
                out,
                "friedman chi2 = {:.4} (df {}), p = {:.6e}",
                f.statistic, f.df, f.p_value
            );
            let _ = writeln!(
                out,
                "iman-davenport F = {:.4}, p = {:.6e}",
                f.iman_davenport, f.iman_davenport_p_value
            );
        }
        Err(e) => {
            let _ = writeln!(out, "friedman test unavailable: {e}");
        }
    }
    match nemenyi_cd(m.n_algorithms(), m.n_datasets(), alpha) {
        Ok(cd) => out.push_str(&render_cd_diagram(&table, cd).summary()),
        Err(e) => {
            let _ = writeln!(out, "nemenyi critical difference unavailable: {e}");
        }
    }
    Ok(out)
}

pub fn cd_diagram(m: &ResultsMatrix, alpha: f64) -> Result<CdDiagram, CliError> {
    let cd = nemenyi_cd(m.n_algorithms(), m.n_datasets(), alpha)?;
    Ok(render_cd_diagram(&m.rank_table(alpha), cd))
}
