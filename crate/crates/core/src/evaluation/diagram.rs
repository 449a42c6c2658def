use std::fmt::Write as _;

use super::RankTable;

/// Maximal groups of algorithms (indices into `average_ranks`) whose average
/// ranks all lie within `cd` of each other. Singleton groups are omitted.
/// Groups are returned in order of their best member.
pub fn cd_cliques(average_ranks: &[f64], cd: f64) -> Vec<Vec<usize>> {
    let mut order: Vec<usize> = (0..average_ranks.len()).collect();
    order.sort_by(|&a, &b| average_ranks[a].total_cmp(&average_ranks[b]).then(a.cmp(&b)));
    let sorted: Vec<f64> = order.iter().map(|&i| average_ranks[i]).collect();
    let mut cliques = Vec::new();
    let mut last_end = None;
    for i in 0..sorted.len() {
        let mut j = i;
        while j + 1 < sorted.len() && sorted[j + 1] - sorted[i] < cd {
            j += 1;
        }
        if j > i && last_end.is_none_or(|e| j > e) {
            cliques.push(order[i..=j].to_vec());
            last_end = Some(j);
        }
    }
    cliques
}

/// A critical-difference diagram: algorithms on a rank axis with bars over
/// groups that are not significantly different.
#[derive(Debug, Clone, PartialEq)]
pub struct CdDiagram {
    pub algorithms: Vec<String>,
    pub average_ranks: Vec<f64>,
    pub critical_difference: f64,
    pub cliques: Vec<Vec<usize>>,
}

pub fn render_cd_diagram(table: &RankTable, cd: f64) -> CdDiagram {
    CdDiagram {
        algorithms: table.algorithms.clone(),
        average_ranks: table.average_ranks.clone(),
        critical_difference: cd,
        cliques: cd_cliques(&table.average_ranks, cd),
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

impl CdDiagram {
    fn order(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.algorithms.len()).collect();
        idx.sort_by(|&a, &b| self.average_ranks[a].total_cmp(&self.average_ranks[b]).then(a.cmp(&b)));
        idx
    }

    /// Whether two algorithms share a clique.
    pub fn connected(&self, a: usize, b: usize) -> bool {
        self.cliques.iter().any(|c| c.contains(&a) && c.contains(&b))
    }

    /// Plain-text listing of the ranking, each clique and each algorithm's
    /// non-significant neighbours.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "critical difference: {:.4}", self.critical_difference);
        for (pos, &i) in self.order().iter().enumerate() {
            let _ = writeln!(
                out,
                "{:>3}. {:<24} {:.4}",
                pos + 1,
                self.algorithms[i],
                self.average_ranks[i]
            );
        }
        let _ = writeln!(out, "cliques:");
        if self.cliques.is_empty() {
            let _ = writeln!(out, "  (none)");
        }
        for c in &self.cliques {
            let names: Vec<&str> = c.iter().map(|&i| self.algorithms[i].as_str()).collect();
            let _ = writeln!(out, "  [{}]", names.join(", "));
        }
        let _ = writeln!(out, "not significantly different from:");
        for &i in &self.order() {
            let peers: Vec<&str> = self
                .order()
                .into_iter()
                .filter(|&j| j != i && self.connected(i, j))
                .map(|j| self.algorithms[j].as_str())
                .collect();
            let _ = writeln!(
                out,
                "  {}: {}",
                self.algorithms[i],
                if peers.is_empty() { "-".into() } else { peers.join(", ") }
            );
        }
        out
    }

    /// Deterministic SVG rendering. The axis runs from rank 1 on the left to
    /// rank k on the right.
    pub fn to_svg(&self) -> String {
        let k = self.algorithms.len().max(2);
        let width = 800.0;
        let margin = 60.0;
        let axis_y = 80.0;
        let label_step = 22.0;
        let order = self.order();
        let half = order.len().div_ceil(2);
        let bar_top = axis_y + 18.0;
        let bars_height = self.cliques.len() as f64 * 8.0;
        let labels_top = bar_top + bars_height + 20.0;
        let height = labels_top + half.max(1) as f64 * label_step + 20.0;
        let x = |r: f64| margin + (r - 1.0) / (k as f64 - 1.0) * (width - 2.0 * margin);

        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">"#
        );
        let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
        // critical difference scale
        let cd_px = x(1.0 + self.critical_difference) - x(1.0);
        let _ = writeln!(
            s,
            r#"<line x1="{:.2}" y1="30" x2="{:.2}" y2="30" stroke="black" stroke-width="2"/>"#,
            x(1.0),
            x(1.0) + cd_px
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="22" text-anchor="middle">CD = {:.4}</text>"#,
            x(1.0) + cd_px / 2.0,
            self.critical_difference
        );
        let _ = writeln!(
            s,
            r#"<line x1="{:.2}" y1="{axis_y}" x2="{:.2}" y2="{axis_y}" stroke="black"/>"#,
            x(1.0),
            x(k as f64)
        );
        for r in 1..=k {
            let px = x(r as f64);
            let _ = writeln!(
                s,
                r#"<line x1="{px:.2}" y1="{}" x2="{px:.2}" y2="{axis_y}" stroke="black"/>"#,
                axis_y - 6.0
            );
            let _ = writeln!(
                s,
                r#"<text x="{px:.2}" y="{}" text-anchor="middle">{r}</text>"#,
                axis_y - 10.0
            );
        }
        for (n, c) in self.cliques.iter().enumerate() {
            let lo = c.iter().map(|&i| self.average_ranks[i]).fold(f64::INFINITY, f64::min);
            let hi = c
                .iter()
                .map(|&i| self.average_ranks[i])
                .fold(f64::NEG_INFINITY, f64::max);
            let y = bar_top + n as f64 * 8.0;
            let _ = writeln!(
                s,
                r#"<line x1="{:.2}" y1="{y}" x2="{:.2}" y2="{y}" stroke="black" stroke-width="3"/>"#,
                x(lo) - 3.0,
                x(hi) + 3.0
            );
        }
        for (pos, &i) in order.iter().enumerate() {
            let px = x(self.average_ranks[i]);
            let (row, left) = if pos < half {
                (pos, true)
            } else {
                (order.len() - 1 - pos, false)
            };
            let y = labels_top + row as f64 * label_step;
            let (tx, anchor) = if left {
                (margin - 10.0, "end")
            } else {
                (width - margin + 10.0, "start")
            };
            let _ = writeln!(
                s,
                r#"<polyline points="{px:.2},{axis_y} {px:.2},{y} {tx:.2},{y}" fill="none" stroke="black"/>"#
            );
            let _ = writeln!(
                s,
                r#"<text x="{:.2}" y="{:.2}" text-anchor="{anchor}">{} ({:.2})</text>"#,
                tx + if left { -4.0 } else { 4.0 },
                y + 4.0,
                escape(&self.algorithms[i]),
                self.average_ranks[i]
            );
        }
        s.push_str("</svg>\n");
        s
    }
}
