//! Plain-text renderings. Unreachable distances print as `inf`.

use std::fmt::Write;

use mixproj_core::oracle::OracleReport;
use mixproj_core::paths::{DistanceMatrix, DistanceTable, PathCount, PathSet};
use mixproj_core::projection::RefinedProjection;
use mixproj_core::VertexId;

fn dist(d: Option<u32>) -> String {
    d.map_or_else(|| "inf".to_string(), |d| d.to_string())
}

fn join(vs: impl IntoIterator<Item = VertexId>) -> String {
    vs.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn projection(p: &RefinedProjection) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "source {}", p.source());
    for (k, layer) in p.frontiers().iter().enumerate().skip(1) {
        let _ = writeln!(out, "level {k}: {}", join(layer.iter().copied()));
    }
    for layer in p.frontiers().iter().skip(1) {
        for &v in layer {
            let _ = writeln!(out, "pred {v}: {}", join(p.pred(v).iter().copied()));
        }
    }
    let unreachable = join(p.unreachable());
    let _ = writeln!(out, "unreachable: {}", if unreachable.is_empty() { "-" } else { &unreachable });
    let s = p.stats();
    let _ = writeln!(
        out,
        "stats: vertices_placed={} adjacency_cells_read={} levels_built={}",
        s.vertices_placed, s.adjacency_cells_read, s.levels_built
    );
    out
}

pub fn path_set(set: &PathSet, distance: Option<u32>, count: PathCount) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "source {}", set.source);
    let _ = writeln!(out, "target {}", set.target);
    let _ = writeln!(out, "distance {}", dist(distance));
    match count {
        PathCount::Exact(n) => {
            let _ = writeln!(out, "count {n}");
        }
        PathCount::Overflow => out.push_str("count overflow\n"),
    }
    for path in &set.paths {
        let _ = writeln!(out, "{}", join(path.vertices().iter().copied()));
    }
    if set.truncated {
        out.push_str("truncated\n");
    }
    out
}

/// Two right-aligned columns: vertex and distance.
pub fn distance_table(t: &DistanceTable) -> String {
    let rows: Vec<(String, String)> = t.iter().map(|(v, d)| (v.to_string(), dist(d))).collect();
    let w0 = rows.iter().map(|r| r.0.len()).max().unwrap_or(0).max("vertex".len());
    let w1 = rows.iter().map(|r| r.1.len()).max().unwrap_or(0).max("dist".len());
    let mut out = format!("source {}\n{:>w0$} {:>w1$}\n", t.source, "vertex", "dist");
    for (v, d) in rows {
        let _ = writeln!(out, "{v:>w0$} {d:>w1$}");
    }
    out
}

/// Matrix with a header row of target ids and one row per source.
pub fn distance_matrix(m: &DistanceMatrix) -> String {
    let n = m.order();
    let cells: Vec<Vec<String>> = m.rows().take(n).map(|r| r.iter().map(|&d| dist(d)).collect()).collect();
    let width = cells.iter().flatten().map(String::len).chain([n.to_string().len()]).max().unwrap_or(1);
    let mut out = String::new();
    let _ = write!(out, "{:>width$}", "");
    for j in 1..=n {
        let _ = write!(out, " {j:>width$}");
    }
    out.push('\n');
    for (i, row) in cells.iter().enumerate() {
        let _ = write!(out, "{:>width$}", i + 1);
        for c in row {
            let _ = write!(out, " {c:>width$}");
        }
        out.push('\n');
    }
    out
}

pub fn oracle_report(label: &str, sources: usize, r: &OracleReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{label}: {sources} sources, {} mismatches, {} budget-exhausted pairs",
        r.mismatch_count(),
        r.budget_exhausted.len()
    );
    for m in &r.distance_mismatches {
        let _ = writeln!(
            out,
            "  distance {}->{}: expected {} got {}",
            m.source,
            m.vertex,
            dist(m.expected),
            dist(m.actual)
        );
    }
    for m in &r.pred_mismatches {
        let _ = writeln!(
            out,
            "  pred {} from {}: expected {{{}}} got {{{}}}",
            m.vertex,
            m.source,
            join(m.expected.iter().copied()).replace(' ', ","),
            join(m.actual.iter().copied()).replace(' ', ",")
        );
    }
    for m in &r.path_set_mismatches {
        let show = |ps: &[mixproj_core::Path]| ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ");
        let _ =
            writeln!(out, "  paths {}->{}: expected {} got {}", m.source, m.vertex, show(&m.expected), show(&m.actual));
    }
    for (s, t) in &r.budget_exhausted {
        let _ = writeln!(out, "  paths {s}->{t}: brute force exceeded its budget");
    }
    out
}
