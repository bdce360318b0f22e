//! Counter and timing report for projection builds against a plain BFS.
//!
//! No pass/fail judgement is made here; rows carry raw numbers.

use std::hint::black_box;
use std::time::Instant;

use mixproj_core::oracle::bfs_distances;
use mixproj_core::paths::extract_path;
use mixproj_core::projection::build_refined;
use mixproj_core::{MixedGraph, VertexId};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchRow {
    pub graph: String,
    pub order: usize,
    /// Adjacency entries; an edge counts twice.
    pub links: usize,
    pub source: u32,
    pub reachable: usize,
    pub vertices_placed: usize,
    pub adjacency_cells_read: usize,
    pub levels_built: usize,
    /// Vertices touched extracting one shortest path to every reachable
    /// target, summed over targets.
    pub extraction_touched_total: usize,
    pub extraction_touched_max: usize,
    /// Median wall time of one projection build, nanoseconds.
    pub build_ns: Option<u64>,
    /// Median wall time of one oracle BFS, nanoseconds.
    pub bfs_ns: Option<u64>,
    pub repetitions: usize,
}

pub const CSV_HEADER: &str = "graph,order,links,source,reachable,vertices_placed,adjacency_cells_read,levels_built,extraction_touched_total,extraction_touched_max,build_ns,bfs_ns,repetitions";

impl BenchRow {
    pub fn csv(&self) -> String {
        let opt = |x: Option<u64>| x.map(|x| x.to_string()).unwrap_or_default();
        let graph = if self.graph.contains([',', '"', '\n']) {
            format!("\"{}\"", self.graph.replace('"', "\"\""))
        } else {
            self.graph.clone()
        };
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            graph,
            self.order,
            self.links,
            self.source,
            self.reachable,
            self.vertices_placed,
            self.adjacency_cells_read,
            self.levels_built,
            self.extraction_touched_total,
            self.extraction_touched_max,
            opt(self.build_ns),
            opt(self.bfs_ns),
            self.repetitions
        )
    }
}

fn median_ns(reps: usize, mut f: impl FnMut()) -> u64 {
    let mut times: Vec<u64> = (0..reps.max(1))
        .map(|_| {
            let start = Instant::now();
            f();
            start.elapsed().as_nanos() as u64
        })
        .collect();
    times.sort_unstable();
    times[times.len() / 2]
}

/// One row for `source`. Timings are skipped when `timed` is false, which
/// makes the row fully deterministic.
pub fn bench_source(g: &MixedGraph, label: &str, source: VertexId, reps: usize, timed: bool) -> BenchRow {
    let p = build_refined(g, source).expect("source is a vertex of g");
    let stats = p.stats();
    let mut total = 0;
    let mut max = 0;
    for v in g.vertices() {
        if let Some(e) = extract_path(&p, v).expect("vertex of g") {
            total += e.touched;
            max = max.max(e.touched);
        }
    }
    let (build_ns, bfs_ns) = if timed {
        (
            Some(median_ns(reps, || {
                black_box(build_refined(black_box(g), source).unwrap());
            })),
            Some(median_ns(reps, || {
                black_box(bfs_distances(black_box(g), source).unwrap());
            })),
        )
    } else {
        (None, None)
    };
    BenchRow {
        graph: label.to_string(),
        order: g.order(),
        links: g.link_count(),
        source: source.get(),
        reachable: g.vertices().filter(|&v| v != source && p.is_reachable(v)).count(),
        vertices_placed: stats.vertices_placed,
        adjacency_cells_read: stats.adjacency_cells_read,
        levels_built: stats.levels_built,
        extraction_touched_total: total,
        extraction_touched_max: max,
        build_ns,
        bfs_ns,
        repetitions: if timed { reps.max(1) } else { 0 },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn demo_row_counters() {
        let g = crate::parse_graph_text(include_str!("../examples/demo.graph")).unwrap();
        let row = bench_source(&g, "demo", VertexId::new(4).unwrap(), 3, false);
        assert_eq!(row.levels_built, 4);
        assert_eq!(row.vertices_placed, 7);
        assert_eq!(row.reachable, 7);
        // distances 1,2,1,0,4,4,3,3 plus one each
        assert_eq!(row.extraction_touched_total, 2 + 3 + 2 + 1 + 5 + 5 + 4 + 4);
        assert_eq!(row.extraction_touched_max, 5);
        assert_eq!(row.build_ns, None);
        let timed = bench_source(&g, "demo", VertexId::new(4).unwrap(), 3, true);
        assert!(timed.build_ns.is_some() && timed.bfs_ns.is_some());
        assert_eq!(row.csv().split(',').count(), CSV_HEADER.split(',').count());
    }
}
