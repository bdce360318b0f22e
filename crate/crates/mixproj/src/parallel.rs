//! Per-source fan-out over scoped threads.
//!
//! Results are always returned in ascending source order, so the degree of
//! parallelism never changes the output.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::thread;

use mixproj_core::oracle::{check_projection_with, CheckOptions, OracleReport};
use mixproj_core::paths::{distance_table, DistanceMatrix};
use mixproj_core::projection::build_refined;
use mixproj_core::{MixedGraph, VertexId};

/// Applies `f` to every vertex of `g` on up to `threads` workers.
pub fn map_sources<T, F>(g: &MixedGraph, threads: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(VertexId) -> T + Sync,
{
    let n = g.order();
    let threads = threads.clamp(1, n.max(1));
    if threads == 1 {
        return g.vertices().map(f).collect();
    }
    let next = AtomicUsize::new(0);
    let mut slots: Vec<Option<T>> = (0..n).map(|_| None).collect();
    let parts: Vec<Vec<(usize, T)>> = thread::scope(|s| {
        let workers: Vec<_> = (0..threads)
            .map(|_| {
                s.spawn(|| {
                    let mut done = Vec::new();
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        if i >= n {
                            break done;
                        }
                        done.push((i, f(VertexId::from_index(i))));
                    }
                })
            })
            .collect();
        workers.into_iter().map(|w| w.join().expect("worker panicked")).collect()
    });
    for (i, value) in parts.into_iter().flatten() {
        slots[i] = Some(value);
    }
    slots.into_iter().map(|s| s.expect("every source processed")).collect()
}

/// All-pairs distances with one refined projection per source.
pub fn apsp(g: &MixedGraph, threads: usize) -> DistanceMatrix {
    let tables = map_sources(g, threads, |u| distance_table(&build_refined(g, u).expect("vertex of g")));
    DistanceMatrix::from_tables(g.order(), tables)
}

/// Builds and verifies the projection from every source in `sources`
/// (all vertices when empty); reports are merged in source order.
pub fn check_sources(g: &MixedGraph, sources: &[VertexId], opts: CheckOptions, threads: usize) -> OracleReport {
    let wanted = |u: VertexId| sources.is_empty() || sources.contains(&u);
    let reports = map_sources(g, threads, |u| {
        wanted(u).then(|| check_projection_with(g, &build_refined(g, u).expect("vertex of g"), opts))
    });
    let mut merged = OracleReport::default();
    for r in reports.into_iter().flatten() {
        merged.merge(r);
    }
    merged
}
