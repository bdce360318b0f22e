//! Brute-force reference implementations for verifying projections.
//!
//! Nothing here calls into the projection builder or the path queries for
//! the values it produces; only the graph accessors are shared. Agreement
//! between the two sides is therefore evidence rather than a tautology.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{GraphError, MixedGraph, VertexId};
use crate::paths::{enumerate_shortest_paths, DistanceTable, Path, PathSet};
use crate::projection::RefinedProjection;

/// Default node-expansion budget for [`brute_force_shortest_paths`].
pub const DEFAULT_PATH_BUDGET: u64 = 5_000_000;

#[derive(Clone, Debug, PartialEq)]
pub enum OracleError {
    Graph(GraphError),
    BudgetExceeded { budget: u64 },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::Graph(e) => e.fmt(f),
            OracleError::BudgetExceeded { budget } => {
                write!(f, "path search exceeded its budget of {budget} expansions")
            }
        }
    }
}

impl core::error::Error for OracleError {}

impl From<GraphError> for OracleError {
    fn from(e: GraphError) -> Self {
        OracleError::Graph(e)
    }
}

/// Textbook queue-based BFS over out-neighborhoods.
pub fn bfs_distances(g: &MixedGraph, source: VertexId) -> Result<DistanceTable, GraphError> {
    g.check_vertex(source)?;
    let mut dist = vec![None; g.order()];
    dist[source.index()] = Some(0u32);
    let mut queue = VecDeque::new();
    queue.push_back(source);
    while let Some(x) = queue.pop_front() {
        let dx = dist[x.index()].unwrap();
        for &y in g.neighbors(x) {
            if dist[y.index()].is_none() {
                dist[y.index()] = Some(dx + 1);
                queue.push_back(y);
            }
        }
    }
    Ok(DistanceTable { source, dist })
}

/// Every minimum-length simple path from `source` to `target`, found by
/// exhaustive depth-first search over simple paths.
///
/// The search runs with a growing hop bound and stops at the first bound
/// that yields a path, which prunes everything longer than the best known
/// length without changing the result. Targets with no path at all are
/// detected up front by a plain reachability sweep.
pub fn brute_force_shortest_paths(
    g: &MixedGraph,
    source: VertexId,
    target: VertexId,
    budget: u64,
) -> Result<PathSet, OracleError> {
    g.check_vertex(source)?;
    g.check_vertex(target)?;
    let mut set = PathSet { source, target, paths: Vec::new(), truncated: false };
    if !reaches(g, source, target) {
        return Ok(set);
    }
    let mut search = Search { g, target, budget, spent: 0, on_path: vec![false; g.order()] };
    let mut prefix = vec![source];
    search.on_path[source.index()] = true;
    for bound in 0..g.order() {
        search.walk(&mut prefix, bound, &mut set.paths)?;
        if !set.paths.is_empty() {
            break;
        }
    }
    set.paths.sort_unstable();
    Ok(set)
}

fn reaches(g: &MixedGraph, from: VertexId, to: VertexId) -> bool {
    let mut seen = vec![false; g.order()];
    let mut stack = vec![from];
    seen[from.index()] = true;
    while let Some(x) = stack.pop() {
        if x == to {
            return true;
        }
        for &y in g.neighbors(x) {
            if !seen[y.index()] {
                seen[y.index()] = true;
                stack.push(y);
            }
        }
    }
    false
}

struct Search<'g> {
    g: &'g MixedGraph,
    target: VertexId,
    budget: u64,
    spent: u64,
    on_path: Vec<bool>,
}

impl Search<'_> {
    /// Collects every simple extension of `prefix` that reaches the target
    /// with at most `left` more hops.
    fn walk(&mut self, prefix: &mut Vec<VertexId>, left: usize, out: &mut Vec<Path>) -> Result<(), OracleError> {
        self.spent += 1;
        if self.spent > self.budget {
            return Err(OracleError::BudgetExceeded { budget: self.budget });
        }
        let x = *prefix.last().unwrap();
        if x == self.target {
            out.push(Path(prefix.clone()));
            return Ok(());
        }
        if left == 0 {
            return Ok(());
        }
        for &y in self.g.neighbors(x) {
            if self.on_path[y.index()] {
                continue;
            }
            self.on_path[y.index()] = true;
            prefix.push(y);
            let r = self.walk(prefix, left - 1, out);
            prefix.pop();
            self.on_path[y.index()] = false;
            r?;
        }
        Ok(())
    }
}

/// One disagreement between the oracle and a projection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch<T> {
    pub source: VertexId,
    pub vertex: VertexId,
    pub expected: T,
    pub actual: T,
}

/// Result of [`check_projection`]; empty means verified.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OracleReport {
    pub distance_mismatches: Vec<Mismatch<Option<u32>>>,
    pub pred_mismatches: Vec<Mismatch<Vec<VertexId>>>,
    pub path_set_mismatches: Vec<Mismatch<Vec<Path>>>,
    /// `(source, target)` pairs whose path sets could not be brute-forced
    /// within budget.
    pub budget_exhausted: Vec<(VertexId, VertexId)>,
}

impl OracleReport {
    pub fn is_empty(&self) -> bool {
        self.distance_mismatches.is_empty()
            && self.pred_mismatches.is_empty()
            && self.path_set_mismatches.is_empty()
            && self.budget_exhausted.is_empty()
    }

    pub fn mismatch_count(&self) -> usize {
        self.distance_mismatches.len() + self.pred_mismatches.len() + self.path_set_mismatches.len()
    }

    pub fn merge(&mut self, other: OracleReport) {
        self.distance_mismatches.extend(other.distance_mismatches);
        self.pred_mismatches.extend(other.pred_mismatches);
        self.path_set_mismatches.extend(other.path_set_mismatches);
        self.budget_exhausted.extend(other.budget_exhausted);
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    /// Compare full path sets against the brute-force enumerator.
    pub verify_paths: bool,
    pub path_budget: u64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { verify_paths: true, path_budget: DEFAULT_PATH_BUDGET }
    }
}

/// Checks distances, predecessor completeness and path sets of `p`
/// against the brute-force oracles.
pub fn check_projection(g: &MixedGraph, p: &RefinedProjection) -> OracleReport {
    check_projection_with(g, p, CheckOptions::default())
}

/// # Panics
///
/// If `p` was not built from a graph of the same order as `g`.
pub fn check_projection_with(g: &MixedGraph, p: &RefinedProjection, opts: CheckOptions) -> OracleReport {
    assert_eq!(g.order(), p.order(), "projection built from a different graph");
    let source = p.source();
    let bfs = bfs_distances(g, source).expect("source of p is a vertex of g");
    let mut report = OracleReport::default();

    for v in g.vertices() {
        let (expected, actual) = (bfs.get(v), p.level(v));
        if expected != actual {
            report.distance_mismatches.push(Mismatch { source, vertex: v, expected, actual });
        }
    }

    // pred(v) must be exactly the vertices one level closer that link to v
    let mut expected_pred = vec![Vec::new(); g.order()];
    for q in g.vertices() {
        let Some(dq) = bfs.get(q) else { continue };
        for &v in g.neighbors(q) {
            if bfs.get(v) == Some(dq + 1) {
                expected_pred[v.index()].push(q);
            }
        }
    }
    for v in g.vertices() {
        let expected = core::mem::take(&mut expected_pred[v.index()]);
        let actual = p.pred(v).to_vec();
        if expected != actual {
            report.pred_mismatches.push(Mismatch { source, vertex: v, expected, actual });
        }
    }

    if opts.verify_paths {
        for v in g.vertices() {
            let brute = match brute_force_shortest_paths(g, source, v, opts.path_budget) {
                Ok(set) => set,
                Err(_) => {
                    report.budget_exhausted.push((source, v));
                    continue;
                }
            };
            // one past the brute-force count is enough to expose extra paths
            let ours = enumerate_shortest_paths(p, v, Some(brute.paths.len() + 1)).expect("vertex of g").paths;
            if ours != brute.paths {
                report.path_set_mismatches.push(Mismatch { source, vertex: v, expected: brute.paths, actual: ours });
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{complete, demo, v};
    use crate::graph::GraphBuilder;
    use crate::projection::build_refined;

    fn path(xs: &[u32]) -> Path {
        Path(xs.iter().map(|&x| v(x)).collect())
    }

    #[test]
    fn bfs_demo_from_four() {
        let t = bfs_distances(&demo(), v(4)).unwrap();
        assert_eq!(t.dist, [1, 2, 1, 0, 4, 4, 3, 3].map(Some).to_vec());
    }

    #[test]
    fn bfs_complete_and_arc_cycle() {
        let t = bfs_distances(&complete(4), v(2)).unwrap();
        assert_eq!(t.dist, vec![Some(1), Some(0), Some(1), Some(1)]);

        let mut b = GraphBuilder::new(3);
        b.add_arc(v(1), v(2)).unwrap().add_arc(v(2), v(3)).unwrap().add_arc(v(3), v(1)).unwrap();
        let cycle = b.build();
        assert_eq!(bfs_distances(&cycle, v(1)).unwrap().dist, vec![Some(0), Some(1), Some(2)]);
        assert!(bfs_distances(&cycle, v(4)).is_err());
    }

    #[test]
    fn brute_force_demo_pairs() {
        let g = demo();
        let b = |s, t| brute_force_shortest_paths(&g, v(s), v(t), DEFAULT_PATH_BUDGET).unwrap().paths;
        assert_eq!(b(4, 5), vec![path(&[4, 1, 2, 8, 5]), path(&[4, 3, 2, 8, 5])]);
        assert_eq!(b(4, 3), vec![path(&[4, 3])]);
        assert_eq!(b(5, 6), vec![path(&[5, 8, 6])]);
        assert_eq!(b(6, 6), vec![path(&[6])]);
    }

    #[test]
    fn brute_force_budget_and_unreachable() {
        let g = demo();
        assert_eq!(brute_force_shortest_paths(&g, v(4), v(5), 3), Err(OracleError::BudgetExceeded { budget: 3 }));
        let mut b = GraphBuilder::new(3);
        b.add_arc(v(1), v(2)).unwrap();
        let g = b.build();
        let set = brute_force_shortest_paths(&g, v(2), v(1), 10).unwrap();
        assert!(set.paths.is_empty());
    }

    #[test]
    fn demo_projection_verifies() {
        let g = demo();
        for u in g.vertices() {
            let report = check_projection(&g, &build_refined(&g, u).unwrap());
            assert!(report.is_empty(), "source {u}: {report:?}");
        }
    }

    #[test]
    fn seeded_fault_is_caught() {
        let g = demo();
        let mut p = build_refined(&g, v(4)).unwrap();
        p.corrupt_pred(v(2), vec![v(1)]);
        let report = check_projection(&g, &p);
        assert_eq!(
            report.pred_mismatches,
            vec![Mismatch { source: v(4), vertex: v(2), expected: vec![v(1), v(3)], actual: vec![v(1)] }]
        );
        assert!(report.distance_mismatches.is_empty());
        // the lost route through 3 also shows up in every path set below 2
        let targets: Vec<u32> = report.path_set_mismatches.iter().map(|m| m.vertex.get()).collect();
        assert_eq!(targets, vec![2, 5, 6, 7, 8]);
    }
}
