//! JSON documents emitted by the command-line tool.
//!
//! Every vertex appears under its 1-based id. Maps keyed by vertex are
//! written with ascending numeric keys and all lists are ascending, so the
//! output for a given input is byte-stable. Unreachable distances are
//! `null`.

use std::collections::BTreeMap;

use mixproj_core::oracle::{Mismatch, OracleReport};
use mixproj_core::paths::{DistanceMatrix, DistanceTable, Path, PathCount, PathSet};
use mixproj_core::projection::{BuildStats, RefinedProjection};
use mixproj_core::VertexId;
use serde::{Deserialize, Serialize};

fn ids(vs: &[VertexId]) -> Vec<u32> {
    vs.iter().map(|v| v.get()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsDoc {
    pub vertices_placed: usize,
    pub adjacency_cells_read: usize,
    pub levels_built: usize,
}

impl From<BuildStats> for StatsDoc {
    fn from(s: BuildStats) -> Self {
        StatsDoc {
            vertices_placed: s.vertices_placed,
            adjacency_cells_read: s.adjacency_cells_read,
            levels_built: s.levels_built,
        }
    }
}

/// A refined projection.
///
/// `levels[k - 1]` lists the vertices at distance `k`; the source itself
/// is only given in `source`. `pred` has an entry for every reachable
/// vertex other than the source.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectionDoc {
    pub source: u32,
    pub levels: Vec<Vec<u32>>,
    pub pred: BTreeMap<u32, Vec<u32>>,
    pub unreachable: Vec<u32>,
    pub stats: StatsDoc,
}

impl From<&RefinedProjection> for ProjectionDoc {
    fn from(p: &RefinedProjection) -> Self {
        let levels: Vec<Vec<u32>> = p.frontiers().iter().skip(1).map(|f| ids(f)).collect();
        let pred = levels.iter().flatten().map(|&v| (v, ids(p.pred(VertexId::new(v).unwrap())))).collect();
        ProjectionDoc {
            source: p.source().get(),
            levels,
            pred,
            unreachable: p.unreachable().map(VertexId::get).collect(),
            stats: p.stats().into(),
        }
    }
}

/// Shortest paths to one target. `count` is `null` when it overflowed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathSetDoc {
    pub source: u32,
    pub target: u32,
    pub distance: Option<u32>,
    pub count: Option<u64>,
    pub paths: Vec<Vec<u32>>,
    pub truncated: bool,
}

impl PathSetDoc {
    pub fn new(set: &PathSet, distance: Option<u32>, count: PathCount) -> Self {
        PathSetDoc {
            source: set.source.get(),
            target: set.target.get(),
            distance,
            count: count.exact(),
            paths: set.paths.iter().map(|p| ids(p.vertices())).collect(),
            truncated: set.truncated,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceTableDoc {
    pub source: u32,
    pub dist: BTreeMap<u32, Option<u32>>,
}

impl From<&DistanceTable> for DistanceTableDoc {
    fn from(t: &DistanceTable) -> Self {
        DistanceTableDoc { source: t.source.get(), dist: t.iter().map(|(v, d)| (v.get(), d)).collect() }
    }
}

/// `matrix[i][j]` is the distance from `vertices[i]` to `vertices[j]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceMatrixDoc {
    pub vertices: Vec<u32>,
    pub matrix: Vec<Vec<Option<u32>>>,
}

impl From<&DistanceMatrix> for DistanceMatrixDoc {
    fn from(m: &DistanceMatrix) -> Self {
        DistanceMatrixDoc {
            vertices: (1..=m.order() as u32).collect(),
            matrix: m.rows().take(m.order()).map(<[_]>::to_vec).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MismatchDoc<T> {
    pub source: u32,
    pub vertex: u32,
    pub expected: T,
    pub actual: T,
}

fn mismatch<T, U>(m: &Mismatch<T>, f: impl Fn(&T) -> U) -> MismatchDoc<U> {
    MismatchDoc { source: m.source.get(), vertex: m.vertex.get(), expected: f(&m.expected), actual: f(&m.actual) }
}

fn path_ids(paths: &[Path]) -> Vec<Vec<u32>> {
    paths.iter().map(|p| ids(p.vertices())).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReportDoc {
    pub verified: bool,
    pub distance_mismatches: Vec<MismatchDoc<Option<u32>>>,
    pub pred_mismatches: Vec<MismatchDoc<Vec<u32>>>,
    pub path_set_mismatches: Vec<MismatchDoc<Vec<Vec<u32>>>>,
    pub budget_exhausted: Vec<[u32; 2]>,
}

impl From<&OracleReport> for OracleReportDoc {
    fn from(r: &OracleReport) -> Self {
        OracleReportDoc {
            verified: r.is_empty(),
            distance_mismatches: r.distance_mismatches.iter().map(|m| mismatch(m, |d| *d)).collect(),
            pred_mismatches: r.pred_mismatches.iter().map(|m| mismatch(m, |p| ids(p))).collect(),
            path_set_mismatches: r.path_set_mismatches.iter().map(|m| mismatch(m, |p| path_ids(p))).collect(),
            budget_exhausted: r.budget_exhausted.iter().map(|(s, t)| [s.get(), t.get()]).collect(),
        }
    }
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents always serialize");
    s.push('\n');
    s
}
