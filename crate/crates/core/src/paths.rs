//! Queries answered from a refined projection.
//!
//! Every shortest path can be listed or counted from the predecessor sets
//! alone. The single-source and all-pairs drivers sit at the bottom.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{GraphError, MixedGraph, VertexId};
use crate::projection::{build_refined, RefinedProjection};

/// A vertex sequence from a source to a target.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path(pub Vec<VertexId>);

impl Path {
    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    /// Length in hops.
    pub fn hops(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn source(&self) -> Option<VertexId> {
        self.0.first().copied()
    }

    pub fn target(&self) -> Option<VertexId> {
        self.0.last().copied()
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// All (or the first `limit`) shortest paths to one target, in
/// lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathSet {
    pub source: VertexId,
    pub target: VertexId,
    pub paths: Vec<Path>,
    /// More paths exist beyond the returned ones.
    pub truncated: bool,
}

/// Hop distances from one source; `None` marks unreachable vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DistanceTable {
    pub source: VertexId,
    pub dist: Vec<Option<u32>>,
}

impl DistanceTable {
    /// # Panics
    ///
    /// If `v` is outside the table.
    pub fn get(&self, v: VertexId) -> Option<u32> {
        self.dist[v.index()]
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, Option<u32>)> + '_ {
        self.dist.iter().enumerate().map(|(i, &d)| (VertexId::from_index(i), d))
    }
}

/// `n × n` hop distances, row = source.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DistanceMatrix {
    order: usize,
    cells: Vec<Option<u32>>,
}

impl DistanceMatrix {
    /// Assembles a matrix from one table per source. Tables may arrive in
    /// any order; each lands in the row of its source.
    ///
    /// # Panics
    ///
    /// If a table has the wrong width or a source is repeated or missing.
    pub fn from_tables(order: usize, tables: impl IntoIterator<Item = DistanceTable>) -> Self {
        let mut cells = vec![None; order * order];
        let mut filled = vec![false; order];
        for t in tables {
            assert_eq!(t.dist.len(), order, "distance table width");
            let row = t.source.index();
            assert!(!filled[row], "source {} given twice", t.source);
            filled[row] = true;
            cells[row * order..(row + 1) * order].copy_from_slice(&t.dist);
        }
        assert!(filled.iter().all(|&f| f), "missing source rows");
        DistanceMatrix { order, cells }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn row(&self, source: VertexId) -> &[Option<u32>] {
        let i = source.index();
        &self.cells[i * self.order..(i + 1) * self.order]
    }

    pub fn get(&self, source: VertexId, target: VertexId) -> Option<u32> {
        self.row(source)[target.index()]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Option<u32>]> {
        // chunks() panics on 0, and an empty matrix has no rows anyway
        self.cells.chunks(self.order.max(1))
    }
}

/// Number of shortest paths, or a signal that it does not fit in `u64`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum PathCount {
    Exact(u64),
    Overflow,
}

impl PathCount {
    pub fn exact(self) -> Option<u64> {
        match self {
            PathCount::Exact(n) => Some(n),
            PathCount::Overflow => None,
        }
    }
}

/// Hop distance from the projection's source, `None` when unreachable.
pub fn distance(p: &RefinedProjection, v: VertexId) -> Result<Option<u32>, GraphError> {
    p.check_vertex(v)?;
    Ok(p.level(v))
}

/// Largest finite distance from the source.
pub fn eccentricity(p: &RefinedProjection) -> u32 {
    p.eccentricity()
}

/// One shortest path recovered backwards from the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extraction {
    pub path: Path,
    /// Vertices visited while walking back; always `distance + 1`.
    pub touched: usize,
}

/// Walks predecessor links from `v` back to the source, taking the smallest
/// predecessor at every step. `None` when `v` is unreachable.
pub fn extract_path(p: &RefinedProjection, v: VertexId) -> Result<Option<Extraction>, GraphError> {
    p.check_vertex(v)?;
    if !p.is_reachable(v) {
        return Ok(None);
    }
    let mut rev = vec![v];
    let mut at = v;
    while let Some(&prev) = p.pred(at).first() {
        rev.push(prev);
        at = prev;
    }
    debug_assert_eq!(at, p.source());
    rev.reverse();
    let touched = rev.len();
    Ok(Some(Extraction { path: Path(rev), touched }))
}

/// Lazy iterator over every shortest path to a target, in lexicographic
/// order of the vertex sequences.
#[derive(Clone, Debug)]
pub struct ShortestPaths {
    /// Successors restricted to vertices that lie on some shortest path to
    /// the target; every such vertex except the target has at least one.
    succ: Vec<Vec<VertexId>>,
    target: VertexId,
    /// Current path as (vertex, index of the next successor to try).
    stack: Vec<(VertexId, usize)>,
    started: bool,
}

impl ShortestPaths {
    pub fn new(p: &RefinedProjection, target: VertexId) -> Result<Self, GraphError> {
        p.check_vertex(target)?;
        let n = p.order();
        let mut succ = vec![Vec::new(); n];
        let mut stack = Vec::new();
        if p.is_reachable(target) {
            // backward closure over predecessor sets, level by level
            let mut on_route = vec![false; n];
            on_route[target.index()] = true;
            let mut layer = vec![target];
            while !layer.is_empty() {
                let mut up = Vec::new();
                for &x in &layer {
                    for &q in p.pred(x) {
                        succ[q.index()].push(x);
                        if !on_route[q.index()] {
                            on_route[q.index()] = true;
                            up.push(q);
                        }
                    }
                }
                layer = up;
            }
            for s in &mut succ {
                s.sort_unstable();
            }
            stack.push((p.source(), 0));
        }
        Ok(ShortestPaths { succ, target, stack, started: false })
    }
}

impl Iterator for ShortestPaths {
    type Item = Path;

    fn next(&mut self) -> Option<Path> {
        if self.started {
            // drop the emitted target, then backtrack to the deepest vertex
            // that still has an untried successor
            self.stack.pop();
            while let Some(&(x, next)) = self.stack.last() {
                if next < self.succ[x.index()].len() {
                    break;
                }
                self.stack.pop();
            }
        }
        self.started = true;
        let (mut x, _) = *self.stack.last()?;
        while x != self.target {
            let top = self.stack.last_mut().unwrap();
            let y = self.succ[x.index()][top.1];
            top.1 += 1;
            self.stack.push((y, 0));
            x = y;
        }
        Some(Path(self.stack.iter().map(|&(v, _)| v).collect()))
    }
}

/// All shortest paths from the source to `v`, or the first `limit` of
/// them. Unreachable targets give an empty, untruncated set.
pub fn enumerate_shortest_paths(
    p: &RefinedProjection,
    v: VertexId,
    limit: Option<usize>,
) -> Result<PathSet, GraphError> {
    let mut iter = ShortestPaths::new(p, v)?;
    let mut paths = Vec::new();
    let mut truncated = false;
    loop {
        if limit.is_some_and(|l| paths.len() >= l) {
            truncated = iter.next().is_some();
            break;
        }
        match iter.next() {
            Some(path) => paths.push(path),
            None => break,
        }
    }
    Ok(PathSet { source: p.source(), target: v, paths, truncated })
}

/// Number of shortest paths from the source to `v`: 1 at the source and
/// the sum over predecessors elsewhere. 0 for unreachable targets.
pub fn count_shortest_paths(p: &RefinedProjection, v: VertexId) -> Result<PathCount, GraphError> {
    p.check_vertex(v)?;
    let counts = path_counts(p);
    Ok(counts[v.index()].map_or(PathCount::Overflow, PathCount::Exact))
}

/// Shortest-path counts for every vertex; `None` marks overflow.
pub fn path_counts(p: &RefinedProjection) -> Vec<Option<u64>> {
    let mut sigma = vec![Some(0u64); p.order()];
    sigma[p.source().index()] = Some(1);
    for layer in p.frontiers().iter().skip(1) {
        for &x in layer {
            sigma[x.index()] =
                p.pred(x).iter().try_fold(0u64, |acc, q| sigma[q.index()].and_then(|s| acc.checked_add(s)));
        }
    }
    sigma
}

/// Distances from `source` together with the projection they came from.
#[derive(Clone, Debug)]
pub struct SingleSource {
    pub table: DistanceTable,
    pub projection: RefinedProjection,
}

pub fn sssp(g: &MixedGraph, source: VertexId) -> Result<SingleSource, GraphError> {
    let projection = build_refined(g, source)?;
    let table = distance_table(&projection);
    Ok(SingleSource { table, projection })
}

pub fn distance_table(p: &RefinedProjection) -> DistanceTable {
    DistanceTable { source: p.source(), dist: (0..p.order()).map(|i| p.level(VertexId::from_index(i))).collect() }
}

/// All-pairs distances, one refined projection per source, sources in
/// ascending order.
pub fn apsp(g: &MixedGraph) -> DistanceMatrix {
    apsp_with_projections(g).0
}

pub fn apsp_with_projections(g: &MixedGraph) -> (DistanceMatrix, Vec<RefinedProjection>) {
    let projections: Vec<RefinedProjection> = g.vertices().map(|u| build_refined(g, u).expect("vertex of g")).collect();
    let matrix = DistanceMatrix::from_tables(g.order(), projections.iter().map(distance_table));
    (matrix, projections)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{arc_path, complete, demo, v};
    use crate::graph::GraphBuilder;
    use crate::random::random_mixed_graph;

    fn path(xs: &[u32]) -> Path {
        Path(xs.iter().map(|&x| v(x)).collect())
    }

    fn p4() -> RefinedProjection {
        build_refined(&demo(), v(4)).unwrap()
    }

    #[test]
    fn distances_from_four() {
        let p = p4();
        assert_eq!(distance(&p, v(5)), Ok(Some(4)));
        assert_eq!(distance(&p, v(4)), Ok(Some(0)));
        assert!(distance(&p, v(9)).is_err());
        let q = build_refined(&arc_path(3), v(3)).unwrap();
        assert_eq!(distance(&q, v(1)), Ok(None));
    }

    #[test]
    fn eccentricities() {
        assert_eq!(eccentricity(&p4()), 4);
        assert_eq!(eccentricity(&build_refined(&demo(), v(1)).unwrap()), 3);
        for u in 1..=3 {
            assert_eq!(eccentricity(&build_refined(&complete(3), v(u)).unwrap()), 1);
        }
        let isolated = build_refined(&GraphBuilder::new(1).build(), v(1)).unwrap();
        assert_eq!(eccentricity(&isolated), 0);
    }

    #[test]
    fn two_paths_from_four_to_five() {
        let set = enumerate_shortest_paths(&p4(), v(5), None).unwrap();
        assert_eq!(set.paths, vec![path(&[4, 1, 2, 8, 5]), path(&[4, 3, 2, 8, 5])]);
        assert!(!set.truncated);
        assert_eq!(count_shortest_paths(&p4(), v(5)), Ok(PathCount::Exact(2)));
    }

    #[test]
    fn trivial_targets() {
        let p = p4();
        assert_eq!(enumerate_shortest_paths(&p, v(1), None).unwrap().paths, vec![path(&[4, 1])]);
        assert_eq!(enumerate_shortest_paths(&p, v(4), None).unwrap().paths, vec![path(&[4])]);
        assert_eq!(count_shortest_paths(&p, v(4)), Ok(PathCount::Exact(1)));
        assert_eq!(count_shortest_paths(&p, v(7)), Ok(PathCount::Exact(2)));
    }

    #[test]
    fn unreachable_target_is_empty() {
        let q = build_refined(&arc_path(3), v(3)).unwrap();
        let set = enumerate_shortest_paths(&q, v(1), Some(3)).unwrap();
        assert!(set.paths.is_empty() && !set.truncated);
        assert_eq!(count_shortest_paths(&q, v(1)), Ok(PathCount::Exact(0)));
        assert_eq!(extract_path(&q, v(1)), Ok(None));
    }

    #[test]
    fn limit_truncates() {
        let p = p4();
        let one = enumerate_shortest_paths(&p, v(5), Some(1)).unwrap();
        assert_eq!(one.paths, vec![path(&[4, 1, 2, 8, 5])]);
        assert!(one.truncated);
        let two = enumerate_shortest_paths(&p, v(5), Some(2)).unwrap();
        assert!(!two.truncated);
        let none = enumerate_shortest_paths(&p, v(5), Some(0)).unwrap();
        assert!(none.paths.is_empty() && none.truncated);
    }

    #[test]
    fn enumeration_is_sorted_and_counted() {
        for seed in 0..40 {
            let g = random_mixed_graph(9, 0.4, 0.3, seed).unwrap();
            for u in g.vertices() {
                let p = build_refined(&g, u).unwrap();
                for t in g.vertices() {
                    let set = enumerate_shortest_paths(&p, t, None).unwrap();
                    assert!(set.paths.windows(2).all(|w| w[0] < w[1]));
                    let count = count_shortest_paths(&p, t).unwrap();
                    assert_eq!(count, PathCount::Exact(set.paths.len() as u64));
                    for path in &set.paths {
                        assert_eq!(path.hops() as u32, p.level(t).unwrap());
                        assert!(path.vertices().windows(2).all(|w| g.has_link(w[0], w[1])));
                    }
                }
            }
        }
    }

    #[test]
    fn extraction_touches_distance_plus_one() {
        let p = p4();
        for t in 1..=8 {
            let e = extract_path(&p, v(t)).unwrap().unwrap();
            assert_eq!(e.touched as u32, p.level(v(t)).unwrap() + 1);
            assert_eq!(e.path.source(), Some(v(4)));
        }
        assert_eq!(extract_path(&p, v(5)).unwrap().unwrap().path, path(&[4, 1, 2, 8, 5]));
    }

    #[test]
    fn count_overflow_is_flagged() {
        // a chain of 70 diamonds doubles the count at every stage: 2^70 paths
        let stages = 70u32;
        let n = 3 * stages + 1;
        let mut b = GraphBuilder::new(n as usize);
        for s in 0..stages {
            let (a, x, y, z) = (3 * s + 1, 3 * s + 2, 3 * s + 3, 3 * s + 4);
            b.add_arc(v(a), v(x)).unwrap();
            b.add_arc(v(a), v(y)).unwrap();
            b.add_arc(v(x), v(z)).unwrap();
            b.add_arc(v(y), v(z)).unwrap();
        }
        let g = b.build();
        let p = build_refined(&g, v(1)).unwrap();
        assert_eq!(count_shortest_paths(&p, v(n)), Ok(PathCount::Overflow));
        assert_eq!(count_shortest_paths(&p, v(3 * 63 + 1)), Ok(PathCount::Exact(1 << 63)));
        assert_eq!(count_shortest_paths(&p, v(3 * 64 + 1)), Ok(PathCount::Overflow));
        let first = enumerate_shortest_paths(&p, v(n), Some(3)).unwrap();
        assert_eq!(first.paths.len(), 3);
        assert!(first.truncated);
    }

    #[test]
    fn sssp_tables() {
        let s = sssp(&demo(), v(4)).unwrap();
        let expect = [1, 2, 1, 0, 4, 4, 3, 3].map(Some).to_vec();
        assert_eq!(s.table.dist, expect);
        let s1 = sssp(&demo(), v(1)).unwrap();
        assert_eq!(s1.table.dist, [0, 1, 2, 1, 3, 3, 2, 2].map(Some).to_vec());
        let single = sssp(&GraphBuilder::new(1).build(), v(1)).unwrap();
        assert_eq!(single.table.dist, vec![Some(0)]);
        for (x, d) in s.table.iter() {
            assert_eq!(distance(&s.projection, x), Ok(d));
        }
    }

    #[test]
    fn apsp_on_arc_path() {
        let m = apsp(&arc_path(3));
        let rows: Vec<Vec<Option<u32>>> = m.rows().map(<[_]>::to_vec).collect();
        assert_eq!(
            rows,
            vec![vec![Some(0), Some(1), Some(2)], vec![None, Some(0), Some(1)], vec![None, None, Some(0)],]
        );
        assert_eq!(apsp(&demo()).row(v(4)), &[1, 2, 1, 0, 4, 4, 3, 3].map(Some)[..]);
    }
}
