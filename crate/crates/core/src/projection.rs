//! Graph projections.
//!
//! The *full projection* of a graph from a view vertex `u` is the tree of
//! every simple path leaving `u`, level by level: the children of a vertex
//! instance `x` are the out-neighbors of `x` that are not already on the
//! path from `u` to `x`. It grows exponentially and is kept here as a
//! desk-scale reference ([`build_full`]).
//!
//! Only the instances of a vertex on the lowest level at which it occurs
//! lie on shortest paths, so every deeper instance and its subtree can be
//! dropped ([`refine_tree`]). What is left is the *refined projection*,
//! which [`build_refined`] constructs directly without materializing the
//! tree: it keeps, for each vertex, its level and the set of parent
//! vertices it was generated from.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{GraphError, MixedGraph, VertexId};

/// Default node budget for full projections and tree expansions.
pub const DEFAULT_NODE_CAP: usize = 1 << 20;

#[derive(Clone, Debug, PartialEq)]
pub enum ProjectionError {
    Graph(GraphError),
    /// Expansion would exceed the configured node budget.
    NodeCapExceeded {
        cap: usize,
    },
}

impl fmt::Display for ProjectionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjectionError::Graph(e) => e.fmt(f),
            ProjectionError::NodeCapExceeded { cap } => {
                write!(f, "projection tree exceeds the node cap of {cap}")
            }
        }
    }
}

impl core::error::Error for ProjectionError {
    fn source(&self) -> Option<&(dyn core::error::Error + 'static)> {
        match self {
            ProjectionError::Graph(e) => Some(e),
            ProjectionError::NodeCapExceeded { .. } => None,
        }
    }
}

impl From<GraphError> for ProjectionError {
    fn from(e: GraphError) -> Self {
        ProjectionError::Graph(e)
    }
}

/// Handle to a node of a [`ProjectionTree`].
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(usize);

#[derive(Clone, Debug)]
struct Node {
    vertex: VertexId,
    depth: usize,
    children: Vec<NodeId>,
}

/// A rooted tree of vertex instances.
///
/// Nodes live in an arena; equality is structural (same vertex at the root,
/// same children in the same order, recursively) and ignores both the arena
/// layout and the recorded depth limit.
#[derive(Clone)]
pub struct ProjectionTree {
    nodes: Vec<Node>,
    depth_limit: Option<usize>,
}

impl ProjectionTree {
    pub const ROOT: NodeId = NodeId(0);

    /// A single-node tree.
    pub fn new(root: VertexId) -> Self {
        ProjectionTree { nodes: vec![Node { vertex: root, depth: 0, children: Vec::new() }], depth_limit: None }
    }

    /// Appends `vertex` as the last child of `parent`.
    pub fn push_child(&mut self, parent: NodeId, vertex: VertexId) -> NodeId {
        let id = NodeId(self.nodes.len());
        let depth = self.nodes[parent.0].depth + 1;
        self.nodes.push(Node { vertex, depth, children: Vec::new() });
        self.nodes[parent.0].children.push(id);
        id
    }

    pub fn root(&self) -> VertexId {
        self.nodes[0].vertex
    }

    pub fn vertex(&self, node: NodeId) -> VertexId {
        self.nodes[node.0].vertex
    }

    pub fn depth(&self, node: NodeId) -> usize {
        self.nodes[node.0].depth
    }

    pub fn children(&self, node: NodeId) -> &[NodeId] {
        &self.nodes[node.0].children
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// The level bound the tree was built with, if any.
    pub fn depth_limit(&self) -> Option<usize> {
        self.depth_limit
    }

    pub fn set_depth_limit(&mut self, limit: Option<usize>) {
        self.depth_limit = limit;
    }

    /// Largest node depth.
    pub fn height(&self) -> usize {
        self.nodes.iter().map(|n| n.depth).max().unwrap_or(0)
    }

    /// Node ids in depth-first pre-order.
    pub fn preorder(&self) -> Vec<NodeId> {
        let mut order = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![Self::ROOT];
        while let Some(node) = stack.pop() {
            order.push(node);
            stack.extend(self.children(node).iter().rev());
        }
        order
    }

    /// Parent links, indexed by node id.
    fn parents(&self) -> Vec<Option<NodeId>> {
        let mut parent = vec![None; self.nodes.len()];
        for (i, node) in self.nodes.iter().enumerate() {
            for &c in &node.children {
                parent[c.0] = Some(NodeId(i));
            }
        }
        parent
    }

    /// Vertex sequences from the root to every node, in pre-order.
    pub fn root_paths(&self) -> Vec<Vec<VertexId>> {
        let parent = self.parents();
        self.preorder()
            .into_iter()
            .map(|node| {
                let mut path = vec![self.vertex(node)];
                let mut at = node;
                while let Some(p) = parent[at.0] {
                    path.push(self.vertex(p));
                    at = p;
                }
                path.reverse();
                path
            })
            .collect()
    }

    /// For every vertex in the tree: its minimum depth and the distinct
    /// parent vertices of its instances at that depth (ascending). The root
    /// maps to `(0, [])`.
    pub fn min_depth_profile(&self) -> BTreeMap<VertexId, (usize, Vec<VertexId>)> {
        let min = self.min_depths();
        let mut parents: BTreeMap<VertexId, BTreeSet<VertexId>> = BTreeMap::new();
        for node in &self.nodes {
            for &c in &node.children {
                let child = &self.nodes[c.0];
                if child.depth == min[&child.vertex] {
                    parents.entry(child.vertex).or_default().insert(node.vertex);
                }
            }
        }
        min.into_iter()
            .map(|(v, d)| {
                let ps = parents.remove(&v).map(|s| s.into_iter().collect()).unwrap_or_default();
                (v, (d, ps))
            })
            .collect()
    }

    fn min_depths(&self) -> BTreeMap<VertexId, usize> {
        let mut min: BTreeMap<VertexId, usize> = BTreeMap::new();
        for node in &self.nodes {
            min.entry(node.vertex).and_modify(|d| *d = (*d).min(node.depth)).or_insert(node.depth);
        }
        min
    }
}

impl PartialEq for ProjectionTree {
    fn eq(&self, other: &Self) -> bool {
        let mut stack = vec![(Self::ROOT, Self::ROOT)];
        while let Some((a, b)) = stack.pop() {
            if self.vertex(a) != other.vertex(b) {
                return false;
            }
            let (ca, cb) = (self.children(a), other.children(b));
            if ca.len() != cb.len() {
                return false;
            }
            stack.extend(ca.iter().copied().zip(cb.iter().copied()));
        }
        true
    }
}

impl Eq for ProjectionTree {}

impl fmt::Debug for ProjectionTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ProjectionTree({})", crate::bracket::to_bracket(self))
    }
}

/// Full projection of `g` from `source`: every simple path of at most
/// `max_depth` hops, children in ascending vertex order.
///
/// Fails with [`ProjectionError::NodeCapExceeded`] once the tree would hold
/// more than `node_cap` nodes.
pub fn build_full(
    g: &MixedGraph,
    source: VertexId,
    max_depth: usize,
    node_cap: usize,
) -> Result<ProjectionTree, ProjectionError> {
    g.check_vertex(source)?;
    if node_cap == 0 {
        return Err(ProjectionError::NodeCapExceeded { cap: node_cap });
    }
    let mut tree = ProjectionTree::new(source);
    tree.depth_limit = Some(max_depth);
    let mut on_path = vec![false; g.order()];
    on_path[source.index()] = true;
    // (node, index of the next neighbor to try)
    let mut stack = vec![(ProjectionTree::ROOT, 0usize)];
    while let Some(&mut (node, ref mut next)) = stack.last_mut() {
        let x = tree.vertex(node);
        let out = g.neighbors(x);
        let child = if tree.depth(node) < max_depth {
            let found = out[*next..].iter().position(|w| !on_path[w.index()]);
            found.map(|offset| {
                *next += offset + 1;
                out[*next - 1]
            })
        } else {
            None
        };
        match child {
            Some(w) => {
                if tree.node_count() >= node_cap {
                    return Err(ProjectionError::NodeCapExceeded { cap: node_cap });
                }
                let id = tree.push_child(node, w);
                on_path[w.index()] = true;
                stack.push((id, 0));
            }
            None => {
                on_path[x.index()] = false;
                stack.pop();
            }
        }
    }
    Ok(tree)
}

/// Drops every vertex instance that sits deeper than the shallowest
/// instance of the same vertex, together with its whole subtree.
pub fn refine_tree(tree: &ProjectionTree) -> ProjectionTree {
    let min = tree.min_depths();
    let mut out = ProjectionTree::new(tree.root());
    out.depth_limit = tree.depth_limit;
    let mut stack = vec![(ProjectionTree::ROOT, ProjectionTree::ROOT)];
    while let Some((src, dst)) = stack.pop() {
        let kept: Vec<NodeId> =
            tree.children(src).iter().copied().filter(|&c| tree.depth(c) == min[&tree.vertex(c)]).collect();
        let mut mapped = Vec::with_capacity(kept.len());
        for c in kept {
            mapped.push((c, out.push_child(dst, tree.vertex(c))));
        }
        stack.extend(mapped.into_iter().rev());
    }
    out
}

/// Work counters collected while building a refined projection.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BuildStats {
    /// Vertices assigned a level other than the source.
    pub vertices_placed: usize,
    /// Out-neighbor entries inspected across all expanded rows.
    pub adjacency_cells_read: usize,
    /// Number of non-empty levels after the source; the source's eccentricity.
    pub levels_built: usize,
}

/// Shortest-path predecessor structure from one source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinedProjection {
    source: VertexId,
    pred: Vec<Vec<VertexId>>,
    level: Vec<Option<u32>>,
    frontiers: Vec<Vec<VertexId>>,
    stats: BuildStats,
}

impl RefinedProjection {
    pub fn source(&self) -> VertexId {
        self.source
    }

    /// Order of the graph the projection was built from.
    pub fn order(&self) -> usize {
        self.level.len()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v.index() < self.order()
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(GraphError::InvalidVertex { id: v.get(), order: self.order() })
        }
    }

    /// Hop distance from the source, `None` when unreachable.
    ///
    /// # Panics
    ///
    /// If `v` is outside the graph.
    pub fn level(&self, v: VertexId) -> Option<u32> {
        self.level[v.index()]
    }

    /// Ascending predecessors of `v` on shortest paths; empty for the
    /// source and for unreachable vertices.
    ///
    /// # Panics
    ///
    /// If `v` is outside the graph.
    pub fn pred(&self, v: VertexId) -> &[VertexId] {
        &self.pred[v.index()]
    }

    /// Vertex sets by level; entry `k` holds the vertices at distance `k`,
    /// so entry 0 is `[source]`.
    pub fn frontiers(&self) -> &[Vec<VertexId>] {
        &self.frontiers
    }

    pub fn stats(&self) -> BuildStats {
        self.stats
    }

    /// Largest finite level.
    pub fn eccentricity(&self) -> u32 {
        (self.frontiers.len() - 1) as u32
    }

    pub fn is_reachable(&self, v: VertexId) -> bool {
        self.level(v).is_some()
    }

    /// Vertices with no path from the source, ascending.
    pub fn unreachable(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.level.iter().enumerate().filter(|(_, l)| l.is_none()).map(|(i, _)| VertexId::from_index(i))
    }

    /// `(level, pred)` for every reachable vertex, source included; same
    /// shape as [`ProjectionTree::min_depth_profile`].
    pub fn profile(&self) -> BTreeMap<VertexId, (usize, Vec<VertexId>)> {
        self.frontiers
            .iter()
            .flatten()
            .map(|&v| (v, (self.level(v).unwrap() as usize, self.pred(v).to_vec())))
            .collect()
    }

    /// Successor lists of the shortest-path DAG: `x` is listed under `p`
    /// whenever `p` is a predecessor of `x`. Ascending.
    pub fn successors(&self) -> Vec<Vec<VertexId>> {
        let mut succ = vec![Vec::new(); self.order()];
        for (i, preds) in self.pred.iter().enumerate() {
            for p in preds {
                succ[p.index()].push(VertexId::from_index(i));
            }
        }
        succ
    }

    /// Replaces the predecessor set of `v` without any consistency check.
    /// Exists for fault-injection tests of the verification code.
    #[doc(hidden)]
    pub fn corrupt_pred(&mut self, v: VertexId, pred: Vec<VertexId>) {
        self.pred[v.index()] = pred;
    }
}

/// Builds the refined projection of `g` from `source` level by level.
///
/// Level 1 is `N(source)`. Each following level collects, for every vertex
/// `x` of the previous level, the out-neighbors of `x` that are not yet
/// settled, recording `x` as their predecessor. Settled vertices are only
/// added once a level is complete, so a vertex reached from several
/// vertices of the same level keeps all of them as predecessors. The build
/// stops once every vertex is settled or a level comes out empty.
pub fn build_refined(g: &MixedGraph, source: VertexId) -> Result<RefinedProjection, GraphError> {
    g.check_vertex(source)?;
    let n = g.order();
    let mut pred = vec![Vec::new(); n];
    let mut level = vec![None; n];
    let mut settled = vec![false; n];
    let mut settled_count = 1;
    let mut stats = BuildStats::default();

    settled[source.index()] = true;
    level[source.index()] = Some(0);
    let mut frontiers = vec![vec![source]];

    let mut k = 0u32;
    while settled_count < n {
        k += 1;
        let frontier = frontiers.last().unwrap();
        let mut next = Vec::new();
        for &x in frontier {
            let out = g.neighbors(x);
            stats.adjacency_cells_read += out.len();
            for &y in out {
                if settled[y.index()] {
                    continue;
                }
                if pred[y.index()].is_empty() {
                    level[y.index()] = Some(k);
                    next.push(y);
                }
                pred[y.index()].push(x);
            }
        }
        if next.is_empty() {
            break;
        }
        next.sort_unstable();
        for &y in &next {
            settled[y.index()] = true;
        }
        settled_count += next.len();
        stats.vertices_placed += next.len();
        stats.levels_built = k as usize;
        frontiers.push(next);
    }

    Ok(RefinedProjection { source, pred, level, frontiers, stats })
}

/// Plain queue BFS levels, used only to size full-projection tests.
#[cfg(test)]
pub(crate) fn queue_levels(g: &MixedGraph, source: VertexId) -> Vec<Option<u32>> {
    use alloc::collections::VecDeque;
    let mut level = vec![None; g.order()];
    level[source.index()] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if level[y.index()].is_none() {
                level[y.index()] = Some(level[x.index()].unwrap() + 1);
                queue.push_back(y);
            }
        }
    }
    level
}
