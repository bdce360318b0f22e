//! Mixed-graph data model.
//!
//! A graph of order `n` stores, for every vertex `v`, the ascending set of
//! out-neighbors `N(v)`. An undirected edge `{u, v}` appears in both
//! `N(u)` and `N(v)`; an arc `u -> v` appears only in `N(u)`. Vertex ids are
//! 1-based everywhere outside this module.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;
use core::num::NonZeroU32;

/// A 1-based vertex identifier.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(NonZeroU32);

impl VertexId {
    /// Returns `None` for zero.
    pub const fn new(id: u32) -> Option<Self> {
        match NonZeroU32::new(id) {
            Some(id) => Some(VertexId(id)),
            None => None,
        }
    }

    pub const fn get(self) -> u32 {
        self.0.get()
    }

    /// Zero-based position of this vertex in per-vertex tables.
    pub const fn index(self) -> usize {
        (self.0.get() - 1) as usize
    }

    /// Inverse of [`VertexId::index`].
    ///
    /// # Panics
    ///
    /// If `index + 1` does not fit in a `u32`.
    pub fn from_index(index: usize) -> Self {
        let id = u32::try_from(index + 1).expect("vertex index out of u32 range");
        VertexId(NonZeroU32::new(id).unwrap())
    }
}

impl fmt::Debug for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// How an ordered pair `(u, v)` is connected.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    None,
    /// Arc `u -> v`.
    ArcForward,
    /// Arc `v -> u`.
    ArcBackward,
    Edge,
}

impl EdgeKind {
    /// The classification of the reversed pair.
    pub fn reversed(self) -> Self {
        match self {
            EdgeKind::ArcForward => EdgeKind::ArcBackward,
            EdgeKind::ArcBackward => EdgeKind::ArcForward,
            other => other,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum GraphError {
    InvalidVertex {
        id: u32,
        order: usize,
    },
    SelfLoop(VertexId),
    /// The unordered pair was already declared as an edge or arc.
    DuplicatePair(VertexId, VertexId),
    SameVertex(VertexId),
    NonSquareMatrix {
        row: usize,
        len: usize,
        order: usize,
    },
    InvalidProbability(f64),
    EmptyGraph,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::InvalidVertex { id, order } => {
                write!(f, "vertex {id} is out of range 1..={order}")
            }
            GraphError::SelfLoop(v) => write!(f, "self-loop on vertex {v}"),
            GraphError::DuplicatePair(u, v) => {
                write!(f, "pair {{{u}, {v}}} is declared more than once")
            }
            GraphError::SameVertex(v) => write!(f, "pair ({v}, {v}) does not name two vertices"),
            GraphError::NonSquareMatrix { row, len, order } => {
                write!(f, "adjacency matrix row {} has {len} entries, expected {order}", row + 1)
            }
            GraphError::InvalidProbability(p) => write!(f, "probability {p} is not in [0, 1]"),
            GraphError::EmptyGraph => f.write_str("graph must have at least one vertex"),
        }
    }
}

impl core::error::Error for GraphError {}

/// An unweighted mixed graph. Immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct MixedGraph {
    adjacency: Vec<Vec<VertexId>>,
}

impl fmt::Debug for MixedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for v in self.vertices() {
            m.entry(&v, &self.adjacency[v.index()]);
        }
        m.finish()
    }
}

impl MixedGraph {
    /// Builds a graph from a square 0/1 matrix where `matrix[i][j] != 0`
    /// means vertex `i + 1` reaches vertex `j + 1`. The diagonal is ignored.
    pub fn from_adjacency_matrix<R: AsRef<[u8]>>(matrix: &[R]) -> Result<Self, GraphError> {
        let order = matrix.len();
        let mut adjacency = Vec::with_capacity(order);
        for (i, row) in matrix.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != order {
                return Err(GraphError::NonSquareMatrix { row: i, len: row.len(), order });
            }
            let out = row
                .iter()
                .enumerate()
                .filter(|&(j, &cell)| j != i && cell != 0)
                .map(|(j, _)| VertexId::from_index(j))
                .collect();
            adjacency.push(out);
        }
        Ok(MixedGraph { adjacency })
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = VertexId> + Clone {
        (0..self.order()).map(VertexId::from_index)
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v.index() < self.order() {
            Ok(())
        } else {
            Err(GraphError::InvalidVertex { id: v.get(), order: self.order() })
        }
    }

    /// Validates a raw external id.
    pub fn vertex(&self, id: u32) -> Result<VertexId, GraphError> {
        let v = VertexId::new(id).ok_or(GraphError::InvalidVertex { id, order: self.order() })?;
        self.check_vertex(v)?;
        Ok(v)
    }

    /// `N(v)`, ascending.
    pub fn out_neighbors(&self, v: VertexId) -> Result<&[VertexId], GraphError> {
        self.check_vertex(v)?;
        Ok(&self.adjacency[v.index()])
    }

    /// `N(v)` without the range check.
    ///
    /// # Panics
    ///
    /// If `v` is not a vertex of this graph.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v.index()]
    }

    /// Whether `v` is in `N(u)`.
    pub fn has_link(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency.get(u.index()).is_some_and(|out| out.binary_search(&v).is_ok())
    }

    pub fn classify_pair(&self, u: VertexId, v: VertexId) -> Result<EdgeKind, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SameVertex(u));
        }
        Ok(match (self.has_link(u, v), self.has_link(v, u)) {
            (true, true) => EdgeKind::Edge,
            (true, false) => EdgeKind::ArcForward,
            (false, true) => EdgeKind::ArcBackward,
            (false, false) => EdgeKind::None,
        })
    }

    /// Every connected unordered pair once, as `(min, max, kind)` with
    /// `kind` classified from `min`'s side, sorted by `(min, max)`.
    pub fn pairs(&self) -> Vec<(VertexId, VertexId, EdgeKind)> {
        let mut linked = BTreeSet::new();
        for u in self.vertices() {
            for &w in &self.adjacency[u.index()] {
                linked.insert(if u < w { (u, w) } else { (w, u) });
            }
        }
        linked
            .into_iter()
            .map(|(a, b)| {
                let kind = match (self.has_link(a, b), self.has_link(b, a)) {
                    (true, true) => EdgeKind::Edge,
                    (true, false) => EdgeKind::ArcForward,
                    _ => EdgeKind::ArcBackward,
                };
                (a, b, kind)
            })
            .collect()
    }

    /// Total number of adjacency entries (an edge counts twice).
    pub fn link_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum()
    }

    /// Edge and arc counts.
    pub fn census(&self) -> Census {
        let mut census = Census::default();
        for (_, _, kind) in self.pairs() {
            match kind {
                EdgeKind::Edge => census.edges += 1,
                EdgeKind::ArcForward | EdgeKind::ArcBackward => census.arcs += 1,
                EdgeKind::None => {}
            }
        }
        census
    }
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct Census {
    pub edges: usize,
    pub arcs: usize,
}

/// Incremental construction of a [`MixedGraph`], rejecting self-loops and
/// repeated declarations of the same unordered pair.
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    adjacency: Vec<Vec<VertexId>>,
    declared: BTreeSet<(VertexId, VertexId)>,
}

impl GraphBuilder {
    pub fn new(order: usize) -> Self {
        GraphBuilder { adjacency: alloc::vec![Vec::new(); order], declared: BTreeSet::new() }
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    fn declare(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        for w in [u, v] {
            if w.index() >= self.order() {
                return Err(GraphError::InvalidVertex { id: w.get(), order: self.order() });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let key = if u < v { (u, v) } else { (v, u) };
        if !self.declared.insert(key) {
            return Err(GraphError::DuplicatePair(key.0, key.1));
        }
        Ok(())
    }

    /// Undirected edge `{u, v}`.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<&mut Self, GraphError> {
        self.declare(u, v)?;
        self.adjacency[u.index()].push(v);
        self.adjacency[v.index()].push(u);
        Ok(self)
    }

    /// Arc `from -> to`.
    pub fn add_arc(&mut self, from: VertexId, to: VertexId) -> Result<&mut Self, GraphError> {
        self.declare(from, to)?;
        self.adjacency[from.index()].push(to);
        Ok(self)
    }

    pub fn build(mut self) -> MixedGraph {
        for out in &mut self.adjacency {
            out.sort_unstable();
        }
        MixedGraph { adjacency: self.adjacency }
    }
}
