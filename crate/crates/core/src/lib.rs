//! Shortest paths on unweighted mixed graphs through refined projections.
//!
//! A mixed graph carries both undirected edges and directed arcs. For a
//! chosen source vertex the crate precomputes a *refined projection*: every
//! reachable vertex gets its hop distance and the complete set of
//! predecessors that lie on some shortest path to it. Distance, path and
//! path-count queries are then answered by walking that predecessor
//! structure, without touching the graph again.
//!
//! ```
//! use mixproj_core::{graph::GraphBuilder, paths, projection, VertexId};
//!
//! let v = |i| VertexId::new(i).unwrap();
//! let mut b = GraphBuilder::new(4);
//! b.add_edge(v(1), v(2)).unwrap();
//! b.add_edge(v(1), v(3)).unwrap();
//! b.add_arc(v(2), v(4)).unwrap();
//! b.add_arc(v(3), v(4)).unwrap();
//! let g = b.build();
//!
//! let p = projection::build_refined(&g, v(1)).unwrap();
//! assert_eq!(p.level(v(4)), Some(2));
//! assert_eq!(p.pred(v(4)), &[v(2), v(3)]);
//! let all = paths::enumerate_shortest_paths(&p, v(4), None).unwrap();
//! assert_eq!(all.paths.len(), 2);
//! ```
//!
//! The crate is `no_std` and only needs `alloc`. File formats, threading
//! and the command-line tool live in the `mixproj` crate.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bracket;
pub mod graph;
pub mod oracle;
pub mod paths;
pub mod projection;
pub mod random;

#[cfg(test)]
pub(crate) mod fixtures;

pub use graph::{EdgeKind, GraphBuilder, GraphError, MixedGraph, VertexId};
pub use paths::{DistanceMatrix, DistanceTable, Path, PathCount, PathSet};
pub use projection::{BuildStats, ProjectionTree, RefinedProjection};
