//! Graphs shared by the unit tests.

use crate::graph::{GraphBuilder, MixedGraph, VertexId};
use alloc::vec;
use alloc::vec::Vec;

pub fn v(id: u32) -> VertexId {
    VertexId::new(id).unwrap()
}

/// Adjacency matrix of the 8-vertex demo graph, 1 = link.
pub fn demo_matrix() -> Vec<Vec<u8>> {
    vec![
        vec![0, 1, 0, 1, 0, 0, 0, 0],
        vec![1, 0, 1, 0, 0, 0, 1, 1],
        vec![0, 1, 0, 1, 0, 0, 0, 0],
        vec![1, 0, 1, 0, 0, 0, 0, 0],
        vec![0, 0, 1, 0, 0, 0, 0, 1],
        vec![0, 0, 0, 1, 0, 0, 0, 1],
        vec![0, 0, 0, 0, 0, 0, 0, 1],
        vec![0, 1, 0, 0, 1, 1, 1, 0],
    ]
}

/// The demo graph declared edge by edge.
pub fn demo() -> MixedGraph {
    let mut b = GraphBuilder::new(8);
    for (x, y) in [(1, 2), (1, 4), (2, 3), (2, 8), (3, 4), (5, 8), (6, 8), (7, 8)] {
        b.add_edge(v(x), v(y)).unwrap();
    }
    for (x, y) in [(2, 7), (5, 3), (6, 4)] {
        b.add_arc(v(x), v(y)).unwrap();
    }
    b.build()
}

/// Arcs `1 -> 2 -> ... -> n`.
pub fn arc_path(n: u32) -> MixedGraph {
    let mut b = GraphBuilder::new(n as usize);
    for i in 1..n {
        b.add_arc(v(i), v(i + 1)).unwrap();
    }
    b.build()
}

/// Edges `1 - 2 - ... - n`.
pub fn edge_path(n: u32) -> MixedGraph {
    let mut b = GraphBuilder::new(n as usize);
    for i in 1..n {
        b.add_edge(v(i), v(i + 1)).unwrap();
    }
    b.build()
}

pub fn complete(n: u32) -> MixedGraph {
    let mut b = GraphBuilder::new(n as usize);
    for i in 1..=n {
        for j in i + 1..=n {
            b.add_edge(v(i), v(j)).unwrap();
        }
    }
    b.build()
}
