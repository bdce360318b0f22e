//! Seeded random mixed graphs.
//!
//! Generation is driven by SplitMix64 (Steele, Lea & Flood, 2014), a
//! 64-bit generator small enough to port verbatim:
//!
//! ```text
//! state += 0x9E3779B97F4A7C15
//! z = state
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! return z ^ (z >> 31)
//! ```
//!
//! (all arithmetic wrapping mod 2^64, initial state = seed). A uniform draw
//! in `[0, 1)` is `(next >> 11) * 2^-53`.
//!
//! Unordered pairs `(i, j)`, `i < j`, are visited with `i` ascending and then
//! `j` ascending. For each pair one uniform draw `r` decides presence
//! (`r < pair_prob`). A present pair takes a second uniform draw `o`; when
//! `o < orient_prob` the pair becomes an arc whose direction comes from a
//! third raw draw (`i -> j` when its top bit is 0, `j -> i` otherwise),
//! and otherwise it becomes an edge. No other draws are made, so the same
//! `(n, pair_prob, orient_prob, seed)` always yields the same graph.

use crate::graph::{GraphBuilder, GraphError, MixedGraph, VertexId};

/// SplitMix64 pseudo-random generator.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `0..bound`. `bound` must be non-zero.
    pub fn below(&mut self, bound: u64) -> u64 {
        // Lemire's multiply-shift; the slight bias is irrelevant for test input
        ((self.next_u64() as u128 * bound as u128) >> 64) as u64
    }
}

fn check_probability(p: f64) -> Result<(), GraphError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(GraphError::InvalidProbability(p))
    }
}

/// Erdős–Rényi style mixed graph; see the module docs for the exact draw order.
pub fn random_mixed_graph(order: usize, pair_prob: f64, orient_prob: f64, seed: u64) -> Result<MixedGraph, GraphError> {
    check_probability(pair_prob)?;
    check_probability(orient_prob)?;
    if order == 0 {
        return Err(GraphError::EmptyGraph);
    }
    let mut rng = SplitMix64::new(seed);
    let mut builder = GraphBuilder::new(order);
    for i in 0..order {
        for j in i + 1..order {
            if rng.next_f64() >= pair_prob {
                continue;
            }
            let (a, b) = (VertexId::from_index(i), VertexId::from_index(j));
            let declared = if rng.next_f64() < orient_prob {
                if rng.next_u64() >> 63 == 0 {
                    builder.add_arc(a, b)
                } else {
                    builder.add_arc(b, a)
                }
            } else {
                builder.add_edge(a, b)
            };
            declared.expect("each pair is visited once");
        }
    }
    Ok(builder.build())
}
