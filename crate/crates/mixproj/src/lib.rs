//! Host-side companion to `mixproj-core`: the graph text format, JSON and
//! plain-text renderings, multi-threaded drivers, the benchmark harness and
//! the `mixproj` command-line tool.

pub mod bench;
pub mod cli;
pub mod graph_text;
pub mod json;
pub mod parallel;
pub mod render;

pub use graph_text::{parse_graph_text, read_graph_file, write_graph_text, GraphTextError};
