//! Line-oriented graph files.
//!
//! ```text
//! # comment
//! n 8
//! e 1 2      undirected edge {1, 2}
//! a 2 7      arc 2 -> 7
//! ```
//!
//! `#` starts a comment anywhere on a line. The first non-blank line must be
//! `n <count>`; every later line is `e <u> <v>` or `a <u> <v>` with 1-based
//! ids. Tokens are whitespace-separated. Declaring the same unordered pair
//! twice, or a self-loop, is an error.

use std::fs;
use std::path::Path;

use mixproj_core::graph::{EdgeKind, GraphBuilder, GraphError, MixedGraph, VertexId};

#[derive(Debug, thiserror::Error)]
pub enum GraphTextError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl GraphTextError {
    /// 1-based line of the offending declaration, if any.
    pub fn line(&self) -> Option<usize> {
        match self {
            GraphTextError::Syntax { line, .. } | GraphTextError::Graph { line, .. } => Some(*line),
            GraphTextError::Io { .. } => None,
        }
    }
}

fn syntax(line: usize, message: impl Into<String>) -> GraphTextError {
    GraphTextError::Syntax { line, message: message.into() }
}

pub fn parse_graph_text(text: &str) -> Result<MixedGraph, GraphTextError> {
    let mut builder: Option<GraphBuilder> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let Some((&keyword, args)) = tokens.split_first() else { continue };

        let Some(b) = builder.as_mut() else {
            if keyword != "n" {
                return Err(syntax(line, format!("expected `n <count>` header, found `{keyword}`")));
            }
            let [count] = args else {
                return Err(syntax(line, "`n` takes exactly one argument"));
            };
            let order: u32 = count.parse().map_err(|_| syntax(line, format!("invalid vertex count `{count}`")))?;
            builder = Some(GraphBuilder::new(order as usize));
            continue;
        };

        match keyword {
            "e" | "a" => {}
            "n" => return Err(syntax(line, "duplicate `n` header")),
            other => return Err(syntax(line, format!("unknown declaration `{other}`"))),
        }
        let [a, c] = args else {
            return Err(syntax(line, format!("`{keyword}` takes exactly two vertex ids")));
        };
        let order = b.order();
        let id = |tok: &str| -> Result<VertexId, GraphTextError> {
            let raw: u32 = tok.parse().map_err(|_| syntax(line, format!("invalid vertex id `{tok}`")))?;
            VertexId::new(raw)
                .ok_or(GraphTextError::Graph { line, source: GraphError::InvalidVertex { id: raw, order } })
        };
        let (u, v) = (id(a)?, id(c)?);
        let declared = if keyword == "e" { b.add_edge(u, v) } else { b.add_arc(u, v) };
        declared.map_err(|source| GraphTextError::Graph { line, source })?;
    }
    builder.map(GraphBuilder::build).ok_or_else(|| syntax(text.lines().count().max(1), "missing `n <count>` header"))
}

/// Canonical text: header, then one line per connected pair ordered by
/// `(min, max)`.
pub fn write_graph_text(g: &MixedGraph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (a, b, kind) in g.pairs() {
        let line = match kind {
            EdgeKind::Edge => format!("e {a} {b}\n"),
            EdgeKind::ArcForward => format!("a {a} {b}\n"),
            EdgeKind::ArcBackward => format!("a {b} {a}\n"),
            EdgeKind::None => continue,
        };
        out.push_str(&line);
    }
    out
}

pub fn read_graph_file(path: impl AsRef<Path>) -> Result<MixedGraph, GraphTextError> {
    let path = path.as_ref();
    let text =
        fs::read_to_string(path).map_err(|source| GraphTextError::Io { path: path.display().to_string(), source })?;
    parse_graph_text(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: u32) -> VertexId {
        VertexId::new(i).unwrap()
    }

    #[test]
    fn single_edge_and_arc_path() {
        let g = parse_graph_text("n 2\ne 1 2").unwrap();
        assert_eq!(g.neighbors(v(1)), &[v(2)]);
        assert_eq!(g.neighbors(v(2)), &[v(1)]);

        let g = parse_graph_text("n 3\na 1 2\na 2 3").unwrap();
        assert_eq!(g.neighbors(v(1)), &[v(2)]);
        assert_eq!(g.neighbors(v(2)), &[v(3)]);
        assert!(g.neighbors(v(3)).is_empty());
    }

    #[test]
    fn comments_blank_lines_and_order() {
        let a = parse_graph_text("# header\n\nn 3 # three\n a 3 1\ne 1 2\n").unwrap();
        let b = parse_graph_text("n 3\ne 1 2\na 3 1\n").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn errors_report_lines() {
        let cases = [
            ("e 1 2", 1),
            ("n 3\ne 1", 2),
            ("n 3\ne 1 x", 2),
            ("n 3\nx 1 2", 2),
            ("n 3\ne 1 2\nn 4", 3),
            ("n three", 1),
            ("n", 1),
        ];
        for (text, line) in cases {
            let err = parse_graph_text(text).unwrap_err();
            assert!(matches!(err, GraphTextError::Syntax { .. }), "{text}: {err}");
            assert_eq!(err.line(), Some(line), "{text}");
        }
        assert!(matches!(parse_graph_text(""), Err(GraphTextError::Syntax { .. })));
    }

    #[test]
    fn semantic_errors() {
        let err = |t| match parse_graph_text(t).unwrap_err() {
            GraphTextError::Graph { line, source } => (line, source),
            other => panic!("{other}"),
        };
        assert_eq!(err("n 3\ne 1 4"), (2, GraphError::InvalidVertex { id: 4, order: 3 }));
        assert_eq!(err("n 3\ne 0 1"), (2, GraphError::InvalidVertex { id: 0, order: 3 }));
        assert_eq!(err("n 3\na 2 2"), (2, GraphError::SelfLoop(v(2))));
        assert_eq!(err("n 3\ne 1 2\na 2 1"), (3, GraphError::DuplicatePair(v(1), v(2))));
        assert_eq!(err("n 3\ne 1 2\ne 2 1"), (3, GraphError::DuplicatePair(v(1), v(2))));
    }

    #[test]
    fn canonical_writer() {
        let g = parse_graph_text("n 4\na 4 1\ne 2 1\na 2 3").unwrap();
        assert_eq!(write_graph_text(&g), "n 4\ne 1 2\na 4 1\na 2 3\n");
        assert_eq!(parse_graph_text(&write_graph_text(&g)).unwrap(), g);
    }
}
