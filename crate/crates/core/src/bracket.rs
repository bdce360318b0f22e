//! Bracket notation for projection trees.
//!
//! ```text
//! tree   := vertex [ '(' tree { ',' tree } ')' ]
//! vertex := decimal integer >= 1
//! ```
//!
//! A node without children is written as its bare vertex number; there is
//! no token for an empty child list. Whitespace between tokens is ignored.
//! Example: `4(1(2),3(2))`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use crate::projection::{NodeId, ProjectionError, ProjectionTree, RefinedProjection};
use crate::VertexId;

/// Deepest nesting [`parse_bracket`] accepts.
pub const MAX_NESTING: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BracketError {
    Empty,
    /// A vertex number was expected at `offset`.
    ExpectedVertex {
        offset: usize,
    },
    /// `()` with nothing inside; `offset` points at the `)`.
    EmptyChildList {
        offset: usize,
    },
    /// Vertex number is zero or does not fit in 32 bits.
    BadVertex {
        offset: usize,
    },
    /// `,` or `)` expected at `offset`.
    ExpectedSeparator {
        offset: usize,
    },
    /// Input ended with `depth` parentheses still open.
    Unbalanced {
        offset: usize,
        depth: usize,
    },
    /// Input continues after a complete tree.
    TrailingInput {
        offset: usize,
    },
    TooDeep {
        offset: usize,
    },
}

impl BracketError {
    pub fn offset(&self) -> usize {
        match *self {
            BracketError::Empty => 0,
            BracketError::ExpectedVertex { offset }
            | BracketError::EmptyChildList { offset }
            | BracketError::BadVertex { offset }
            | BracketError::ExpectedSeparator { offset }
            | BracketError::Unbalanced { offset, .. }
            | BracketError::TrailingInput { offset }
            | BracketError::TooDeep { offset } => offset,
        }
    }
}

impl fmt::Display for BracketError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketError::Empty => f.write_str("empty bracket text"),
            BracketError::ExpectedVertex { offset } => write!(f, "expected a vertex number at offset {offset}"),
            BracketError::EmptyChildList { offset } => write!(f, "empty child list at offset {offset}"),
            BracketError::BadVertex { offset } => write!(f, "invalid vertex number at offset {offset}"),
            BracketError::ExpectedSeparator { offset } => write!(f, "expected ',' or ')' at offset {offset}"),
            BracketError::Unbalanced { offset, depth } => {
                write!(f, "unbalanced parentheses: {depth} still open at offset {offset}")
            }
            BracketError::TrailingInput { offset } => write!(f, "unexpected input after the tree at offset {offset}"),
            BracketError::TooDeep { offset } => {
                write!(f, "nesting deeper than {MAX_NESTING} at offset {offset}")
            }
        }
    }
}

impl core::error::Error for BracketError {}

/// Single-line bracket text. Children are written in ascending vertex order
/// (stable, so repeated vertices keep their relative order).
pub fn to_bracket(tree: &ProjectionTree) -> String {
    let mut out = String::new();
    write_bracket(tree, &mut out).expect("writing to a String cannot fail");
    out
}

enum Step {
    Open(NodeId),
    Close,
    Comma,
}

fn sorted_children(tree: &ProjectionTree, node: NodeId) -> Vec<NodeId> {
    let mut children = tree.children(node).to_vec();
    children.sort_by_key(|&c| tree.vertex(c));
    children
}

pub fn write_bracket<W: Write>(tree: &ProjectionTree, out: &mut W) -> fmt::Result {
    let mut steps = vec![Step::Open(ProjectionTree::ROOT)];
    while let Some(step) = steps.pop() {
        match step {
            Step::Open(node) => {
                write!(out, "{}", tree.vertex(node))?;
                let children = sorted_children(tree, node);
                if children.is_empty() {
                    continue;
                }
                out.write_char('(')?;
                steps.push(Step::Close);
                for (i, &c) in children.iter().enumerate().rev() {
                    steps.push(Step::Open(c));
                    if i > 0 {
                        steps.push(Step::Comma);
                    }
                }
            }
            Step::Close => out.write_char(')')?,
            Step::Comma => out.write_char(',')?,
        }
    }
    Ok(())
}

/// One vertex per line, indented two spaces per level, children ascending.
pub fn to_bracket_pretty(tree: &ProjectionTree) -> String {
    let mut out = String::new();
    let mut stack = vec![ProjectionTree::ROOT];
    while let Some(node) = stack.pop() {
        for _ in 0..tree.depth(node) {
            out.push_str("  ");
        }
        let _ = writeln!(out, "{}", tree.vertex(node));
        stack.extend(sorted_children(tree, node).into_iter().rev());
    }
    out
}

/// Parses bracket text. Children keep the order in which they are written.
pub fn parse_bracket(text: &str) -> Result<ProjectionTree, BracketError> {
    let mut lexer = Lexer { bytes: text.as_bytes(), pos: 0 };
    lexer.skip_ws();
    if lexer.at_end() {
        return Err(BracketError::Empty);
    }
    let root = lexer.vertex(0)?;
    let mut tree = ProjectionTree::new(root);
    // nodes whose child list is open
    let mut open: Vec<NodeId> = Vec::new();
    let mut current = ProjectionTree::ROOT;
    loop {
        // just finished reading the vertex of `current`
        lexer.skip_ws();
        if lexer.peek() == Some(b'(') {
            lexer.pos += 1;
            if open.len() >= MAX_NESTING {
                return Err(BracketError::TooDeep { offset: lexer.pos - 1 });
            }
            lexer.skip_ws();
            if lexer.peek() == Some(b')') {
                return Err(BracketError::EmptyChildList { offset: lexer.pos });
            }
            open.push(current);
            let v = lexer.vertex(open.len())?;
            current = tree.push_child(current, v);
            continue;
        }
        // `current` is complete; close as many lists as the input asks for
        loop {
            let Some(&parent) = open.last() else {
                lexer.skip_ws();
                if !lexer.at_end() {
                    return Err(BracketError::TrailingInput { offset: lexer.pos });
                }
                tree.set_depth_limit(Some(tree.height()));
                return Ok(tree);
            };
            lexer.skip_ws();
            match lexer.peek() {
                Some(b',') => {
                    lexer.pos += 1;
                    let v = lexer.vertex(open.len())?;
                    current = tree.push_child(parent, v);
                    break;
                }
                Some(b')') => {
                    lexer.pos += 1;
                    open.pop();
                }
                None => return Err(BracketError::Unbalanced { offset: lexer.pos, depth: open.len() }),
                Some(_) => return Err(BracketError::ExpectedSeparator { offset: lexer.pos }),
            }
        }
    }
}

struct Lexer<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Lexer<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.bytes.len()
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    /// `open` is the number of unclosed child lists, for error reporting.
    fn vertex(&mut self, open: usize) -> Result<VertexId, BracketError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return match self.peek() {
                None if open > 0 => Err(BracketError::Unbalanced { offset: self.pos, depth: open }),
                _ => Err(BracketError::ExpectedVertex { offset: start }),
            };
        }
        let digits = core::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        digits.parse::<u32>().ok().and_then(VertexId::new).ok_or(BracketError::BadVertex { offset: start })
    }
}

/// Expands the predecessor DAG of `p` forward from its source into a tree:
/// the children of a vertex are all vertices that list it as a
/// predecessor. Shared parts of the DAG are copied under every parent.
pub fn projection_to_tree(p: &RefinedProjection, node_cap: usize) -> Result<ProjectionTree, ProjectionError> {
    let succ = p.successors();
    let mut tree = ProjectionTree::new(p.source());
    tree.set_depth_limit(Some(p.eccentricity() as usize));
    let mut stack = vec![ProjectionTree::ROOT];
    while let Some(node) = stack.pop() {
        for &y in &succ[tree.vertex(node).index()] {
            if tree.node_count() >= node_cap {
                return Err(ProjectionError::NodeCapExceeded { cap: node_cap });
            }
            stack.push(tree.push_child(node, y));
        }
    }
    Ok(tree)
}
