//! Line-oriented text formats for the four source problems.
//!
//! Every parser reports errors with a 1-based line number; every writer
//! emits newline-terminated ASCII that its parser reads back to an equal
//! value.

mod dimacs;
mod graph;
mod knapsack;
mod push1;

pub use dimacs::{parse_dimacs, write_dimacs};
pub use graph::{parse_graph, write_graph};
pub use knapsack::{parse_knapsack, write_knapsack};
pub use push1::{parse_push1, write_push1};

use gbhard_core::reductions::SourceInstance;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

/// Non-blank lines with their 1-based numbers, minus comment lines that
/// start with `comment`.
pub(crate) fn content_lines<'a>(
    text: &'a str,
    comment: &'a str,
) -> impl Iterator<Item = (usize, &'a str)> + 'a {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(move |(_, l)| !l.is_empty() && !l.starts_with(comment))
}

pub(crate) fn parse_numbers<const N: usize>(
    line: usize,
    text: &str,
    what: &str,
) -> Result<[u64; N], ParseError> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != N {
        return Err(ParseError::new(
            line,
            format!("expected {what} ({N} numbers), found `{text}`"),
        ));
    }
    let mut out = [0u64; N];
    for (slot, f) in out.iter_mut().zip(&fields) {
        *slot = f
            .parse()
            .map_err(|_| ParseError::new(line, format!("`{f}` is not a non-negative integer")))?;
    }
    Ok(out)
}

/// Text form of any source instance, in its own format.
pub fn write_source(source: &SourceInstance) -> String {
    match source {
        SourceInstance::Cnf(f) => write_dimacs(f),
        SourceInstance::Graph(g) => write_graph(g),
        SourceInstance::Knapsack(k) => write_knapsack(k),
        SourceInstance::Push1(p) => write_push1(p),
    }
}
