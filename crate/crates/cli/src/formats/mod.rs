//! Text formats for graphs, interval models and colorings.

pub mod coloring;
pub mod edgelist;
pub mod graph6;
pub mod intervals;

use wordrep_core::Graph;

use crate::error::FormatError;

/// Edge lists start with the vertex count, graph6 strings never start with
/// a digit.
pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let first = text.trim_start().bytes().next().ok_or(FormatError::Empty)?;
    if first.is_ascii_digit() {
        edgelist::parse(text)
    } else {
        graph6::parse(text)
    }
}
