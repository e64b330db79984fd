//! graph6, short form only (up to 62 vertices).

use wordrep_core::{Graph, Letter};

use crate::error::FormatError;

const HEADER: &str = ">>graph6<<";

fn bit_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j)))
}

pub fn parse(text: &str) -> Result<Graph, FormatError> {
    let s = text.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    let (&head, body) = bytes.split_first().ok_or(FormatError::Empty)?;
    if !(63..=126).contains(&head) {
        return Err(FormatError::Graph6("bad size byte"));
    }
    let n = (head - 63) as usize;
    if n == 63 {
        return Err(FormatError::Graph6("only the short form (n <= 62) is supported"));
    }
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(FormatError::Graph6("payload length does not match vertex count"));
    }
    let mut g = Graph::with_vertices(n);
    for (idx, (i, j)) in bit_pairs(n).enumerate() {
        let byte = body[idx / 6];
        if !(63..=126).contains(&byte) {
            return Err(FormatError::Graph6("payload byte out of range"));
        }
        if (byte - 63) >> (5 - idx % 6) & 1 == 1 {
            g.add_edge(Letter::from_index(i), Letter::from_index(j))?;
        }
    }
    // Padding bits must be zero for a canonical string.
    if !bits.is_multiple_of(6) {
        let last = body[body.len() - 1] - 63;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(FormatError::Graph6("nonzero padding bits"));
        }
    }
    Ok(g)
}

pub fn serialize(g: &Graph) -> Result<String, FormatError> {
    let n = g.n();
    if n > 62 {
        return Err(FormatError::Graph6("only the short form (n <= 62) is supported"));
    }
    let mut out = String::new();
    out.push((63 + n as u8) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for (i, j) in bit_pairs(n) {
        acc = acc << 1 | g.has_edge(Letter::from_index(i), Letter::from_index(j)) as u8;
        filled += 1;
        if filled == 6 {
            out.push((acc + 63) as char);
            acc = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}
