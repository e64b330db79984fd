//! `n` on the first line, then one `u v` pair per line with `u < v`.
//! Blank lines and lines starting with `#` are ignored.

use wordrep_core::Graph;

use crate::error::FormatError;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse(text: &str) -> Result<Graph, FormatError> {
    let mut lines = content_lines(text);
    let (ln, first) = lines.next().ok_or(FormatError::Empty)?;
    let n: usize = first.parse().map_err(|_| FormatError::line(ln, "expected vertex count"))?;
    let mut g = Graph::with_vertices(n);
    for (ln, line) in lines {
        let nums: Vec<u32> = line
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| FormatError::line(ln, format!("bad vertex {t:?}"))))
            .collect::<Result<_, _>>()?;
        let [u, v] = nums[..] else {
            return Err(FormatError::line(ln, "expected two vertices"));
        };
        if u >= v {
            if u == v {
                return Err(FormatError::line(ln, format!("loop at {u}")));
            }
            return Err(FormatError::line(ln, "edges must be written as u v with u < v"));
        }
        let (a, b) = (g.vertex(u), g.vertex(v));
        let (a, b) = (
            a.map_err(|e| FormatError::line(ln, e.to_string()))?,
            b.map_err(|e| FormatError::line(ln, e.to_string()))?,
        );
        if g.has_edge(a, b) {
            return Err(FormatError::line(ln, format!("duplicate edge {u} {v}")));
        }
        g.add_edge(a, b).map_err(|e| FormatError::line(ln, e.to_string()))?;
    }
    Ok(g)
}

pub fn serialize(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
