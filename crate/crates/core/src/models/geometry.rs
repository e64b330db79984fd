//! Colorings of points on a convex arc and the curves they define.
//!
//! `n r` points lie on a strictly convex arc and carry labels in `[n]`,
//! each label `r` times. Joining the points of one label in order gives a
//! convex polyline. Only the left-to-right order of the points matters:
//! two chords of a convex arc cross iff their endpoints interleave.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::words::{Letter, Word};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Coloring {
    n: usize,
    r: usize,
    sequence: Vec<Letter>,
}

impl Coloring {
    pub fn new(n: usize, r: usize, sequence: Vec<Letter>) -> Result<Self> {
        if n == 0 || r == 0 {
            return Err(Error::InvalidColoring("n and r must be positive"));
        }
        if sequence.len() != n * r {
            return Err(Error::InvalidColoring("sequence length is not n * r"));
        }
        let mut counts = alloc::vec![0usize; n];
        for l in &sequence {
            match counts.get_mut(l.index()) {
                Some(c) => *c += 1,
                None => return Err(Error::InvalidColoring("label out of range")),
            }
        }
        if counts.iter().any(|&c| c != r) {
            return Err(Error::InvalidColoring("some label does not occur exactly r times"));
        }
        Ok(Coloring { n, r, sequence })
    }

    /// The coloring read off an `r`-uniform word over `{1, ..., n}`.
    pub fn from_word(word: &Word) -> Result<Self> {
        let n = word.standard_size().ok_or(Error::AlphabetNotStandard)?;
        let r = word.is_uniform().ok_or(Error::NotUniform)?;
        Coloring::new(n, r, word.letters().to_vec())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn sequence(&self) -> &[Letter] {
        &self.sequence
    }

    pub fn word(&self) -> Word {
        Word::new(self.sequence.clone())
    }

    /// Ranks (0-based) of the points carrying `label`, increasing.
    pub fn positions(&self, label: Letter) -> Vec<usize> {
        self.sequence.iter().enumerate().filter(|(_, &l)| l == label).map(|(p, _)| p).collect()
    }
}

/// Number of crossing segment pairs between the polylines through the
/// sorted ranks `a` and `b`.
pub fn chord_crossings(a: &[usize], b: &[usize]) -> Result<usize> {
    let sorted = |p: &[usize]| p.windows(2).all(|w| w[0] < w[1]);
    if !sorted(a) || !sorted(b) {
        return Err(Error::InvalidParameter("positions must be strictly increasing"));
    }
    if a.iter().any(|x| b.binary_search(x).is_ok()) {
        return Err(Error::InvalidParameter("position lists overlap"));
    }
    let mut count = 0;
    for s in a.windows(2) {
        for t in b.windows(2) {
            let (p, q, u, v) = (s[0], s[1], t[0], t[1]);
            if (p < u && u < q && q < v) || (u < p && p < v && v < q) {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Vertices `i`, `j` are adjacent iff their polylines cross at least `m`
/// times. Requires `1 <= m <= 2r - 3`.
pub fn m_intersection_graph(c: &Coloring, m: usize) -> Result<Graph> {
    if m == 0 || c.r < 2 || m > 2 * c.r - 3 {
        return Err(Error::InvalidParameter("m must lie in 1..=2r-3"));
    }
    let pos: Vec<Vec<usize>> = (0..c.n).map(|i| c.positions(Letter::from_index(i))).collect();
    let mut g = Graph::with_vertices(c.n);
    for i in 0..c.n {
        for j in i + 1..c.n {
            if chord_crossings(&pos[i], &pos[j])? >= m {
                g.add_edge(Letter::from_index(i), Letter::from_index(j))?;
            }
        }
    }
    Ok(g)
}
