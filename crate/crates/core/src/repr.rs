//! The representation engine.
//!
//! A word `w` over `{1, ..., n}` defines, for every level `k >= 0`, the graph
//! in which `xy` is an edge iff the subword of `w` induced by `{x, y}`
//! contains at most `k` occurrences of `xx` or `yy`. This module computes
//! that graph, checks claimed representants against a target graph, and
//! provides the word transformations that move a representant between
//! levels or reshape it without changing what it represents.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::words::{Letter, Word};

/// Pattern-11 counts for every unordered pair of letters of a word over
/// `{1, ..., n}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairCounts {
    n: usize,
    counts: Vec<u32>,
}

impl PairCounts {
    /// Single left-to-right pass. When letter `a` is read and its previous
    /// occurrence is more recent than the last `b`, the `{a, b}` subword
    /// gains an `aa` factor.
    pub fn of(word: &Word, n: usize) -> Self {
        let mut counts = vec![0u32; n * n];
        // Position + 1 of the latest occurrence, 0 if none yet.
        let mut last = vec![0usize; n];
        for (pos, a) in word.iter().enumerate() {
            let a = a.index();
            let la = last[a];
            if la != 0 {
                for b in 0..n {
                    if b != a && last[b] < la {
                        counts[a * n + b] += 1;
                        counts[b * n + a] += 1;
                    }
                }
            }
            last[a] = pos + 1;
        }
        PairCounts { n, counts }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: Letter, y: Letter) -> u32 {
        self.counts[x.index() * self.n + y.index()]
    }

    /// Graph of all pairs with count at most `k`.
    pub fn graph(&self, k: u32) -> Graph {
        let mut g = Graph::with_vertices(self.n);
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.counts[i * self.n + j] <= k {
                    g.add_edge(Letter::from_index(i), Letter::from_index(j)).expect("in range");
                }
            }
        }
        g
    }
}

/// A word together with a level and its cached pair counts.
#[derive(Clone, Debug)]
pub struct ReprClaim {
    word: Word,
    level: u32,
    counts: PairCounts,
    uniformity: Option<usize>,
    blocks: Option<usize>,
}

impl ReprClaim {
    pub fn new(word: Word, level: u32) -> Result<Self> {
        let n = standard_size(&word)?;
        let counts = PairCounts::of(&word, n);
        let uniformity = word.is_uniform();
        let blocks = word.is_permutational();
        Ok(ReprClaim { word, level, counts, uniformity, blocks })
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn n(&self) -> usize {
        self.counts.n()
    }

    pub fn counts(&self) -> &PairCounts {
        &self.counts
    }

    pub fn uniformity(&self) -> Option<usize> {
        self.uniformity
    }

    pub fn blocks(&self) -> Option<usize> {
        self.blocks
    }

    pub fn graph(&self) -> Graph {
        self.counts.graph(self.level)
    }

    pub fn verify(&self, g: &Graph) -> Result<Verdict> {
        if g.n() != self.n() {
            return Err(Error::AlphabetMismatch { word: self.n(), graph: g.n() });
        }
        let mut violations = Vec::new();
        for x in g.vertices() {
            for y in g.vertices().filter(|&y| y > x) {
                let count = self.counts.get(x, y);
                let edge = g.has_edge(x, y);
                if edge != (count <= self.level) {
                    violations.push(Violation { x, y, count, expected_edge: edge });
                }
            }
        }
        Ok(if violations.is_empty() { Verdict::Pass } else { Verdict::Fail(violations) })
    }
}

/// A pair whose count disagrees with the target graph.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Violation {
    pub x: Letter,
    pub y: Letter,
    pub count: u32,
    /// Whether the target graph has the edge `xy`.
    pub expected_edge: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verdict {
    Pass,
    Fail(Vec<Violation>),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn violations(&self) -> &[Violation] {
        match self {
            Verdict::Pass => &[],
            Verdict::Fail(v) => v,
        }
    }
}

fn standard_size(word: &Word) -> Result<usize> {
    if word.is_empty() {
        return Err(Error::EmptyWord);
    }
    word.standard_size().ok_or(Error::AlphabetNotStandard)
}

/// The graph `k`-11-represented by `word`.
pub fn graph_of_word(word: &Word, k: u32) -> Result<Graph> {
    let n = standard_size(word)?;
    Ok(PairCounts::of(word, n).graph(k))
}

pub fn verify(word: &Word, g: &Graph, k: u32) -> Result<Verdict> {
    let n = standard_size(word)?;
    if n != g.n() {
        return Err(Error::AlphabetMismatch { word: n, graph: g.n() });
    }
    ReprClaim::new(word.clone(), k)?.verify(g)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

/// `r(pi(w)) w` or `w r(sigma(w))`: every pair gains exactly one
/// occurrence, so a `k`-representant becomes a `(k+1)`-representant of the
/// same graph.
pub fn extend_level(word: &Word, side: Side) -> Result<Word> {
    Ok(match side {
        Side::Left => word.initial_permutation()?.reverse().concat(word),
        Side::Right => word.concat(&word.final_permutation()?.reverse()),
    })
}

/// `ww`, which 1-11-represents what `w` 0-11-represents.
pub fn double(word: &Word) -> Result<Word> {
    if word.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(word.concat(word))
}

/// Prepends copies of the initial permutation until every letter occurs at
/// least `min_count` times. Pair counts are unchanged.
pub fn pad_occurrences(word: &Word, min_count: usize) -> Result<Word> {
    let pi = word.initial_permutation()?;
    let have = word.multiplicities().values().copied().min().unwrap_or(0);
    let copies = min_count.saturating_sub(have);
    Ok(pi.repeat(copies).concat(word))
}

/// A word starting with `i` and ending with `j` that has the same pair
/// counts as `word`: trim `pi(w) w sigma(w)` left of the leftmost `i` and
/// right of the rightmost `j`.
pub fn with_endpoints(word: &Word, i: Letter, j: Letter) -> Result<Word> {
    for l in [i, j] {
        if !word.contains(l) {
            return Err(Error::LetterNotInAlphabet(l));
        }
    }
    let full = word.initial_permutation()?.concat(word).concat(&word.final_permutation()?);
    let letters = full.letters();
    let start = letters.iter().position(|&l| l == i).expect("i occurs");
    let end = letters.iter().rposition(|&l| l == j).expect("j occurs");
    let out = Word::new(letters[start..=end].to_vec());
    check_same_counts(word, &out, "with_endpoints")?;
    Ok(out)
}

/// Like [`with_endpoints`] but only fixes the first letter; nothing is
/// appended on the right.
pub fn with_start(word: &Word, i: Letter) -> Result<Word> {
    if word.first() == Some(i) {
        return Ok(word.clone());
    }
    if !word.contains(i) {
        return Err(Error::LetterNotInAlphabet(i));
    }
    let full = word.initial_permutation()?.concat(word);
    let start = full.iter().position(|l| l == i).expect("i occurs");
    let out = Word::new(full.letters()[start..].to_vec());
    check_same_counts(word, &out, "with_start")?;
    Ok(out)
}

/// Mirror of [`with_start`]: fixes the last letter only.
pub fn with_end(word: &Word, j: Letter) -> Result<Word> {
    if word.last() == Some(j) {
        return Ok(word.clone());
    }
    if !word.contains(j) {
        return Err(Error::LetterNotInAlphabet(j));
    }
    let full = word.concat(&word.final_permutation()?);
    let end = full.iter().rposition(|l| l == j).expect("j occurs");
    let out = Word::new(full.letters()[..=end].to_vec());
    check_same_counts(word, &out, "with_end")?;
    Ok(out)
}

/// Pair counts of an arbitrary-alphabet word, indexed by the compacted
/// alphabet.
fn compact_counts(word: &Word) -> (Vec<Letter>, PairCounts) {
    let (c, map) = word.compact();
    let n = map.len();
    (map, PairCounts::of(&c, n))
}

fn check_same_counts(before: &Word, after: &Word, what: &'static str) -> Result<()> {
    let (a_map, a) = compact_counts(before);
    let (b_map, b) = compact_counts(after);
    if a_map != b_map {
        return Err(Error::Internal { what, violations: a_map.len().abs_diff(b_map.len()).max(1) });
    }
    let bad = a.counts.iter().zip(&b.counts).filter(|(x, y)| x != y).count() / 2;
    if bad == 0 {
        Ok(())
    } else {
        Err(Error::Internal { what, violations: bad })
    }
}
