//! Interval models and their endpoint words.
//!
//! Reading the endpoints of `n` intervals from left to right gives a
//! 2-uniform word whose graph at level 1 is the intersection graph. With
//! `r - 2` further copies of each letter placed between its two endpoints
//! the same graph appears at level `2r - 3`.

use alloc::vec::Vec;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::words::{Letter, Word};

pub type Endpoint = Ratio<i64>;

/// Closed intervals `[lo, hi]`, one per vertex, with all `2n` endpoints
/// pairwise distinct.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntervalModel {
    intervals: Vec<(Endpoint, Endpoint)>,
}

impl IntervalModel {
    pub fn new(intervals: Vec<(Endpoint, Endpoint)>) -> Result<Self> {
        for (i, (lo, hi)) in intervals.iter().enumerate() {
            if lo >= hi {
                return Err(Error::InvalidInterval(Letter::from_index(i)));
            }
        }
        let mut all: Vec<Endpoint> = intervals.iter().flat_map(|&(a, b)| [a, b]).collect();
        all.sort_unstable();
        if all.windows(2).any(|p| p[0] == p[1]) {
            return Err(Error::DuplicateEndpoint);
        }
        Ok(IntervalModel { intervals })
    }

    /// Integer endpoints, mostly for tests and literals.
    pub fn from_integers(intervals: &[(i64, i64)]) -> Result<Self> {
        Self::new(intervals.iter().map(|&(a, b)| (Ratio::from_integer(a), Ratio::from_integer(b))).collect())
    }

    pub fn n(&self) -> usize {
        self.intervals.len()
    }

    pub fn interval(&self, v: Letter) -> (Endpoint, Endpoint) {
        self.intervals[v.index()]
    }

    pub fn intervals(&self) -> &[(Endpoint, Endpoint)] {
        &self.intervals
    }

    /// Positive-length overlap. Endpoints are distinct, so touching at a
    /// single point cannot happen.
    pub fn overlaps(&self, u: Letter, v: Letter) -> bool {
        let (a, b) = self.interval(u);
        let (c, d) = self.interval(v);
        a.max(c) < b.min(d)
    }

    pub fn intersection_graph(&self) -> Graph {
        let mut g = Graph::with_vertices(self.n());
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                let (u, v) = (Letter::from_index(i), Letter::from_index(j));
                if self.overlaps(u, v) {
                    g.add_edge(u, v).expect("fresh pair");
                }
            }
        }
        g
    }
}

/// Endpoint labels in increasing order.
pub fn interval_to_word(model: &IntervalModel) -> Word {
    let mut ends: Vec<(Endpoint, Letter)> = model
        .intervals
        .iter()
        .enumerate()
        .flat_map(|(i, &(a, b))| [(a, Letter::from_index(i)), (b, Letter::from_index(i))])
        .collect();
    ends.sort_unstable();
    ends.into_iter().map(|(_, l)| l).collect()
}

fn first_last_positions(word: &Word, n: usize) -> Vec<(usize, usize)> {
    let mut span = alloc::vec![(usize::MAX, 0); n];
    for (pos, l) in word.iter().enumerate() {
        let s = &mut span[l.index()];
        s.0 = s.0.min(pos);
        s.1 = pos;
    }
    span
}

/// The interval of a letter runs from its leftmost to its rightmost
/// position (positions counted from 0).
pub fn runiform_to_intervals(word: &Word, r: usize) -> Result<IntervalModel> {
    if r < 2 || word.is_uniform() != Some(r) {
        return Err(Error::NotUniform);
    }
    let n = word.standard_size().ok_or(Error::AlphabetNotStandard)?;
    let spans = first_last_positions(word, n);
    IntervalModel::new(
        spans.into_iter().map(|(a, b)| (Ratio::from_integer(a as i64), Ratio::from_integer(b as i64))).collect(),
    )
}

pub fn word_to_intervals(word: &Word) -> Result<IntervalModel> {
    runiform_to_intervals(word, 2)
}

/// `r`-uniform word from a model: the endpoint word with `r - 2` more copies
/// of each letter right after its first copy.
pub fn intervals_to_runiform(model: &IntervalModel, r: usize) -> Result<Word> {
    intervals_to_runiform_with(model, r, |_, lo, _| lo)
}

/// Like [`intervals_to_runiform`] with caller-chosen placement. Gaps of the
/// endpoint word are numbered `0..=2n` (gap `g` sits before letter `g`);
/// `pick(letter, lo, hi)` must return a gap in `lo..=hi`, the range strictly
/// between the letter's two endpoints, and is called once per extra copy.
/// Copies sharing a gap are written in increasing letter order.
pub fn intervals_to_runiform_with(
    model: &IntervalModel,
    r: usize,
    mut pick: impl FnMut(Letter, usize, usize) -> usize,
) -> Result<Word> {
    if r < 2 {
        return Err(Error::InvalidParameter("r must be at least 2"));
    }
    let base = interval_to_word(model);
    let spans = first_last_positions(&base, model.n());
    let mut extra: Vec<(usize, Letter)> = Vec::new();
    for (i, &(a, b)) in spans.iter().enumerate() {
        let l = Letter::from_index(i);
        for _ in 0..r - 2 {
            let g = pick(l, a + 1, b);
            if !(a + 1..=b).contains(&g) {
                return Err(Error::InvalidParameter("placement outside the letter's interval"));
            }
            extra.push((g, l));
        }
    }
    extra.sort_unstable();
    let mut out = Word::empty();
    let mut it = extra.into_iter().peekable();
    for (pos, l) in base.iter().enumerate() {
        while let Some(&(_, e)) = it.peek().filter(|(g, _)| *g == pos) {
            out.push(e);
            it.next();
        }
        out.push(l);
    }
    Ok(out)
}
