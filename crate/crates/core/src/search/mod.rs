//! Exhaustive search for representants within a budget.
//!
//! Words are built left to right. Pair counts are maintained incrementally
//! and a prefix is abandoned when an edge pair already has more than `k`
//! repeats, or when a non-edge pair cannot reach `k + 1` with the letters
//! still to be placed. In canonical mode letters must make their first
//! appearance in increasing order; a complete word is then matched against
//! the target up to isomorphism and relabeled.
//!
//! The tree is cut into work units at a fixed prefix depth. Results are
//! merged in unit order so that the outcome and node counts do not depend
//! on how units are scheduled.

mod classify;
mod orientation;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::repr;
use crate::words::{Letter, Word};

pub use classify::{census_graph, is_circle_graph, is_circle_graph_with, min_level, CensusRow, MinLevel, Qualifier};
pub use orientation::{permutational_representant, transitive_orientation, Orientation};

/// Default vertex cap for the exhaustive classifiers.
pub const DEFAULT_CAP: usize = 8;

/// Prefix depth at which the tree is split into work units.
const UNIT_DEPTH: usize = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Largest number of copies of a letter (or of blocks, for the
    /// permutational family).
    pub max_copies_per_letter: usize,
    pub uniform_only: bool,
    pub permutational_only: bool,
    /// Total number of letter placements over the whole search.
    pub node_limit: u64,
    pub worker_hint: usize,
    /// First occurrences in increasing order, results matched up to
    /// isomorphism.
    pub canonical: bool,
    /// Turning pruning off is only useful to check that pruning is safe.
    pub pruning: bool,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_copies_per_letter: 3,
            uniform_only: true,
            permutational_only: false,
            node_limit: 50_000_000,
            worker_hint: 1,
            canonical: true,
            pruning: true,
        }
    }
}

impl SearchBudget {
    pub fn validate(&self) -> Result<()> {
        if self.max_copies_per_letter == 0 || self.node_limit == 0 || self.worker_hint == 0 {
            return Err(Error::InvalidParameter("budget limits must be positive"));
        }
        Ok(())
    }

    pub fn family(&self) -> Family {
        let max = self.max_copies_per_letter;
        if self.permutational_only {
            Family::Permutational { max_blocks: max }
        } else if self.uniform_only {
            Family::Uniform { max_copies: max }
        } else {
            Family::Bounded { max_copies: max }
        }
    }
}

/// The set of words a search enumerates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `t`-uniform words for `t = 1..=max_copies`.
    Uniform { max_copies: usize },
    /// Concatenations of `1..=max_blocks` permutations.
    Permutational { max_blocks: usize },
    /// Every word with between 1 and `max_copies` copies of each letter.
    Bounded { max_copies: usize },
}

impl Family {
    /// Whether the family contains a uniform word of every length up to
    /// `2n(n - clique)`, the known bound for level 0 uniform representants.
    /// When it does, absence at level 0 is absolute.
    pub fn covers_level0_bound(&self, n: usize, clique: usize) -> bool {
        let need = (2 * (n - clique)).max(1);
        match *self {
            Family::Uniform { max_copies } | Family::Bounded { max_copies } => max_copies >= need,
            Family::Permutational { .. } => false,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Uniform { max_copies } => write!(f, "uniform<={max_copies}"),
            Family::Permutational { max_blocks } => write!(f, "permutational<={max_blocks}"),
            Family::Bounded { max_copies } => write!(f, "copies<={max_copies}"),
        }
    }
}

/// `2n(n - clique)`.
pub fn level0_length_bound(g: &Graph) -> usize {
    2 * g.n() * (g.n() - g.clique_number())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Found(Word),
    /// The whole family was searched.
    ProvedAbsent,
    BudgetExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub outcome: Outcome,
    pub nodes_expanded: u64,
    pub leaves: u64,
    pub family: Family,
}

impl SearchReport {
    pub fn word(&self) -> Option<&Word> {
        match &self.outcome {
            Outcome::Found(w) => Some(w),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UnitOutcome {
    Found(Word),
    /// Searched to the end without a hit.
    Exhausted,
    LimitHit,
    Cancelled,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitResult {
    pub outcome: UnitOutcome,
    pub nodes: u64,
    pub leaves: u64,
}

/// The job handed to a runner: `job(unit, node_limit, stop)`. A unit polls
/// `stop` and gives up once it holds an index below its own.
pub type UnitJob<'a> = dyn Fn(usize, u64, &AtomicUsize) -> UnitResult + Sync + 'a;

/// Executes work units. Implementations may run them in any order or in
/// parallel, but must return, for every unit before the first one that
/// found a word, hit its limit or pushed the running node total past
/// `limit`, a complete result.
pub trait UnitRunner: Sync {
    fn run(&self, units: usize, limit: u64, job: &UnitJob<'_>) -> Vec<Option<UnitResult>>;
}

/// Runs units one after another and stops as soon as the merge is decided.
pub struct Sequential;

impl UnitRunner for Sequential {
    fn run(&self, units: usize, limit: u64, job: &UnitJob<'_>) -> Vec<Option<UnitResult>> {
        let never = AtomicUsize::new(usize::MAX);
        let mut out = Vec::with_capacity(units);
        let mut used = 0;
        for i in 0..units {
            let r = job(i, limit - used, &never);
            let decided = !matches!(r.outcome, UnitOutcome::Exhausted);
            used += r.nodes;
            out.push(Some(r));
            if decided {
                break;
            }
        }
        out.resize(units, None);
        out
    }
}

/// Sequential-equivalent merge of unit results.
fn merge(results: Vec<Option<UnitResult>>, limit: u64) -> (UnitOutcome, u64, u64) {
    let (mut nodes, mut leaves) = (0u64, 0u64);
    for r in results {
        let r = r.expect("runner returned every unit up to the decision");
        if nodes + r.nodes > limit || matches!(r.outcome, UnitOutcome::LimitHit | UnitOutcome::Cancelled) {
            return (UnitOutcome::LimitHit, limit, leaves);
        }
        nodes += r.nodes;
        leaves += r.leaves;
        if let UnitOutcome::Found(w) = r.outcome {
            return (UnitOutcome::Found(w), nodes, leaves);
        }
    }
    (UnitOutcome::Exhausted, nodes, leaves)
}

/// The words of one search space: a fixed number of copies per letter, and
/// optionally the constraint that every block of `n` letters is a
/// permutation.
#[derive(Clone, Debug)]
struct Shape {
    copies: Vec<usize>,
    permutational: bool,
}

impl Shape {
    fn len(&self) -> usize {
        self.copies.iter().sum()
    }
}

struct Target<'a> {
    g: &'a Graph,
    k: u32,
    canonical: bool,
    pruning: bool,
    edges: usize,
    non_edges: usize,
    /// Degrees of the target, increasing.
    degrees: Vec<usize>,
}

impl<'a> Target<'a> {
    fn new(g: &'a Graph, k: u32, budget: &SearchBudget) -> Self {
        let n = g.n();
        let edges = g.edge_count();
        let mut degrees: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
        degrees.sort_unstable();
        Target {
            g,
            k,
            canonical: budget.canonical,
            pruning: budget.pruning,
            edges,
            non_edges: n * (n - 1) / 2 - edges,
            degrees,
        }
    }
}

struct Saved {
    last: usize,
    def_non: usize,
    def_edge: usize,
    next_new: usize,
}

enum Flow {
    Continue,
    Stop,
}

struct Dfs<'t, 'g> {
    t: &'t Target<'g>,
    shape: &'t Shape,
    n: usize,
    total: usize,
    rem: Vec<usize>,
    /// Position + 1 of the latest occurrence, 0 if none.
    last: Vec<usize>,
    cnt: Vec<u32>,
    word: Vec<Letter>,
    next_new: usize,
    def_non: usize,
    def_edge: usize,
    nodes: u64,
    leaves: u64,
    limit: u64,
    unit: usize,
    stop: &'t AtomicUsize,
    result: Option<UnitOutcome>,
    collect_depth: Option<usize>,
    prefixes: Vec<Vec<Letter>>,
}

impl<'t, 'g> Dfs<'t, 'g> {
    fn new(t: &'t Target<'g>, shape: &'t Shape, limit: u64, unit: usize, stop: &'t AtomicUsize) -> Self {
        let n = t.g.n();
        let mut d = Dfs {
            t,
            shape,
            n,
            total: shape.len(),
            rem: shape.copies.clone(),
            last: vec![0; n],
            cnt: vec![0; n * n],
            word: Vec::with_capacity(shape.len()),
            next_new: 0,
            def_non: 0,
            def_edge: 0,
            nodes: 0,
            leaves: 0,
            limit,
            unit,
            stop,
            result: None,
            collect_depth: None,
            prefixes: Vec::new(),
        };
        for a in 0..n {
            for b in a + 1..n {
                d.def_edge += d.definite_edge(a, b) as usize;
            }
        }
        d
    }

    #[inline]
    fn definite_edge(&self, a: usize, b: usize) -> bool {
        (self.cnt[a * self.n + b] as usize + self.rem[a] + self.rem[b]) <= self.t.k as usize
    }

    #[inline]
    fn definite_non(&self, a: usize, b: usize) -> bool {
        self.cnt[a * self.n + b] > self.t.k
    }

    fn candidates(&self) -> Vec<usize> {
        let n = self.n;
        let pos = self.word.len();
        let mut out = Vec::with_capacity(n);
        let block_start = pos - pos % n.max(1);
        for a in 0..n {
            if self.rem[a] == 0 {
                continue;
            }
            if self.t.canonical && a > self.next_new {
                continue;
            }
            if self.shape.permutational && self.word[block_start..].iter().any(|l| l.index() == a) {
                continue;
            }
            out.push(a);
        }
        out
    }

    fn place(&mut self, a: usize) -> Saved {
        let n = self.n;
        let la = self.last[a];
        let saved = Saved { last: la, def_non: self.def_non, def_edge: self.def_edge, next_new: self.next_new };
        for b in 0..n {
            if b == a {
                continue;
            }
            let (e0, x0) = (self.definite_edge(a, b), self.definite_non(a, b));
            if la != 0 && self.last[b] < la {
                self.cnt[a * n + b] += 1;
                self.cnt[b * n + a] += 1;
            }
            self.rem[a] -= 1;
            let (e1, x1) = (self.definite_edge(a, b), self.definite_non(a, b));
            self.rem[a] += 1;
            self.def_edge = self.def_edge + e1 as usize - e0 as usize;
            self.def_non = self.def_non + x1 as usize - x0 as usize;
        }
        self.rem[a] -= 1;
        self.word.push(Letter::from_index(a));
        self.last[a] = self.word.len();
        if a == self.next_new {
            self.next_new += 1;
        }
        saved
    }

    fn unplace(&mut self, a: usize, saved: Saved) {
        let n = self.n;
        self.word.pop();
        self.last[a] = saved.last;
        self.rem[a] += 1;
        let la = saved.last;
        for b in 0..n {
            if b != a && la != 0 && self.last[b] < la {
                self.cnt[a * n + b] -= 1;
                self.cnt[b * n + a] -= 1;
            }
        }
        self.def_non = saved.def_non;
        self.def_edge = saved.def_edge;
        self.next_new = saved.next_new;
    }

    /// Whether the prefix ending in `a` can still be completed.
    fn feasible(&self, a: usize) -> bool {
        if !self.t.pruning {
            return true;
        }
        if self.t.canonical {
            return self.def_non <= self.t.non_edges && self.def_edge <= self.t.edges && self.degrees_fit();
        }
        let (n, k) = (self.n, self.t.k);
        let la = Letter::from_index(a);
        (0..n).filter(|&b| b != a).all(|b| {
            let c = self.cnt[a * n + b];
            if self.t.g.has_edge(la, Letter::from_index(b)) {
                c <= k
            } else {
                c as usize + self.rem[a] + self.rem[b] > k as usize
            }
        })
    }

    /// Every letter has a range of possible degrees; some assignment of the
    /// target's degrees must respect all lower bounds and all upper bounds.
    /// Sorted comparison against the target degrees is necessary for each.
    fn degrees_fit(&self) -> bool {
        let n = self.n;
        let mut lower = vec![0usize; n];
        let mut upper = vec![n - 1; n];
        for a in 0..n {
            for b in a + 1..n {
                if self.definite_edge(a, b) {
                    lower[a] += 1;
                    lower[b] += 1;
                } else if self.definite_non(a, b) {
                    upper[a] -= 1;
                    upper[b] -= 1;
                }
            }
        }
        lower.sort_unstable();
        upper.sort_unstable();
        let d = &self.t.degrees;
        lower.iter().zip(d).all(|(l, d)| l <= d) && upper.iter().zip(d).all(|(u, d)| u >= d)
    }

    fn leaf(&mut self) -> Option<Word> {
        self.leaves += 1;
        let n = self.n;
        let mut g = Graph::with_vertices(n);
        for a in 0..n {
            for b in a + 1..n {
                if self.cnt[a * n + b] <= self.t.k {
                    g.add_edge(Letter::from_index(a), Letter::from_index(b)).expect("fresh pair");
                }
            }
        }
        let word = Word::new(self.word.clone());
        if self.t.canonical {
            let phi = g.find_isomorphism(self.t.g)?;
            Some(word.relabel(|l| phi[l.index()]))
        } else {
            (g == *self.t.g).then_some(word)
        }
    }

    fn expand(&mut self) -> Flow {
        if self.word.len() == self.total {
            if let Some(w) = self.leaf() {
                self.result = Some(UnitOutcome::Found(w));
                return Flow::Stop;
            }
            return Flow::Continue;
        }
        if let Some(d) = self.collect_depth {
            if self.word.len() == d {
                self.prefixes.push(self.word.clone());
                return Flow::Continue;
            }
        }
        for a in self.candidates() {
            if self.collect_depth.is_none() {
                if self.nodes >= self.limit {
                    self.result = Some(UnitOutcome::LimitHit);
                    return Flow::Stop;
                }
                self.nodes += 1;
                if self.nodes.is_multiple_of(1024) && self.stop.load(Ordering::Relaxed) < self.unit {
                    self.result = Some(UnitOutcome::Cancelled);
                    return Flow::Stop;
                }
            }
            let saved = self.place(a);
            let flow = if self.feasible(a) { self.expand() } else { Flow::Continue };
            self.unplace(a, saved);
            if let Flow::Stop = flow {
                return Flow::Stop;
            }
        }
        Flow::Continue
    }

    /// Prefixes of the given depth that survive pruning, in search order.
    /// A complete word shorter than the depth is its own prefix.
    fn prefixes(mut self, depth: usize) -> Vec<Vec<Letter>> {
        self.collect_depth = Some(depth);
        let short = self.total <= depth;
        if short {
            self.collect_depth = Some(self.total);
            // A leaf check would run first; collect instead.
            self.total += 1;
        }
        self.expand();
        self.prefixes
    }

    fn run_unit(mut self, prefix: &[Letter]) -> UnitResult {
        for &l in prefix {
            if self.nodes >= self.limit {
                return UnitResult { outcome: UnitOutcome::LimitHit, nodes: self.nodes, leaves: 0 };
            }
            self.nodes += 1;
            let a = l.index();
            let _ = self.place(a);
        }
        let outcome = match self.expand() {
            Flow::Stop => self.result.take().expect("stop carries a result"),
            Flow::Continue => UnitOutcome::Exhausted,
        };
        UnitResult { outcome, nodes: self.nodes, leaves: self.leaves }
    }
}

/// Searches one shape with the given node limit.
fn search_shape(t: &Target<'_>, shape: &Shape, limit: u64, runner: &dyn UnitRunner) -> (UnitOutcome, u64, u64) {
    let never = AtomicUsize::new(usize::MAX);
    let prefixes = Dfs::new(t, shape, u64::MAX, 0, &never).prefixes(UNIT_DEPTH);
    if prefixes.is_empty() {
        return (UnitOutcome::Exhausted, 0, 0);
    }
    let job =
        |i: usize, unit_limit: u64, stop: &AtomicUsize| Dfs::new(t, shape, unit_limit, i, stop).run_unit(&prefixes[i]);
    let results = runner.run(prefixes.len(), limit, &job);
    merge(results, limit)
}

fn shapes(n: usize, family: Family) -> Vec<Shape> {
    match family {
        Family::Uniform { max_copies } => {
            (1..=max_copies).map(|t| Shape { copies: vec![t; n], permutational: false }).collect()
        }
        Family::Permutational { max_blocks } => {
            (1..=max_blocks).map(|t| Shape { copies: vec![t; n], permutational: true }).collect()
        }
        Family::Bounded { max_copies } => {
            let mut all = Vec::new();
            let mut c = vec![1usize; n];
            loop {
                all.push(Shape { copies: c.clone(), permutational: false });
                // Odometer, last letter fastest.
                let mut i = n;
                loop {
                    if i == 0 {
                        all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.copies.cmp(&b.copies)));
                        return all;
                    }
                    i -= 1;
                    if c[i] < max_copies {
                        c[i] += 1;
                        break;
                    }
                    c[i] = 1;
                }
            }
        }
    }
}

/// Searches the budget's family for a word that `k`-11-represents `g`.
pub fn find_representant(g: &Graph, k: u32, budget: &SearchBudget, runner: &dyn UnitRunner) -> Result<SearchReport> {
    search_family(g, k, budget, budget.family(), runner)
}

/// Searches `t`-uniform words only.
pub fn find_uniform(
    g: &Graph,
    k: u32,
    t: usize,
    budget: &SearchBudget,
    runner: &dyn UnitRunner,
) -> Result<SearchReport> {
    if t == 0 {
        return Err(Error::InvalidParameter("uniformity must be positive"));
    }
    let shape = Shape { copies: vec![t; g.n()], permutational: false };
    run_shapes(g, k, budget, Family::Uniform { max_copies: t }, core::slice::from_ref(&shape), runner)
}

fn search_family(
    g: &Graph,
    k: u32,
    budget: &SearchBudget,
    family: Family,
    runner: &dyn UnitRunner,
) -> Result<SearchReport> {
    let all = shapes(g.n(), family);
    run_shapes(g, k, budget, family, &all, runner)
}

fn run_shapes(
    g: &Graph,
    k: u32,
    budget: &SearchBudget,
    family: Family,
    shapes: &[Shape],
    runner: &dyn UnitRunner,
) -> Result<SearchReport> {
    budget.validate()?;
    if g.n() == 0 {
        return Err(Error::GraphTooSmall { n: 0, min: 1 });
    }
    let target = Target::new(g, k, budget);
    let (mut nodes, mut leaves) = (0u64, 0u64);
    for shape in shapes {
        let (outcome, used, l) = search_shape(&target, shape, budget.node_limit - nodes, runner);
        nodes += used;
        leaves += l;
        let outcome = match outcome {
            UnitOutcome::Found(w) => {
                let verdict = repr::verify(&w, g, k)?;
                if !verdict.is_pass() {
                    return Err(Error::Internal { what: "search", violations: verdict.violations().len() });
                }
                Outcome::Found(w)
            }
            UnitOutcome::Exhausted => continue,
            UnitOutcome::LimitHit | UnitOutcome::Cancelled => Outcome::BudgetExhausted,
        };
        return Ok(SearchReport { outcome, nodes_expanded: nodes, leaves, family });
    }
    Ok(SearchReport { outcome: Outcome::ProvedAbsent, nodes_expanded: nodes, leaves, family })
}
