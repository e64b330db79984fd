//! Transitive orientations and permutational representants of
//! comparability graphs.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::repr;
use crate::words::{Letter, Word};

/// Largest graph the orientation search accepts.
pub const ORIENTATION_CAP: usize = 16;

/// One direction for every edge of a graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Orientation {
    n: usize,
    /// `dir[u * n + v]` is true iff the edge is oriented `u -> v`.
    dir: Vec<bool>,
}

impl Orientation {
    /// Orientation from an arc list; every edge of `g` must appear exactly
    /// once and nothing else may.
    pub fn from_arcs(g: &Graph, arcs: &[(Letter, Letter)]) -> Result<Self> {
        let n = g.n();
        let mut dir = vec![false; n * n];
        for &(u, v) in arcs {
            if !g.has_edge(u, v) {
                return Err(Error::NotAnEdge(u, v));
            }
            if dir[u.index() * n + v.index()] || dir[v.index() * n + u.index()] {
                return Err(Error::DuplicateEdge(u, v));
            }
            dir[u.index() * n + v.index()] = true;
        }
        if arcs.len() != g.edge_count() {
            return Err(Error::InvalidParameter("orientation misses an edge"));
        }
        Ok(Orientation { n, dir })
    }

    pub fn has_arc(&self, u: Letter, v: Letter) -> bool {
        self.dir[u.index() * self.n + v.index()]
    }

    pub fn arcs(&self) -> Vec<(Letter, Letter)> {
        let n = self.n;
        (0..n * n).filter(|&i| self.dir[i]).map(|i| (Letter::from_index(i / n), Letter::from_index(i % n))).collect()
    }

    /// `u -> v -> w` always comes with `u -> w`.
    pub fn is_transitive(&self) -> bool {
        let n = self.n;
        (0..n).all(|u| {
            (0..n)
                .filter(|&v| self.dir[u * n + v])
                .all(|v| (0..n).filter(|&w| self.dir[v * n + w]).all(|w| self.dir[u * n + w]))
        })
    }
}

/// 0 unset, 1 means `u -> v` for the entry at `u * n + v`.
#[derive(Clone)]
struct State {
    n: usize,
    dir: Vec<i8>,
}

impl State {
    fn get(&self, u: usize, v: usize) -> i8 {
        self.dir[u * self.n + v]
    }

    /// Orients `u -> v` and everything it forces. False on a conflict.
    fn set(&mut self, g: &Graph, u: usize, v: usize) -> bool {
        let n = self.n;
        let adj = |a: usize, b: usize| g.has_edge_idx(a, b);
        let mut queue = vec![(u, v)];
        while let Some((a, b)) = queue.pop() {
            match self.get(a, b) {
                1 => continue,
                -1 => return false,
                _ => {}
            }
            self.dir[a * n + b] = 1;
            self.dir[b * n + a] = -1;
            for c in 0..n {
                if c == a || c == b {
                    continue;
                }
                // Edges ab and ac with bc missing point the same way at a.
                if adj(a, c) && !adj(b, c) {
                    queue.push((a, c));
                }
                if adj(b, c) && !adj(a, c) {
                    queue.push((c, b));
                }
                if self.get(b, c) == 1 {
                    if !adj(a, c) {
                        return false;
                    }
                    queue.push((a, c));
                }
                if self.get(c, a) == 1 {
                    if !adj(c, b) {
                        return false;
                    }
                    queue.push((c, b));
                }
            }
        }
        true
    }
}

fn orient(g: &Graph, state: State) -> Option<State> {
    let n = g.n();
    let open = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .find(|&(u, v)| g.has_edge_idx(u, v) && state.get(u, v) == 0);
    let Some((u, v)) = open else {
        return Some(state);
    };
    for (a, b) in [(u, v), (v, u)] {
        let mut next = state.clone();
        if next.set(g, a, b) {
            if let Some(done) = orient(g, next) {
                return Some(done);
            }
        }
    }
    None
}

/// A transitive orientation of `g`, if it has one.
pub fn transitive_orientation(g: &Graph) -> Result<Option<Orientation>> {
    let n = g.n();
    if n > ORIENTATION_CAP {
        return Err(Error::CapExceeded { n, cap: ORIENTATION_CAP });
    }
    let Some(state) = orient(g, State { n, dir: vec![0; n * n] }) else {
        return Ok(None);
    };
    let o = Orientation { n, dir: state.dir.iter().map(|&d| d == 1).collect() };
    // Propagation enforces transitivity on every path it sees; check anyway.
    Ok(o.is_transitive().then_some(o))
}

/// Concatenation of linear extensions of a transitive orientation of `g`
/// in which every incomparable pair appears in both orders. Such a word
/// 0-11-represents `g`.
///
/// Each block starts from the first ordered incomparable pair not yet
/// realized, then greedily adds further unrealized pairs that stay
/// consistent, and finally takes the smallest-label topological order.
pub fn permutational_representant(g: &Graph) -> Result<Word> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    let o = transitive_orientation(g)?.ok_or(Error::NotComparability)?;
    let mut todo: Vec<(usize, usize)> =
        (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|&(a, b)| a != b && !g.has_edge_idx(a, b)).collect();
    let mut out = Word::empty();
    loop {
        let mut less = vec![false; n * n];
        for (u, v) in o.arcs() {
            less[u.index() * n + v.index()] = true;
        }
        for &(a, b) in &todo {
            if !less[b * n + a] {
                add_and_close(&mut less, n, a, b);
            }
        }
        let block = topological(&less, n);
        let mut pos = vec![0; n];
        for (i, &v) in block.iter().enumerate() {
            pos[v] = i;
        }
        let before = todo.len();
        todo.retain(|&(a, b)| pos[a] > pos[b]);
        for v in block {
            out.push(Letter::from_index(v));
        }
        if todo.is_empty() {
            break;
        }
        debug_assert!(todo.len() < before);
    }
    let verdict = repr::verify(&out, g, 0)?;
    if !verdict.is_pass() {
        return Err(Error::Internal { what: "permutational_representant", violations: verdict.violations().len() });
    }
    Ok(out)
}

fn add_and_close(less: &mut [bool], n: usize, a: usize, b: usize) {
    // Everything below or equal to a goes below everything above or equal
    // to b.
    let below: Vec<usize> = (0..n).filter(|&x| x == a || less[x * n + a]).collect();
    let above: Vec<usize> = (0..n).filter(|&y| y == b || less[b * n + y]).collect();
    for &x in &below {
        for &y in &above {
            less[x * n + y] = true;
        }
    }
}

fn topological(less: &[bool], n: usize) -> Vec<usize> {
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let next = (0..n)
            .find(|&v| !placed[v] && (0..n).all(|u| placed[u] || !less[u * n + v]))
            .expect("strict order has a minimal element");
        placed[next] = true;
        order.push(next);
    }
    order
}
