//! Permutational 2-11-representants for every graph.
//!
//! The recursion adds one vertex at a time to a concatenation of
//! permutations. Each vertex `j` already present owns one block `j Q_j`
//! (the lowest-index block starting with `j`); the new vertex `v` is put
//! right after `j` in that block, and when `v` is not adjacent to `j` the
//! block is tripled as `j v Q_j, v j Q_j, j v Q_j`. Every other block gets
//! `v` in front.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::repr;
use crate::words::{Letter, Word};

/// A concatenation of permutations of `{1, ..., n}` together with, for each
/// vertex, the index of a block that starts with it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PermutationalWord {
    n: usize,
    blocks: Vec<Vec<Letter>>,
}

impl PermutationalWord {
    pub fn from_blocks(n: usize, blocks: Vec<Vec<Letter>>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::EmptyWord);
        }
        for b in &blocks {
            let mut seen = vec![false; n];
            if b.len() != n {
                return Err(Error::NotPermutational);
            }
            for &l in b {
                if l.index() >= n || seen[l.index()] {
                    return Err(Error::NotPermutational);
                }
                seen[l.index()] = true;
            }
        }
        Ok(PermutationalWord { n, blocks })
    }

    pub fn from_word(word: &Word) -> Result<Self> {
        let n = word.standard_size().ok_or(Error::AlphabetNotStandard)?;
        let blocks = word.blocks()?.into_iter().map(Word::into_letters).collect();
        Ok(PermutationalWord { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<Letter>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// For each vertex (by index) the lowest-index block starting with it.
    pub fn heads(&self) -> Vec<Option<usize>> {
        let mut heads = vec![None; self.n];
        for (i, b) in self.blocks.iter().enumerate() {
            let h = &mut heads[b[0].index()];
            if h.is_none() {
                *h = Some(i);
            }
        }
        heads
    }

    /// Every vertex starts some block.
    pub fn heads_cover(&self) -> bool {
        self.heads().iter().all(Option::is_some)
    }

    pub fn to_word(&self) -> Word {
        self.blocks.iter().flatten().copied().collect()
    }

    /// `w_1 P P w_2` from `w_1 P w_2`. Since `P|{x,y}` is `xy` or `yx`,
    /// repeating it adds no `11` to any pair, so the graph is unchanged at
    /// every level.
    pub fn duplicate_block(&self, index: usize) -> Result<Self> {
        let block = self.blocks.get(index).ok_or(Error::BlockIndex { index, blocks: self.blocks.len() })?.clone();
        let mut blocks = self.blocks.clone();
        blocks.insert(index + 1, block);
        Ok(PermutationalWord { n: self.n, blocks })
    }

    /// Pads to exactly `target` blocks by duplicating the last block.
    pub fn padded_to(&self, target: usize) -> Self {
        let mut out = self.clone();
        let last = out.blocks.last().expect("nonempty").clone();
        while out.blocks.len() < target {
            out.blocks.push(last.clone());
        }
        out
    }
}

/// Output of the universal constructions.
#[derive(Clone, Debug)]
pub struct Universal {
    pub word: PermutationalWord,
    /// Steps at which every block was already owned by an old vertex and
    /// the new vertex was adjacent to all of them, so one block had to be
    /// duplicated first to give the new vertex a block of its own.
    pub duplications: usize,
}

/// Block bound for arbitrary graphs: `n^2 - n + 2`.
pub fn block_bound(n: usize) -> usize {
    n * n - n + 2
}

/// Block bound for connected graphs: `n^2 - 3n + 4`.
pub fn block_bound_connected(n: usize) -> usize {
    n * n + 4 - 3 * n
}

/// One recursion step: inserts `v` (a letter not in any block) with
/// neighbourhood `adjacent`.
fn add_vertex(word: &mut PermutationalWord, v: Letter, adjacent: impl Fn(Letter) -> bool) -> bool {
    let mut heads = word.heads();
    let owned = heads.iter().filter(|h| h.is_some()).count();
    let mut duplicated = false;
    let all_adjacent = word.blocks[0].iter().all(|&j| adjacent(j));
    if owned == word.blocks.len() && all_adjacent {
        let last = word.blocks.last().expect("nonempty").clone();
        word.blocks.push(last);
        duplicated = true;
        heads = word.heads();
    }
    let mut owner = vec![None; word.blocks.len()];
    for (j, h) in heads.iter().enumerate() {
        if let Some(i) = *h {
            owner[i] = Some(Letter::from_index(j));
        }
    }
    let old = core::mem::take(&mut word.blocks);
    for (block, owner) in old.into_iter().zip(owner) {
        match owner {
            Some(j) => {
                let q = &block[1..];
                let jv: Vec<Letter> = [j, v].iter().chain(q).copied().collect();
                if adjacent(j) {
                    word.blocks.push(jv);
                } else {
                    let vj: Vec<Letter> = [v, j].iter().chain(q).copied().collect();
                    word.blocks.push(jv.clone());
                    word.blocks.push(vj);
                    word.blocks.push(jv);
                }
            }
            None => {
                let mut b = Vec::with_capacity(block.len() + 1);
                b.push(v);
                b.extend_from_slice(&block);
                word.blocks.push(b);
            }
        }
    }
    word.n += 1;
    duplicated
}

fn base(a: Letter, b: Letter, edge: bool) -> Vec<Vec<Letter>> {
    if edge {
        vec![vec![a, b], vec![b, a], vec![a, b], vec![a, b]]
    } else {
        vec![vec![a, b], vec![b, a], vec![a, b], vec![b, a]]
    }
}

fn certify(g: &Graph, out: Universal, what: &'static str) -> Result<Universal> {
    let verdict = repr::verify(&out.word.to_word(), g, 2)?;
    if !verdict.is_pass() {
        return Err(Error::Internal { what, violations: verdict.violations().len() });
    }
    if !out.word.heads_cover() {
        return Err(Error::Internal { what, violations: 0 });
    }
    Ok(out)
}

/// A permutational 2-11-representant of any graph on `n >= 2` vertices
/// with at most `n^2 - n + 2` blocks, every vertex heading a block.
pub fn represent2(g: &Graph) -> Result<Universal> {
    let n = g.n();
    if n < 2 {
        return Err(Error::GraphTooSmall { n, min: 2 });
    }
    let (one, two) = (Letter::from_index(0), Letter::from_index(1));
    let mut word = PermutationalWord { n: 2, blocks: base(one, two, g.has_edge(one, two)) };
    let mut duplications = 0;
    for i in 2..n {
        let v = Letter::from_index(i);
        duplications += add_vertex(&mut word, v, |j| g.has_edge(j, v)) as usize;
    }
    certify(g, Universal { word, duplications }, "represent2")
}

/// Removal order for the connected construction: repeatedly the smallest
/// non-cut vertex of the remaining graph, until two vertices are left.
/// Returns the two base vertices and the added vertices in insertion order.
pub fn connected_elimination_order(g: &Graph) -> Result<(Letter, Letter, Vec<Letter>)> {
    if g.n() < 2 {
        return Err(Error::GraphTooSmall { n: g.n(), min: 2 });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut alive: Vec<Letter> = g.vertices().collect();
    let mut removed = Vec::new();
    while alive.len() > 2 {
        let (h, map) = g.induced(&alive)?;
        let v = map.original(h.non_cut_vertices()[0]);
        alive.retain(|&u| u != v);
        removed.push(v);
    }
    removed.reverse();
    Ok((alive[0], alive[1], removed))
}

/// Connected variant: base `ab ba` on an edge and vertices added in an order
/// that keeps every intermediate graph connected. At most `n^2 - 3n + 4`
/// blocks.
pub fn represent2_connected(g: &Graph) -> Result<Universal> {
    let n = g.n();
    let (a, b, order) = connected_elimination_order(g)?;
    // Intermediate blocks use the original labels; `n` counts letters.
    let mut word = PermutationalWord { n: 2, blocks: vec![vec![a, b], vec![b, a]] };
    let mut duplications = 0;
    for v in order {
        duplications += add_vertex_labeled(&mut word, v, |j| g.has_edge(j, v)) as usize;
    }
    debug_assert_eq!(word.n, n);
    certify(g, Universal { word, duplications }, "represent2_connected")
}

/// [`add_vertex`] for blocks over an arbitrary subset of letters.
fn add_vertex_labeled(word: &mut PermutationalWord, v: Letter, adjacent: impl Fn(Letter) -> bool) -> bool {
    let letters: Vec<Letter> = {
        let mut l = word.blocks[0].clone();
        l.sort_unstable();
        l
    };
    let to_local = |l: Letter| Letter::from_index(letters.binary_search(&l).expect("present"));
    let mut local = PermutationalWord {
        n: letters.len(),
        blocks: word.blocks.iter().map(|b| b.iter().map(|&l| to_local(l)).collect()).collect(),
    };
    let fresh = Letter::from_index(letters.len());
    let dup = add_vertex(&mut local, fresh, |j| adjacent(letters[j.index()]));
    let back = |l: Letter| if l == fresh { v } else { letters[l.index()] };
    word.blocks = local.blocks.iter().map(|b| b.iter().map(|&l| back(l)).collect()).collect();
    word.n += 1;
    dup
}
