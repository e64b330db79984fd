//! Word transformations that build representants of modified graphs.
//!
//! Every operation takes representant words, emits a new word, computes the
//! graph the new word is supposed to represent and checks it with the
//! engine before returning. A failed check is reported as
//! [`Error::Internal`]: it means the construction is wrong, not the input.
//!
//! New vertices always take the next free id `n + 1`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::repr::{self, graph_of_word, PairCounts, Verdict};
use crate::words::{Letter, Word};

/// A constructed word, the graph it represents and the passing certificate.
#[derive(Clone, Debug)]
pub struct ConstructionResult {
    pub word: Word,
    pub expected: Graph,
    pub level: u32,
    pub certificate: Verdict,
}

fn certify(word: Word, expected: Graph, level: u32, what: &'static str) -> Result<ConstructionResult> {
    let certificate = repr::verify(&word, &expected, level)?;
    if !certificate.is_pass() {
        return Err(Error::Internal { what, violations: certificate.violations().len() });
    }
    Ok(ConstructionResult { word, expected, level, certificate })
}

fn size_of(word: &Word) -> Result<usize> {
    if word.is_empty() {
        return Err(Error::EmptyWord);
    }
    word.standard_size().ok_or(Error::AlphabetNotStandard)
}

fn fresh(n: usize, letter: Letter) -> Result<()> {
    let expected = Letter::from_index(n);
    if letter == expected {
        Ok(())
    } else {
        Err(Error::NotFresh { letter, expected })
    }
}

fn member(n: usize, letter: Letter) -> Result<()> {
    if letter.index() < n {
        Ok(())
    } else {
        Err(Error::LetterNotInAlphabet(letter))
    }
}

/// Prepends initial permutations until `letter` occurs `target` times.
fn pad_letter(word: &Word, letter: Letter, target: usize) -> Result<Word> {
    let have = word.occurrences(letter);
    Ok(word.initial_permutation()?.repeat(target.saturating_sub(have)).concat(word))
}

fn uniformity(word: &Word) -> Result<usize> {
    word.is_uniform().ok_or(Error::NotUniform)
}

/// Splits a word that starts with `sep` into the factors between
/// consecutive occurrences of `sep`: `sep g1 sep g2 ... sep gm`.
fn split_after(word: &Word, sep: Letter) -> Vec<Word> {
    debug_assert_eq!(word.first(), Some(sep));
    let mut parts: Vec<Word> = Vec::new();
    for l in word.iter() {
        if l == sep {
            parts.push(Word::empty());
        } else {
            parts.last_mut().expect("starts with sep").push(l);
        }
    }
    parts
}

/// Splits a word that ends with `sep`: `h1 sep h2 sep ... hm sep`.
fn split_before(word: &Word, sep: Letter) -> Vec<Word> {
    debug_assert_eq!(word.last(), Some(sep));
    let mut parts = Vec::new();
    let mut cur = Word::empty();
    for l in word.iter() {
        if l == sep {
            parts.push(core::mem::take(&mut cur));
        } else {
            cur.push(l);
        }
    }
    parts
}

fn initial_or_empty(word: &Word) -> Word {
    word.initial_permutation().unwrap_or_default()
}

fn concat_all<'a>(parts: impl IntoIterator<Item = &'a Word>) -> Word {
    let mut out = Word::empty();
    for p in parts {
        out.extend_from(p);
    }
    out
}

/// Concatenation of representants of the components, each padded so every
/// letter occurs at least `k + 2` times. Part `i` is shifted past the
/// letters of parts `0..i`.
pub fn disjoint_union(parts: &[(Word, Graph)], k: u32) -> Result<ConstructionResult> {
    if parts.is_empty() {
        return Err(Error::InvalidParameter("disjoint union needs at least one part"));
    }
    let mut word = Word::empty();
    let mut expected = Graph::with_vertices(0);
    for (i, (w, g)) in parts.iter().enumerate() {
        let verdict = repr::verify(w, g, k)?;
        if !verdict.is_pass() {
            return Err(Error::InputMismatch { part: i, violations: verdict.violations().len() });
        }
        let offset = expected.n();
        let padded = repr::pad_occurrences(w, k as usize + 2)?;
        word.extend_from(&padded.relabel(|l| Letter::from_index(l.index() + offset)));
        expected = expected.disjoint_union(g);
    }
    certify(word, expected, k, "disjoint_union")
}

/// Adds a vertex `y` adjacent only to `x`: pad `x` to `2k + 2`
/// occurrences, then replace the 1st, 3rd, 5th, ... occurrence of `x` by
/// `y x y`.
pub fn add_pendant(word: &Word, k: u32, x: Letter, y: Letter) -> Result<ConstructionResult> {
    let n = size_of(word)?;
    member(n, x)?;
    fresh(n, y)?;
    let mut expected = graph_of_word(word, k)?;
    expected.add_vertex(&[x])?;

    let padded = pad_letter(word, x, 2 * k as usize + 2)?;
    let mut out = Word::empty();
    let mut seen = 0;
    for l in padded.iter() {
        if l == x {
            if seen % 2 == 0 {
                out.push(y);
                out.push(x);
                out.push(y);
            } else {
                out.push(x);
            }
            seen += 1;
        } else {
            out.push(l);
        }
    }
    certify(out, expected, k, "add_pendant")
}

/// Adds `x` with the same neighbourhood as `y`, adjacent to `y` or not.
pub fn add_twin(word: &Word, k: u32, y: Letter, x: Letter, adjacent: bool) -> Result<ConstructionResult> {
    let n = size_of(word)?;
    member(n, y)?;
    fresh(n, x)?;
    let base = graph_of_word(word, k)?;
    let mut nbrs = base.neighbors(y);
    if adjacent {
        nbrs.push(y);
    }
    let mut expected = base;
    expected.add_vertex(&nbrs)?;

    let mut out = Word::empty();
    if adjacent {
        for l in word.iter() {
            if l == y {
                out.push(x);
            }
            out.push(l);
        }
    } else {
        // Odd occurrences become xy, even ones yx; the {x,y} subword is
        // then xy yx xy yx ... with at least k+1 repeated letters.
        let padded = pad_letter(word, y, k as usize + 2)?;
        let mut seen = 0;
        for l in padded.iter() {
            if l == y {
                if seen % 2 == 0 {
                    out.push(x);
                    out.push(y);
                } else {
                    out.push(y);
                    out.push(x);
                }
                seen += 1;
            } else {
                out.push(l);
            }
        }
    }
    certify(out, expected, k, "add_twin")
}

/// Brings two words to the same number of occurrences of their
/// distinguished letters by prepending initial permutations to the one that
/// falls short. Prepending `pi(w)` keeps the first letter and, since
/// `pi(pi(w) w) = pi(w)`, the initial permutation.
fn equalize(w1: Word, x: Letter, w2: Word, y: Letter) -> Result<(Word, Word)> {
    let (c1, c2) = (w1.occurrences(x), w2.occurrences(y));
    Ok(if c1 < c2 {
        (pad_letter(&w1, x, c2)?, w2)
    } else {
        let w2 = pad_letter(&w2, y, c1)?;
        (w1, w2)
    })
}

/// Identifies vertex `x` of the first graph with vertex `y` of the second.
///
/// The glued vertex keeps id `x`; the other vertices of the second graph
/// follow the first graph's vertices in their original order.
pub fn glue_at_vertex(w1: &Word, w2: &Word, k: u32, x: Letter, y: Letter) -> Result<ConstructionResult> {
    let (n1, n2) = (size_of(w1)?, size_of(w2)?);
    member(n1, x)?;
    member(n2, y)?;
    let (g1, g2) = (graph_of_word(w1, k)?, graph_of_word(w2, k)?);
    let map = |u: Letter| -> Letter {
        use core::cmp::Ordering::*;
        match u.cmp(&y) {
            Less => Letter::from_index(n1 + u.index()),
            Equal => x,
            Greater => Letter::from_index(n1 + u.index() - 1),
        }
    };
    let mut expected = Graph::with_vertices(n1 + n2 - 1);
    for (a, b) in g1.edges() {
        expected.add_edge(a, b)?;
    }
    for (a, b) in g2.edges() {
        expected.add_edge(map(a), map(b))?;
    }

    let z = x;
    let w1 = repr::with_start(w1, z)?;
    let w2 = repr::with_start(&w2.relabel(map), z)?;
    // Equalizing after the start normalization keeps both properties, so
    // the block counts agree without a second pass.
    let (w1, w2) = equalize(w1, z, w2, z)?;
    let g = split_after(&w1, z);
    let h = split_after(&w2, z);
    debug_assert_eq!(g.len(), h.len());
    let pi1 = initial_or_empty(&concat_all(&g));
    let pi2 = initial_or_empty(&concat_all(&h));

    let mut head = Word::empty();
    head.push(z);
    head.extend_from(&pi1);
    head.extend_from(&pi2);
    head.push(z);
    head.extend_from(&pi2);
    head.extend_from(&pi1);
    let mut out = head.repeat(k as usize + 1);
    for (gi, hi) in g.iter().zip(&h) {
        out.push(z);
        out.extend_from(gi);
        out.extend_from(hi);
    }
    certify(out, expected, k, "glue_at_vertex")
}

/// Joins the two graphs by the edge from `x` (first graph) to `y` (second
/// graph). Vertices of the second graph are shifted by the first graph's
/// size.
pub fn connect_by_edge(w1: &Word, w2: &Word, k: u32, x: Letter, y: Letter) -> Result<ConstructionResult> {
    let (n1, n2) = (size_of(w1)?, size_of(w2)?);
    member(n1, x)?;
    member(n2, y)?;
    let (g1, g2) = (graph_of_word(w1, k)?, graph_of_word(w2, k)?);
    let shift = |u: Letter| Letter::from_index(n1 + u.index());
    let mut expected = g1.disjoint_union(&g2);
    let y = shift(y);
    expected.add_edge(x, y)?;

    let w1 = repr::with_start(w1, x)?;
    let mut w2 = repr::with_end(&w2.relabel(shift), y)?;
    let pi = w2.initial_permutation()?;
    if pi.last() != Some(y) {
        // pi(w2) = A y B; the prefix B A y B keeps every pair's count and
        // moves y to the end of the initial permutation.
        let at = pi.iter().position(|l| l == y).expect("y in alphabet");
        let a = Word::new(pi.letters()[..at].to_vec());
        let b = Word::new(pi.letters()[at + 1..].to_vec());
        let mut prefix = b.concat(&a);
        prefix.push(y);
        prefix.extend_from(&b);
        w2 = prefix.concat(&w2);
    }
    let (w1, w2) = equalize(w1, x, w2, y)?;
    let g = split_after(&w1, x);
    let h = split_before(&w2, y);
    debug_assert_eq!(g.len(), h.len());
    let pi1 = initial_or_empty(&concat_all(&g));
    let pi2 = initial_or_empty(&concat_all(&h));

    let mut head = Word::empty();
    head.push(x);
    head.extend_from(&pi1);
    head.extend_from(&pi2);
    head.push(y);
    head.extend_from(&pi2);
    head.push(x);
    head.push(y);
    head.extend_from(&pi1);
    let mut out = head.repeat(k as usize + 1);
    for (gi, hi) in g.iter().zip(&h) {
        out.push(x);
        out.extend_from(gi);
        out.extend_from(hi);
        out.push(y);
    }
    certify(out, expected, k, "connect_by_edge")
}

fn validate_set(n: usize, set: &[Letter]) -> Result<Vec<Letter>> {
    let mut s = set.to_vec();
    s.sort_unstable();
    s.dedup();
    for &l in &s {
        member(n, l)?;
    }
    Ok(s)
}

/// `pi(w)|N v pi(w)|N^c w`, then alternately prepend `r(pi(w)) v` and
/// `pi(w) v` until `v` occurs `copies` times.
fn cone_prefix(word: &Word, nbrs: &[Letter], v: Letter, copies: usize) -> Result<Word> {
    let pi = word.initial_permutation()?;
    let rpi = pi.reverse();
    let mut out = pi.restrict(nbrs);
    out.push(v);
    out.extend_from(&pi.restrict_by(|l| !nbrs.contains(&l)));
    out.extend_from(word);
    let mut placed = 1;
    while placed < copies {
        let mut block = if placed % 2 == 1 { rpi.clone() } else { pi.clone() };
        block.push(v);
        out = block.concat(&out);
        placed += 1;
    }
    Ok(out)
}

/// When `v` gets a single copy there is no alternating prefix to absorb
/// the order change between `pi(w)` and `pi(w)|N v pi(w)|N^c`, and a pair
/// split by `N` can gain one `11`. That only happens when every pair of the
/// input is an edge (a 1-uniform word at level 0, or an `m`-uniform word at
/// level `2m - 2`), so the input is replaced by `p^m` with
/// `p = pi(w)|N pi(w)|N^c`, which represents the same complete graph.
fn rebase_for_single_copy(word: &Word, nbrs: &[Letter], m: usize) -> Result<Word> {
    let pi = word.initial_permutation()?;
    let p = pi.restrict(nbrs).concat(&pi.restrict_by(|l| !nbrs.contains(&l)));
    Ok(p.repeat(m))
}

fn check_cone_counts(
    word: &Word,
    n: usize,
    v: Letter,
    nbrs: &[Letter],
    adjacent: u32,
    non_adjacent: u32,
    what: &'static str,
) -> Result<()> {
    let counts = PairCounts::of(word, n + 1);
    let bad = (0..n)
        .map(Letter::from_index)
        .filter(|&u| {
            let want = if nbrs.contains(&u) { adjacent } else { non_adjacent };
            counts.get(u, v) != want
        })
        .count();
    if bad == 0 {
        Ok(())
    } else {
        Err(Error::Internal { what, violations: bad })
    }
}

/// Adds `v` adjacent to exactly `nbrs`, given a `t`-uniform 0-11
/// representant of the graph without `v`. The result `(t-1)`-11-represents
/// the extended graph, and every cone pair `{u, v}` with `u` in `nbrs`
/// has exactly `t - 1` occurrences.
pub fn add_vertex_from_uniform(word: &Word, nbrs: &[Letter], v: Letter) -> Result<ConstructionResult> {
    let n = size_of(word)?;
    let t = uniformity(word)?;
    let nbrs = validate_set(n, nbrs)?;
    fresh(n, v)?;
    let mut expected = graph_of_word(word, 0)?;
    expected.add_vertex(&nbrs)?;

    let base = if t == 1 { rebase_for_single_copy(word, &nbrs, t)? } else { word.clone() };
    let out = cone_prefix(&base, &nbrs, v, t)?;
    let level = t as u32 - 1;
    // Non-neighbours see (xv)^(t-1) v x^(t+1); without the prefix the vv
    // factor is missing.
    let non_adjacent = if t == 1 { 1 } else { t as u32 + 1 };
    check_cone_counts(&out, n, v, &nbrs, level, non_adjacent, "add_vertex_from_uniform")?;
    certify(out, expected, level, "add_vertex_from_uniform")
}

/// Adds `v` adjacent to exactly `nbrs`, given an `m`-uniform `k`-11
/// representant with `2m - k - 1 > 0`. The result is `(3m - k - 1)`-uniform
/// and `(2m - 2)`-11-represents the extended graph; cone pairs have exactly
/// `2m - 2` occurrences and non-adjacent `{u, v}` pairs exactly `2m`.
pub fn add_vertex_general(word: &Word, k: u32, nbrs: &[Letter], v: Letter) -> Result<ConstructionResult> {
    let n = size_of(word)?;
    let m = uniformity(word)?;
    if 2 * m <= k as usize + 1 {
        return Err(Error::InvalidParameter("need 2m - k - 1 > 0"));
    }
    let nbrs = validate_set(n, nbrs)?;
    fresh(n, v)?;
    let mut expected = graph_of_word(word, k)?;
    expected.add_vertex(&nbrs)?;

    let copies = 2 * m - k as usize - 1;
    let base = if copies == 1 { rebase_for_single_copy(word, &nbrs, m)? } else { word.clone() };
    let body = cone_prefix(&base, &nbrs, v, copies)?;
    let out = Word::new(alloc::vec![v; m]).concat(&body);
    let level = 2 * m as u32 - 2;
    check_cone_counts(&out, n, v, &nbrs, level, 2 * m as u32, "add_vertex_general")?;
    certify(out, expected, level, "add_vertex_general")
}

/// Parameter chain of repeated [`add_vertex_general`] steps: if every graph
/// on `n` vertices is `(k + n - 3)`-uniformly `k`-11-representable, every
/// graph on `n + 1` vertices is `(2k + 3n - 10)`-uniformly
/// `(2k + 2n - 8)`-11-representable. Yields `(n, uniformity, level)`
/// starting from the given hypothesis, for as long as `2n + k - 7 > 0`
/// keeps the next step applicable.
pub fn vertex_addition_schedule(n: usize, k: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    let mut state = (2 * n + k > 7 && n + k >= 3).then_some((n, k));
    let mut first = true;
    core::iter::from_fn(move || loop {
        let (n, k) = state?;
        if first {
            first = false;
            return Some((n, k + n - 3, k));
        }
        if 2 * n + k <= 7 {
            state = None;
            return None;
        }
        let next = (n + 1, 2 * k + 2 * n - 8);
        state = Some(next);
        first = true;
    })
}

/// Adds a vertex `z` adjacent to exactly `x` and `y`, where `xy` is an edge
/// of the graph 1-11-represented by `word`.
pub fn add_triangle(word: &Word, x: Letter, y: Letter, z: Letter) -> Result<ConstructionResult> {
    let n = size_of(word)?;
    member(n, x)?;
    member(n, y)?;
    fresh(n, z)?;
    if x == y {
        return Err(Error::SameLetter(x));
    }
    let base = graph_of_word(word, 1)?;
    if !base.has_edge(x, y) {
        return Err(Error::NotAnEdge(x, y));
    }
    let mut expected = base;
    expected.add_vertex(&[x, y])?;

    let out = if word.count_pattern11(x, y)? == 0 {
        triangle_alternating(word, x, y, z)?
    } else {
        let sub = word.restrict(&[x, y]);
        let doubled = sub.letters().windows(2).find(|p| p[0] == p[1]).expect("one repeat")[0];
        let single = if doubled == y { x } else { y };
        triangle_one_repeat(word, single, doubled, z)?
    };
    certify(out, expected, 1, "add_triangle")
}

/// `x` and `y` alternate: `w = x g1 y g2 x g3 y ... x gm y` becomes
/// `zxz g1 y g2 x g3 zyz g4 x g5 yz ... x gm yz`.
fn triangle_alternating(word: &Word, x: Letter, y: Letter, z: Letter) -> Result<Word> {
    let mut w = repr::with_endpoints(word, x, y)?;
    while w.occurrences(y) < 2 {
        w = w.initial_permutation()?.concat(&w);
    }
    let mut out = Word::empty();
    let (mut xs, mut ys) = (0, 0);
    for l in w.iter() {
        if l == x {
            xs += 1;
            if xs == 1 {
                out.push(z);
                out.push(x);
                out.push(z);
            } else {
                out.push(x);
            }
        } else if l == y {
            ys += 1;
            match ys {
                1 => out.push(y),
                2 => {
                    out.push(z);
                    out.push(y);
                    out.push(z);
                }
                _ => {
                    out.push(y);
                    out.push(z);
                }
            }
        } else {
            out.push(l);
        }
    }
    Ok(out)
}

/// `{p, q}` subword has exactly one `qq`. With `w` starting and ending in
/// `p` and at least two `p`s before the `qq`: the first `p` becomes `zpz`,
/// later `p`s before the `qq` become `pz` except the last one, the first
/// `q` of `qq` becomes `zqz`, and every `p` after it becomes `pz`.
fn triangle_one_repeat(word: &Word, p: Letter, q: Letter, z: Letter) -> Result<Word> {
    let mut w = repr::with_endpoints(word, p, p)?;
    let ps_before = |w: &Word| {
        let sub = w.restrict(&[p, q]);
        let at = sub.letters().windows(2).position(|t| t[0] == q && t[1] == q).expect("qq present");
        sub.letters()[..at].iter().filter(|&&l| l == p).count()
    };
    while ps_before(&w) < 2 {
        w = w.initial_permutation()?.concat(&w);
    }
    let before = ps_before(&w);
    let mut out = Word::empty();
    let (mut ps, mut prev_q, mut after) = (0, false, false);
    for l in w.iter() {
        if l == p {
            ps += 1;
            if ps == 1 {
                out.push(z);
                out.push(p);
                out.push(z);
            } else if after || ps < before {
                out.push(p);
                out.push(z);
            } else {
                out.push(p);
            }
            prev_q = false;
        } else if l == q {
            if !after && ps == before && !prev_q {
                out.push(z);
                out.push(q);
                out.push(z);
                prev_q = true;
            } else {
                if prev_q {
                    after = true;
                }
                out.push(q);
                prev_q = false;
            }
        } else {
            out.push(l);
        }
    }
    Ok(out)
}

/// Adds `v` adjacent to exactly `nbrs`, given a permutational 0-11
/// representant `pi_1 ... pi_k` of the graph without `v`: emits
/// `r(pi(w)) v pi(w)|N v pi(w)|N^c pi_1 v pi_2 v ... v pi_k`, a 1-11
/// representant.
pub fn add_vertex_from_permutational(word: &Word, nbrs: &[Letter], v: Letter) -> Result<ConstructionResult> {
    let n = size_of(word)?;
    let blocks = word.blocks()?;
    let nbrs = validate_set(n, nbrs)?;
    fresh(n, v)?;
    let mut expected = graph_of_word(word, 0)?;
    expected.add_vertex(&nbrs)?;

    let pi = word.initial_permutation()?;
    let mut out = pi.reverse();
    out.push(v);
    out.extend_from(&pi.restrict(&nbrs));
    out.push(v);
    out.extend_from(&pi.restrict_by(|l| !nbrs.contains(&l)));
    for (i, b) in blocks.iter().enumerate() {
        if i > 0 {
            out.push(v);
        }
        out.extend_from(b);
    }
    certify(out, expected, 1, "add_vertex_from_permutational")
}

/// Removes the edge `xy` from the graph 0-11-represented by a uniform word:
/// `y x w w y x`, with `x` the letter leading the `{x, y}` subword.
pub fn remove_edge(word: &Word, x: Letter, y: Letter) -> Result<ConstructionResult> {
    let n = size_of(word)?;
    uniformity(word)?;
    member(n, x)?;
    member(n, y)?;
    if x == y {
        return Err(Error::SameLetter(x));
    }
    let mut expected = graph_of_word(word, 0)?;
    if !expected.has_edge(x, y) {
        return Err(Error::NotAnEdge(x, y));
    }
    expected.remove_edge(x, y)?;
    let (x, y) = if word.iter().find(|&l| l == x || l == y) == Some(x) { (x, y) } else { (y, x) };
    let mut out = Word::new(alloc::vec![y, x]);
    out.extend_from(word);
    out.extend_from(word);
    out.push(y);
    out.push(x);
    certify(out, expected, 1, "remove_edge")
}

/// Removes every edge inside `set`: `p w w q` with `p`, `q` the reversed
/// initial and final permutations of `w|set`.
pub fn remove_clique_edges(word: &Word, set: &[Letter]) -> Result<ConstructionResult> {
    let n = size_of(word)?;
    uniformity(word)?;
    let set = validate_set(n, set)?;
    let mut expected = graph_of_word(word, 0)?;
    for (i, &a) in set.iter().enumerate() {
        for &b in &set[i + 1..] {
            expected.remove_edge(a, b)?;
        }
    }
    let sub = word.restrict(&set);
    let (p, q) = if sub.is_empty() {
        (Word::empty(), Word::empty())
    } else {
        (sub.initial_permutation()?.reverse(), sub.final_permutation()?.reverse())
    };
    let out = p.concat(word).concat(word).concat(&q);
    certify(out, expected, 1, "remove_clique_edges")
}

/// Removes the edges from `v` to every vertex of `nbrs`. The uniform word
/// is first rotated to start with `v`; with `a = pi(w|N)` and
/// `b = sigma(w|N)`, emits `a v w w b v`.
///
/// Writing the two caps in reverse order would add one `11` at each end of
/// the subword of two adjacent members of `nbrs` and delete that edge too,
/// so the caps keep the order in which `w` lists `nbrs`.
pub fn remove_star_edges(word: &Word, v: Letter, nbrs: &[Letter]) -> Result<ConstructionResult> {
    let n = size_of(word)?;
    uniformity(word)?;
    member(n, v)?;
    let nbrs = validate_set(n, nbrs)?;
    let mut expected = graph_of_word(word, 0)?;
    for &u in &nbrs {
        if u == v || !expected.has_edge(u, v) {
            return Err(Error::NotANeighbor { center: v, other: u });
        }
        expected.remove_edge(u, v)?;
    }
    let split = word.iter().position(|l| l == v).expect("v in alphabet");
    let w = word.cyclic_shift(split)?;
    let sub = w.restrict(&nbrs);
    let (mut head, mut tail) = if sub.is_empty() {
        (Word::empty(), Word::empty())
    } else {
        (sub.initial_permutation()?, sub.final_permutation()?)
    };
    head.push(v);
    tail.push(v);
    let out = head.concat(&w).concat(&w).concat(&tail);
    certify(out, expected, 1, "remove_star_edges")
}
