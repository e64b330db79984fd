//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion
//! and exits nonzero if any fails.
//!
//! Expected graphs are built here from scratch and compared against an
//! oracle that counts `11` occurrences pair by pair through
//! `Word::count_pattern11`, which shares no code with the engine's
//! single-pass counter.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wordrep_core::constructions::{self, ConstructionResult};
use wordrep_core::models::{self, chord_crossings, m_intersection_graph, Coloring, IntervalModel};
use wordrep_core::repr::{extend_level, Side};
use wordrep_core::search::{find_uniform, Outcome, SearchBudget, Sequential};
use wordrep_core::universal::{block_bound, block_bound_connected, represent2, represent2_connected};
use wordrep_core::{graph_of_word, verify, Graph, Letter, Word};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn l(i: usize) -> Letter {
    Letter::from_index(i)
}

fn word(s: &str) -> Word {
    Word::from_compact(s).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Graph on `1..=n` with `xy` an edge iff the `{x, y}` subword has at most
/// `k` adjacent equal letters, counted by the slow route.
fn oracle(w: &Word, n: usize, k: u32) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if w.count_pattern11(l(i), l(j)).unwrap() <= k as usize {
                edges.push((i as u32 + 1, j as u32 + 1));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn edge_set(g: &Graph) -> BTreeSet<(usize, usize)> {
    let mut s = BTreeSet::new();
    for i in 0..g.n() {
        for j in i + 1..g.n() {
            if g.has_edge(l(i), l(j)) {
                s.insert((i, j));
            }
        }
    }
    s
}

fn graph_from_set(n: usize, edges: &BTreeSet<(usize, usize)>) -> Graph {
    Graph::from_edges(n, edges.iter().map(|&(a, b)| (a as u32 + 1, b as u32 + 1))).unwrap()
}

fn wheel5() -> Graph {
    Graph::from_edges(6, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (1, 6), (2, 6), (3, 6), (4, 6), (5, 6)]).unwrap()
}

fn rim5() -> Graph {
    Graph::from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]).unwrap()
}

/// Every letter of `1..=n` between 1 and `max` times, shuffled.
fn random_word(rng: &mut ChaCha8Rng, n: usize, max: usize) -> Word {
    let mut letters = Vec::new();
    for i in 0..n {
        for _ in 0..rng.gen_range(1..=max) {
            letters.push(l(i));
        }
    }
    letters.shuffle(rng);
    Word::new(letters)
}

fn uniform_word(rng: &mut ChaCha8Rng, n: usize, t: usize) -> Word {
    let mut letters: Vec<Letter> = (0..n).flat_map(|i| std::iter::repeat_n(l(i), t)).collect();
    letters.shuffle(rng);
    Word::new(letters)
}

fn permutational_word(rng: &mut ChaCha8Rng, n: usize, blocks: usize) -> Word {
    let mut letters = Vec::new();
    for _ in 0..blocks {
        let mut p: Vec<Letter> = (0..n).map(l).collect();
        p.shuffle(rng);
        letters.extend(p);
    }
    Word::new(letters)
}

fn random_subset(rng: &mut ChaCha8Rng, from: &[Letter]) -> Vec<Letter> {
    from.iter().copied().filter(|_| rng.gen_bool(0.5)).collect()
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let c4 = Graph::from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
    let cases: [(&str, u32, Graph); 3] =
        [("14213243", 0, c4), ("1521324354", 0, rim5()), ("432511521324354", 1, rim5())];
    for (w, k, g) in cases {
        let w = word(w);
        ensure(graph_of_word(&w, k).unwrap() == g, || format!("graph of {w} at level {k}"))?;
        ensure(oracle(&w, g.n(), k) == g, || format!("oracle graph of {w} at level {k}"))?;
    }
    let u = word("4325161521324354");
    ensure(verify(&u, &wheel5(), 1).unwrap().is_pass(), || "u does not represent W5".into())?;
    ensure(oracle(&u, 6, 1) == wheel5(), || "oracle disagrees on u".into())?;
    let six = word("6").concat(&u).concat(&word("6"));
    ensure(verify(&six, &wheel5(), 1).unwrap().is_pass(), || "6u6 does not represent W5".into())?;
    ensure(oracle(&six, 6, 1) == wheel5(), || "oracle disagrees on 6u6".into())?;
    ensure(six.is_uniform() == Some(3), || "6u6 is not 3-uniform".into())?;
    let took = start.elapsed();
    ensure(took < Duration::from_secs(1), || format!("took {took:?}"))?;
    Ok(format!("5 golden words in {took:?}"))
}

fn check_universal(g: &Graph, w: &wordrep_core::universal::PermutationalWord, bound: usize) -> Result<(), String> {
    let word = w.to_word();
    ensure(verify(&word, g, 2).unwrap().is_pass(), || format!("{word} fails at level 2"))?;
    ensure(oracle(&word, g.n(), 2) == *g, || format!("oracle disagrees on {word}"))?;
    ensure(w.block_count() <= bound, || format!("{} blocks > {bound}", w.block_count()))?;
    ensure(word.len() == w.block_count() * g.n(), || "blocks are not permutations".into())?;
    for v in 0..g.n() {
        ensure(w.blocks().iter().any(|b| b[0] == l(v)), || format!("vertex {} heads no block", v + 1))?;
    }
    Ok(())
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let k2 = represent2(&Graph::complete(2).unwrap()).unwrap().word.to_word();
    ensure(k2 == word("12211212"), || format!("K2 base is {k2}"))?;
    let e2 = represent2(&Graph::empty(2).unwrap()).unwrap().word.to_word();
    ensure(e2 == word("12211221"), || format!("empty base is {e2}"))?;
    let mut max_blocks = 0;
    let mut duplications = 0;
    for mask in 0..1u64 << 15 {
        let g = Graph::from_mask(6, mask);
        let u = represent2(&g).map_err(|e| format!("mask {mask}: {e}"))?;
        check_universal(&g, &u.word, block_bound(6)).map_err(|e| format!("mask {mask}: {e}"))?;
        max_blocks = max_blocks.max(u.word.block_count());
        duplications += u.duplications;
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(120), || format!("took {took:?}"))?;
    Ok(format!("32768 graphs, max {max_blocks} blocks (bound 32), {duplications} duplications, {took:?}"))
}

fn criterion_3() -> Check {
    let mut graphs = 0;
    let mut duplications = 0;
    let mut worst = Vec::new();
    for n in 2..=6usize {
        let mut max_blocks = 0;
        for mask in 0..1u64 << (n * (n - 1) / 2) {
            let g = Graph::from_mask(n, mask);
            if !g.is_connected() {
                continue;
            }
            graphs += 1;
            let u = represent2_connected(&g).map_err(|e| format!("n {n} mask {mask}: {e}"))?;
            check_universal(&g, &u.word, block_bound_connected(n)).map_err(|e| format!("n {n} mask {mask}: {e}"))?;
            max_blocks = max_blocks.max(u.word.block_count());
            duplications += u.duplications;
        }
        worst.push(format!("n={n}:{max_blocks}/{}", block_bound_connected(n)));
    }
    Ok(format!("{graphs} connected graphs, blocks {}, {duplications} duplications", worst.join(" ")))
}

/// All perfect matchings of `0..2n`, each as a chord list.
fn matchings(points: Vec<usize>, acc: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
    let Some((&first, rest)) = points.split_first() else {
        out.push(acc.clone());
        return;
    };
    for (i, &other) in rest.iter().enumerate() {
        let mut left = rest.to_vec();
        left.remove(i);
        acc.push((first, other));
        matchings(left, acc, out);
        acc.pop();
    }
}

fn criterion_4() -> Check {
    let w5 = wheel5();
    let budget = SearchBudget { max_copies_per_letter: 2, node_limit: u64::MAX, ..SearchBudget::default() };
    let start = Instant::now();
    let report = find_uniform(&w5, 0, 2, &budget, &Sequential).unwrap();
    let took = start.elapsed();
    ensure(report.outcome == Outcome::ProvedAbsent, || format!("canonical search: {:?}", report.outcome))?;
    ensure(took < Duration::from_secs(30), || format!("took {took:?}"))?;

    let labeled = SearchBudget { canonical: false, ..budget };
    let report2 = find_uniform(&w5, 0, 2, &labeled, &Sequential).unwrap();
    ensure(report2.outcome == Outcome::ProvedAbsent, || format!("labeled search: {:?}", report2.outcome))?;

    // Independent route: no chord diagram on 12 points has W5 as its
    // crossing graph under any labeling.
    let mut all = Vec::new();
    matchings((0..12).collect(), &mut Vec::new(), &mut all);
    ensure(all.len() == 10_395, || format!("{} matchings", all.len()))?;
    for m in &all {
        let mut edges = Vec::new();
        for i in 0..6 {
            for j in i + 1..6 {
                let ((a, b), (c, d)) = (m[i], m[j]);
                if (a < c && c < b) != (a < d && d < b) {
                    edges.push((i as u32 + 1, j as u32 + 1));
                }
            }
        }
        let g = Graph::from_edges(6, edges).unwrap();
        ensure(g.find_isomorphism(&w5).is_none(), || format!("matching {m:?} realizes W5"))?;
    }
    Ok(format!(
        "canonical search {} nodes in {took:?}; labeled search {} nodes; 10395 chord diagrams checked",
        report.nodes_expanded, report2.nodes_expanded
    ))
}

struct Suite {
    name: &'static str,
    runs: usize,
}

fn expect_result(r: &ConstructionResult, expected: &Graph, what: &str) -> Result<(), String> {
    ensure(r.certificate.is_pass(), || format!("{what}: certificate is not PASS"))?;
    ensure(r.expected == *expected, || format!("{what}: construction targets a different graph"))?;
    let got = oracle(&r.word, expected.n(), r.level);
    ensure(got == *expected, || format!("{what}: oracle graph of {} differs", r.word))
}

/// `g` plus a vertex `n + 1` adjacent to `nbrs`.
fn plus_vertex(g: &Graph, nbrs: &[Letter]) -> Graph {
    let n = g.n();
    let mut e = edge_set(g);
    for u in nbrs {
        e.insert((u.index(), n));
    }
    graph_from_set(n + 1, &e)
}

fn criterion_5() -> Check {
    const RUNS: usize = 1000;
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut suites = Vec::new();
    let mut run =
        |name: &'static str, f: &mut dyn FnMut(&mut ChaCha8Rng) -> Result<bool, String>| -> Result<(), String> {
            let mut done = 0;
            let mut tries = 0;
            while done < RUNS {
                tries += 1;
                if tries > 50 * RUNS {
                    return Err(format!("{name}: could not draw enough instances"));
                }
                if f(&mut rng).map_err(|e| format!("{name}: {e}"))? {
                    done += 1;
                }
            }
            suites.push(Suite { name, runs: done });
            Ok(())
        };

    run("disjoint_union", &mut |rng| {
        let k = rng.gen_range(0..=2);
        let parts = rng.gen_range(1..=3);
        let mut sizes = Vec::new();
        let mut pairs = Vec::new();
        for _ in 0..parts {
            let n = rng.gen_range(1..=7 / parts);
            let w = random_word(rng, n, 3);
            sizes.push(n);
            pairs.push((w.clone(), oracle(&w, n, k)));
        }
        let total: usize = sizes.iter().sum();
        let mut e = BTreeSet::new();
        let mut shift = 0;
        for (_, g) in &pairs {
            e.extend(edge_set(g).into_iter().map(|(a, b)| (a + shift, b + shift)));
            shift += g.n();
        }
        let r = constructions::disjoint_union(&pairs, k).map_err(|e| e.to_string())?;
        expect_result(&r, &graph_from_set(total, &e), "union")?;
        Ok(true)
    })?;

    run("add_pendant", &mut |rng| {
        let k = rng.gen_range(0..=2);
        let n = rng.gen_range(1..=6);
        let w = random_word(rng, n, 3);
        let x = l(rng.gen_range(0..n));
        let g = oracle(&w, n, k);
        let r = constructions::add_pendant(&w, k, x, l(n)).map_err(|e| e.to_string())?;
        expect_result(&r, &plus_vertex(&g, &[x]), "pendant")?;
        Ok(true)
    })?;

    run("add_twin", &mut |rng| {
        let k = rng.gen_range(0..=2);
        let n = rng.gen_range(1..=6);
        let w = random_word(rng, n, 3);
        let y = l(rng.gen_range(0..n));
        let adjacent = rng.gen_bool(0.5);
        let g = oracle(&w, n, k);
        let mut nbrs: Vec<Letter> = (0..n).map(l).filter(|&u| u != y && g.has_edge(u, y)).collect();
        if adjacent {
            nbrs.push(y);
        }
        let r = constructions::add_twin(&w, k, y, l(n), adjacent).map_err(|e| e.to_string())?;
        expect_result(&r, &plus_vertex(&g, &nbrs), "twin")?;
        Ok(true)
    })?;

    run("glue_at_vertex", &mut |rng| {
        let k = rng.gen_range(0..=2);
        let n1 = rng.gen_range(1..=4);
        let n2 = rng.gen_range(1..=8 - n1);
        let (w1, w2) = (random_word(rng, n1, 3), random_word(rng, n2, 3));
        let (x, y) = (rng.gen_range(0..n1), rng.gen_range(0..n2));
        let (g1, g2) = (oracle(&w1, n1, k), oracle(&w2, n2, k));
        // Second graph's vertices other than y follow in order; y becomes x.
        let map = |v: usize| {
            if v == y {
                x
            } else {
                n1 + v - (v > y) as usize
            }
        };
        let mut e = edge_set(&g1);
        for (a, b) in edge_set(&g2) {
            let (a, b) = (map(a), map(b));
            e.insert((a.min(b), a.max(b)));
        }
        let r = constructions::glue_at_vertex(&w1, &w2, k, l(x), l(y)).map_err(|e| e.to_string())?;
        expect_result(&r, &graph_from_set(n1 + n2 - 1, &e), "glue")?;
        Ok(true)
    })?;

    run("connect_by_edge", &mut |rng| {
        let k = rng.gen_range(0..=2);
        let n1 = rng.gen_range(1..=4);
        let n2 = rng.gen_range(1..=7 - n1);
        let (w1, w2) = (random_word(rng, n1, 3), random_word(rng, n2, 3));
        let (x, y) = (rng.gen_range(0..n1), rng.gen_range(0..n2));
        let mut e = edge_set(&oracle(&w1, n1, k));
        e.extend(edge_set(&oracle(&w2, n2, k)).into_iter().map(|(a, b)| (a + n1, b + n1)));
        e.insert((x, n1 + y));
        let r = constructions::connect_by_edge(&w1, &w2, k, l(x), l(y)).map_err(|e| e.to_string())?;
        expect_result(&r, &graph_from_set(n1 + n2, &e), "connect")?;
        Ok(true)
    })?;

    run("add_vertex_from_uniform", &mut |rng| {
        let n = rng.gen_range(1..=6);
        let t = rng.gen_range(1..=4);
        let w = uniform_word(rng, n, t);
        let all: Vec<Letter> = (0..n).map(l).collect();
        let nbrs = random_subset(rng, &all);
        let g = oracle(&w, n, 0);
        let r = constructions::add_vertex_from_uniform(&w, &nbrs, l(n)).map_err(|e| e.to_string())?;
        ensure(r.level == t as u32 - 1, || format!("level {} for t {t}", r.level))?;
        expect_result(&r, &plus_vertex(&g, &nbrs), "cone from uniform")?;
        for &u in &nbrs {
            let c = r.word.count_pattern11(u, l(n)).unwrap();
            ensure(c == t - 1, || format!("cone pair count {c}, want {}", t - 1))?;
        }
        Ok(true)
    })?;

    run("add_vertex_general", &mut |rng| {
        let n = rng.gen_range(1..=6);
        let m = rng.gen_range(1..=3);
        let k = rng.gen_range(0..=2u32);
        if 2 * m <= k as usize + 1 {
            return Ok(false);
        }
        let w = uniform_word(rng, n, m);
        let all: Vec<Letter> = (0..n).map(l).collect();
        let nbrs = random_subset(rng, &all);
        let g = oracle(&w, n, k);
        let r = constructions::add_vertex_general(&w, k, &nbrs, l(n)).map_err(|e| e.to_string())?;
        ensure(r.level == 2 * m as u32 - 2, || format!("level {}", r.level))?;
        ensure(r.word.is_uniform() == Some(3 * m - k as usize - 1), || "wrong uniformity".into())?;
        expect_result(&r, &plus_vertex(&g, &nbrs), "cone general")?;
        for u in all {
            let c = r.word.count_pattern11(u, l(n)).unwrap();
            let want = if nbrs.contains(&u) { 2 * m - 2 } else { 2 * m };
            ensure(c == want, || format!("pair count {c}, want {want}"))?;
        }
        Ok(true)
    })?;

    run("add_triangle", &mut |rng| {
        let n = rng.gen_range(2..=6);
        let w = random_word(rng, n, 3);
        let g = oracle(&w, n, 1);
        let edges: Vec<_> = edge_set(&g).into_iter().collect();
        let Some(&(x, y)) = edges.choose(rng) else {
            return Ok(false);
        };
        let (x, y) = if rng.gen_bool(0.5) { (x, y) } else { (y, x) };
        let r = constructions::add_triangle(&w, l(x), l(y), l(n)).map_err(|e| e.to_string())?;
        expect_result(&r, &plus_vertex(&g, &[l(x), l(y)]), "triangle")?;
        Ok(true)
    })?;

    run("add_vertex_from_permutational", &mut |rng| {
        let n = rng.gen_range(1..=6);
        let w = {
            let t = rng.gen_range(1..=4);
            permutational_word(rng, n, t)
        };
        let all: Vec<Letter> = (0..n).map(l).collect();
        let nbrs = random_subset(rng, &all);
        let g = oracle(&w, n, 0);
        let r = constructions::add_vertex_from_permutational(&w, &nbrs, l(n)).map_err(|e| e.to_string())?;
        expect_result(&r, &plus_vertex(&g, &nbrs), "cone from permutational")?;
        Ok(true)
    })?;

    run("remove_edge", &mut |rng| {
        let n = rng.gen_range(2..=7);
        let w = {
            let t = rng.gen_range(1..=3);
            uniform_word(rng, n, t)
        };
        let g = oracle(&w, n, 0);
        let edges: Vec<_> = edge_set(&g).into_iter().collect();
        let Some(&(x, y)) = edges.choose(rng) else {
            return Ok(false);
        };
        let mut e = edge_set(&g);
        e.remove(&(x, y));
        let r = constructions::remove_edge(&w, l(x), l(y)).map_err(|e| e.to_string())?;
        expect_result(&r, &graph_from_set(n, &e), "remove edge")?;
        Ok(true)
    })?;

    run("remove_clique_edges", &mut |rng| {
        let n = rng.gen_range(1..=7);
        let w = {
            let t = rng.gen_range(1..=3);
            uniform_word(rng, n, t)
        };
        let all: Vec<Letter> = (0..n).map(l).collect();
        let set = random_subset(rng, &all);
        let g = oracle(&w, n, 0);
        let mut e = edge_set(&g);
        e.retain(|&(a, b)| !(set.contains(&l(a)) && set.contains(&l(b))));
        let r = constructions::remove_clique_edges(&w, &set).map_err(|e| e.to_string())?;
        expect_result(&r, &graph_from_set(n, &e), "remove clique")?;
        Ok(true)
    })?;

    run("remove_star_edges", &mut |rng| {
        let n = rng.gen_range(2..=7);
        let w = {
            let t = rng.gen_range(1..=3);
            uniform_word(rng, n, t)
        };
        let g = oracle(&w, n, 0);
        let v = rng.gen_range(0..n);
        let around: Vec<Letter> = (0..n).filter(|&u| u != v && g.has_edge(l(u), l(v))).map(l).collect();
        let nbrs = random_subset(rng, &around);
        let mut e = edge_set(&g);
        e.retain(|&(a, b)| !((a == v && nbrs.contains(&l(b))) || (b == v && nbrs.contains(&l(a)))));
        let r = constructions::remove_star_edges(&w, l(v), &nbrs).map_err(|e| e.to_string())?;
        expect_result(&r, &graph_from_set(n, &e), "remove star")?;
        Ok(true)
    })?;

    let took = start.elapsed();
    ensure(took < Duration::from_secs(60), || format!("took {took:?}"))?;
    let names: Vec<String> = suites.iter().map(|s| format!("{}x{}", s.name, s.runs)).collect();
    Ok(format!("{} in {took:?}", names.join(" ")))
}

fn criterion_6() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut uniform = 0;
    for i in 0..5000 {
        let n = rng.gen_range(2..=7);
        let w = if i % 2 == 0 {
            random_word(&mut rng, n, 4)
        } else {
            let t = rng.gen_range(1..=4);
            uniform_word(&mut rng, n, t)
        };
        let k = rng.gen_range(0..=3u32);
        let g = oracle(&w, n, k);
        ensure(graph_of_word(&w, k).unwrap() == g, || format!("engine disagrees on {w} at {k}"))?;
        for side in [Side::Left, Side::Right] {
            let e = extend_level(&w, side).unwrap();
            ensure(oracle(&e, n, k + 1) == g, || format!("extend_level {side:?} of {w} at {k}"))?;
        }
        let g0 = oracle(&w, n, 0);
        ensure(oracle(&w.concat(&w), n, 1) == g0, || format!("ww at level 1 for {w}"))?;

        // Restriction to a subset induces the subgraph.
        let keep: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.6)).collect();
        if keep.len() >= 2 {
            let set: Vec<Letter> = keep.iter().map(|&i| l(i)).collect();
            let sub = w.restrict(&set).relabel(|x| l(keep.iter().position(|&i| i == x.index()).unwrap()));
            let h = graph_of_word(&sub, k).unwrap();
            for (a, &i) in keep.iter().enumerate() {
                for (b, &j) in keep.iter().enumerate().skip(a + 1) {
                    ensure(h.has_edge(l(a), l(b)) == g.has_edge(l(i), l(j)), || {
                        format!("restriction of {w} to {keep:?}")
                    })?;
                }
            }
        }

        if w.is_uniform().is_some() {
            uniform += 1;
            for split in 0..=w.len() {
                let s = w.cyclic_shift(split).unwrap();
                ensure(graph_of_word(&s, 0).unwrap() == g0, || format!("shift {split} of {w}"))?;
            }
        }
    }
    Ok(format!("5000 words ({uniform} uniform), level shifts, restriction and cyclic shifts"))
}

/// Overlap graph computed straight from the endpoints.
fn overlap_graph(m: &IntervalModel) -> Graph {
    let iv = m.intervals();
    let mut edges = Vec::new();
    for i in 0..iv.len() {
        for j in i + 1..iv.len() {
            if iv[i].0 < iv[j].1 && iv[j].0 < iv[i].1 {
                edges.push((i as u32 + 1, j as u32 + 1));
            }
        }
    }
    Graph::from_edges(iv.len(), edges).unwrap()
}

fn random_model(rng: &mut ChaCha8Rng, n: usize) -> IntervalModel {
    let mut points: Vec<i64> = (0..4 * n as i64).collect();
    points.shuffle(rng);
    let intervals = (0..n)
        .map(|i| {
            let (a, b) = (points[2 * i], points[2 * i + 1]);
            let den = rng.gen_range(1..=3);
            (num_rational::Ratio::new(a.min(b), den), num_rational::Ratio::new(a.max(b), den))
        })
        .collect::<Vec<_>>();
    // Rescaling by different denominators can collide; redraw then.
    IntervalModel::new(intervals).unwrap_or_else(|_| random_model(rng, n))
}

fn criterion_7() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=7);
        let w = uniform_word(&mut rng, n, 2);
        let m = models::word_to_intervals(&w).map_err(|e| e.to_string())?;
        ensure(overlap_graph(&m) == oracle(&w, n, 1), || format!("intervals of {w}"))?;
        ensure(models::interval_to_word(&m) == w, || format!("round trip of {w}"))?;
    }
    for _ in 0..1000 {
        let n = rng.gen_range(1..=7);
        let m = random_model(&mut rng, n);
        let w = models::interval_to_word(&m);
        ensure(w.is_uniform() == Some(2), || "endpoint word is not 2-uniform".into())?;
        ensure(oracle(&w, n, 1) == overlap_graph(&m), || format!("model word {w}"))?;
        ensure(overlap_graph(&models::word_to_intervals(&w).unwrap()) == overlap_graph(&m), || {
            "model round trip".into()
        })?;
    }
    let mut placements = 0;
    for r in [3usize, 4] {
        let level = 2 * r as u32 - 3;
        for _ in 0..500 {
            let n = rng.gen_range(1..=6);
            let w = uniform_word(&mut rng, n, r);
            let m = models::runiform_to_intervals(&w, r).map_err(|e| e.to_string())?;
            ensure(overlap_graph(&m) == oracle(&w, n, level), || format!("{r}-uniform {w}"))?;

            let m = random_model(&mut rng, n);
            let want = overlap_graph(&m);
            let first = models::intervals_to_runiform(&m, r).unwrap();
            ensure(first.is_uniform() == Some(r), || "not r-uniform".into())?;
            ensure(oracle(&first, n, level) == want, || format!("default placement {first}"))?;
            for _ in 0..4 {
                let seed: u64 = rng.gen();
                let mut pick_rng = ChaCha8Rng::seed_from_u64(seed);
                let other = models::intervals_to_runiform_with(&m, r, |_, lo, hi| pick_rng.gen_range(lo..=hi)).unwrap();
                ensure(oracle(&other, n, level) == want, || format!("placement {other}"))?;
                placements += 1;
            }
        }
    }
    Ok(format!("1000 words, 1000 models, r in {{3,4}} with {placements} random placements"))
}

fn arrangements(counts: &mut [usize], acc: &mut Vec<Letter>, out: &mut Vec<Vec<Letter>>) {
    if counts.iter().all(|&c| c == 0) {
        out.push(acc.clone());
        return;
    }
    for i in 0..counts.len() {
        if counts[i] > 0 {
            counts[i] -= 1;
            acc.push(l(i));
            arrangements(counts, acc, out);
            acc.pop();
            counts[i] += 1;
        }
    }
}

fn check_coloring(c: &Coloring) -> Result<(), String> {
    let (n, r) = (c.n(), c.r());
    let w = c.word();
    let pos: Vec<Vec<usize>> = (0..n).map(|i| c.positions(l(i))).collect();
    for i in 0..n {
        for j in i + 1..n {
            let x = chord_crossings(&pos[i], &pos[j]).unwrap();
            ensure(x <= 2 * r - 3, || format!("{x} crossings in {w}"))?;
        }
    }
    for m in 1..=2 * r - 3 {
        let g = m_intersection_graph(c, m).unwrap();
        ensure(g == oracle(&w, n, (2 * r - 3 - m) as u32), || format!("m={m} for {w}"))?;
    }
    Ok(())
}

fn criterion_8() -> Check {
    let mut exhaustive = 0;
    for (n, r) in [(2usize, 2usize), (2, 3), (3, 2)] {
        let mut all = Vec::new();
        arrangements(&mut vec![r; n], &mut Vec::new(), &mut all);
        for seq in all {
            check_coloring(&Coloring::new(n, r, seq).unwrap())?;
            exhaustive += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=6);
        let r = rng.gen_range(2..=4);
        let c = Coloring::from_word(&uniform_word(&mut rng, n, r)).unwrap();
        check_coloring(&c)?;
    }
    Ok(format!("{exhaustive} exhaustive and 10000 random colorings"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("golden words", criterion_1),
        ("universal level-2 sweep, n = 6", criterion_2),
        ("connected level-2 sweep, n <= 6", criterion_3),
        ("W5 has no 2-uniform 0-representant", criterion_4),
        ("construction suites", criterion_5),
        ("level-shift, restriction and cyclic-shift laws", criterion_6),
        ("interval equivalence", criterion_7),
        ("geometry equivalence", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {} PASS {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} FAIL {name}: {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
