use std::sync::atomic::AtomicUsize;

use wordrep_core::search::{
    find_representant, find_uniform, min_level, permutational_representant, transitive_orientation, Outcome,
    SearchBudget, Sequential, UnitJob, UnitResult, UnitRunner,
};
use wordrep_core::{graph_of_word, verify, Graph, Letter, Word};

fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    (0..1u64 << (n * (n - 1) / 2)).map(move |m| Graph::from_mask(n, m))
}

fn found(o: &Outcome) -> Option<bool> {
    match o {
        Outcome::Found(_) => Some(true),
        Outcome::ProvedAbsent => Some(false),
        Outcome::BudgetExhausted => None,
    }
}

/// Every word with `t` copies of each of `n` letters.
fn uniform_words(n: usize, t: usize) -> Vec<Word> {
    fn go(rem: &mut [usize], acc: &mut Vec<Letter>, out: &mut Vec<Word>) {
        if rem.iter().all(|&r| r == 0) {
            out.push(Word::new(acc.clone()));
            return;
        }
        for i in 0..rem.len() {
            if rem[i] > 0 {
                rem[i] -= 1;
                acc.push(Letter::from_index(i));
                go(rem, acc, out);
                acc.pop();
                rem[i] += 1;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut vec![t; n], &mut Vec::new(), &mut out);
    out
}

#[test]
fn pruning_and_symmetry_reduction_do_not_change_answers() {
    let base = SearchBudget { max_copies_per_letter: 2, node_limit: u64::MAX, ..SearchBudget::default() };
    let variants: Vec<SearchBudget> = [(true, true), (true, false), (false, true), (false, false)]
        .into_iter()
        .map(|(canonical, pruning)| SearchBudget { canonical, pruning, ..base.clone() })
        .collect();
    for n in 1..=4 {
        for g in all_graphs(n) {
            for k in 0..=1 {
                let answers: Vec<Option<bool>> = variants
                    .iter()
                    .map(|b| {
                        let r = find_uniform(&g, k, 2, b, &Sequential).unwrap();
                        if let Some(w) = r.word() {
                            assert!(verify(w, &g, k).unwrap().is_pass());
                        }
                        found(&r.outcome)
                    })
                    .collect();
                assert!(answers.iter().all(|a| *a == answers[0]), "n {n} k {k} {:?}: {answers:?}", g.edges());
            }
        }
    }
}

#[test]
fn uniform_search_matches_enumeration() {
    let budget = SearchBudget { node_limit: u64::MAX, ..SearchBudget::default() };
    for (n, t) in [(2, 3), (3, 2), (4, 2), (3, 3)] {
        let words = uniform_words(n, t);
        for g in all_graphs(n) {
            for k in 0..=2 {
                let exists = words.iter().any(|w| graph_of_word(w, k).unwrap() == g);
                let r = find_uniform(&g, k, t, &budget, &Sequential).unwrap();
                assert_eq!(found(&r.outcome), Some(exists), "n {n} t {t} k {k} {:?}", g.edges());
            }
        }
    }
}

#[test]
fn other_families_are_sound_and_agree_without_pruning() {
    for (uniform_only, permutational_only) in [(false, false), (false, true)] {
        let b = SearchBudget {
            max_copies_per_letter: 2,
            uniform_only,
            permutational_only,
            node_limit: u64::MAX,
            ..SearchBudget::default()
        };
        let plain = SearchBudget { pruning: false, canonical: false, ..b.clone() };
        for n in 1..=3 {
            for g in all_graphs(n) {
                for k in 0..=1 {
                    let r = find_representant(&g, k, &b, &Sequential).unwrap();
                    if let Some(w) = r.word() {
                        assert!(verify(w, &g, k).unwrap().is_pass());
                        if permutational_only {
                            assert!(w.is_permutational().is_some());
                        }
                    }
                    let p = find_representant(&g, k, &plain, &Sequential).unwrap();
                    assert_eq!(found(&r.outcome), found(&p.outcome));
                }
            }
        }
    }
}

/// Runs units last to first, with no early exit, to check that the result
/// does not depend on scheduling.
struct Backwards;

impl UnitRunner for Backwards {
    fn run(&self, units: usize, limit: u64, job: &UnitJob<'_>) -> Vec<Option<UnitResult>> {
        let stop = AtomicUsize::new(usize::MAX);
        let mut out: Vec<Option<UnitResult>> = (0..units).rev().map(|i| Some(job(i, limit, &stop))).collect();
        out.reverse();
        out
    }
}

#[test]
fn scheduling_does_not_change_reports() {
    let budgets = [
        SearchBudget { max_copies_per_letter: 3, ..SearchBudget::default() },
        SearchBudget { max_copies_per_letter: 3, node_limit: 2000, ..SearchBudget::default() },
        SearchBudget { max_copies_per_letter: 2, uniform_only: false, ..SearchBudget::default() },
    ];
    for g in [Graph::wheel(5).unwrap(), Graph::cycle(5).unwrap(), Graph::path(5).unwrap()] {
        for b in &budgets {
            for k in 0..=1 {
                let a = find_representant(&g, k, b, &Sequential).unwrap();
                let c = find_representant(&g, k, b, &Backwards).unwrap();
                assert_eq!(a, c);
            }
        }
    }
}

#[test]
fn tiny_budget_is_exhausted() {
    let b = SearchBudget { node_limit: 10, ..SearchBudget::default() };
    let r = find_representant(&Graph::wheel(5).unwrap(), 1, &b, &Sequential).unwrap();
    assert_eq!(r.outcome, Outcome::BudgetExhausted);
    assert!(r.nodes_expanded <= 10);
}

#[test]
fn four_cycle_and_wheel() {
    let b = SearchBudget { max_copies_per_letter: 2, ..SearchBudget::default() };
    let c4 = Graph::cycle(4).unwrap();
    let r = find_uniform(&c4, 0, 2, &b, &Sequential).unwrap();
    assert!(verify(r.word().unwrap(), &c4, 0).unwrap().is_pass());
    let w5 = Graph::wheel(5).unwrap();
    let b3 = SearchBudget { max_copies_per_letter: 3, ..SearchBudget::default() };
    let r = find_uniform(&w5, 1, 3, &b3, &Sequential).unwrap();
    assert!(verify(r.word().unwrap(), &w5, 1).unwrap().is_pass());
}

#[test]
fn every_small_graph_has_level_at_most_two() {
    let b = SearchBudget { max_copies_per_letter: 2, node_limit: 100_000, ..SearchBudget::default() };
    for n in 2..=5 {
        for g in all_graphs(n) {
            let r = min_level(&g, &b, &Sequential).unwrap();
            assert!(r.level <= 2);
            assert!(verify(&r.word, &g, r.level).unwrap().is_pass());
        }
    }
}

#[test]
fn comparability_graphs_get_permutational_words() {
    for n in 1..=6 {
        for g in all_graphs(n) {
            match transitive_orientation(&g).unwrap() {
                Some(o) => {
                    assert!(o.is_transitive());
                    let w = permutational_representant(&g).unwrap();
                    assert!(w.is_permutational().is_some());
                    assert!(verify(&w, &g, 0).unwrap().is_pass());
                }
                None => assert!(permutational_representant(&g).is_err()),
            }
        }
    }
}
