//! Minimal levels, circle graph recognition and census rows.

use core::fmt;

use super::{find_representant, find_uniform, Outcome, SearchBudget, SearchReport, UnitRunner, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::universal::represent2;
use crate::words::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Qualifier {
    /// The level is the minimum.
    Exact,
    /// A representant exists at this level; lower levels were not ruled
    /// out.
    AtMost,
    /// Nothing up to the requested level within the family, which was
    /// searched completely.
    Absent,
    /// Nothing found before the budget ran out.
    Exhausted,
}

impl fmt::Display for Qualifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Qualifier::Exact => "=",
            Qualifier::AtMost => "≤",
            Qualifier::Absent => "absent",
            Qualifier::Exhausted => "exhausted",
        })
    }
}

#[derive(Clone, Debug)]
pub struct MinLevel {
    pub level: u32,
    pub qualifier: Qualifier,
    pub word: Word,
    /// Searches run at levels 0 and 1, in order.
    pub reports: alloc::vec::Vec<(u32, SearchReport)>,
}

/// The per-graph result of a census.
#[derive(Clone, Debug)]
pub struct CensusRow {
    pub graph: Graph,
    pub level: Option<u32>,
    pub qualifier: Qualifier,
    pub witness: Option<Word>,
    /// The search family that produced the verdict, or `universal`.
    pub family: alloc::string::String,
    pub nodes_expanded: u64,
}

fn level0_is_absolute(g: &Graph, report: &SearchReport) -> bool {
    report.outcome == Outcome::ProvedAbsent && report.family.covers_level0_bound(g.n(), g.clique_number())
}

/// Smallest level up to `max_level` at which the budget's family contains
/// a representant, falling back to the universal construction at level 2.
pub fn census_graph(g: &Graph, max_level: u32, budget: &SearchBudget, runner: &dyn UnitRunner) -> Result<CensusRow> {
    use alloc::string::ToString;
    let mut nodes = 0;
    let mut absolute_below = true;
    let mut last: Option<SearchReport> = None;
    for level in 0..=max_level.min(1) {
        let report = find_representant(g, level, budget, runner)?;
        nodes += report.nodes_expanded;
        if let Some(w) = report.word() {
            let qualifier = if absolute_below { Qualifier::Exact } else { Qualifier::AtMost };
            return Ok(CensusRow {
                graph: g.clone(),
                level: Some(level),
                qualifier,
                witness: Some(w.clone()),
                family: report.family.to_string(),
                nodes_expanded: nodes,
            });
        }
        absolute_below = level == 0 && level0_is_absolute(g, &report);
        last = Some(report);
    }
    if max_level >= 2 {
        let u = represent2(g)?;
        return Ok(CensusRow {
            graph: g.clone(),
            level: Some(2),
            qualifier: Qualifier::AtMost,
            witness: Some(u.word.to_word()),
            family: "universal".to_string(),
            nodes_expanded: nodes,
        });
    }
    let last = last.expect("level 0 is always searched");
    let qualifier = match last.outcome {
        Outcome::ProvedAbsent => Qualifier::Absent,
        _ => Qualifier::Exhausted,
    };
    Ok(CensusRow {
        graph: g.clone(),
        level: None,
        qualifier,
        witness: None,
        family: last.family.to_string(),
        nodes_expanded: nodes,
    })
}

/// Smallest level with a representant, searching levels 0 and 1 and using
/// the universal construction for level 2. Level 1 is exact only when
/// level 0 was ruled out absolutely.
pub fn min_level(g: &Graph, budget: &SearchBudget, runner: &dyn UnitRunner) -> Result<MinLevel> {
    if g.n() < 2 {
        return Err(Error::GraphTooSmall { n: g.n(), min: 2 });
    }
    let mut reports = alloc::vec::Vec::new();
    let r0 = find_representant(g, 0, budget, runner)?;
    if let Some(w) = r0.word() {
        let word = w.clone();
        reports.push((0, r0));
        return Ok(MinLevel { level: 0, qualifier: Qualifier::Exact, word, reports });
    }
    let absolute = level0_is_absolute(g, &r0);
    reports.push((0, r0));
    let r1 = find_representant(g, 1, budget, runner)?;
    if let Some(w) = r1.word() {
        let word = w.clone();
        reports.push((1, r1));
        let qualifier = if absolute { Qualifier::Exact } else { Qualifier::AtMost };
        return Ok(MinLevel { level: 1, qualifier, word, reports });
    }
    reports.push((1, r1));
    let u = represent2(g)?;
    Ok(MinLevel { level: 2, qualifier: Qualifier::AtMost, word: u.word.to_word(), reports })
}

/// Circle graphs are exactly the graphs with a 2-uniform 0-11-representant;
/// decided by exhaustive search.
pub fn is_circle_graph(g: &Graph) -> Result<bool> {
    is_circle_graph_with(g, DEFAULT_CAP, &super::Sequential)
}

pub fn is_circle_graph_with(g: &Graph, cap: usize, runner: &dyn UnitRunner) -> Result<bool> {
    if g.n() > cap {
        return Err(Error::CapExceeded { n: g.n(), cap });
    }
    if g.n() == 0 {
        return Ok(true);
    }
    let budget = SearchBudget { max_copies_per_letter: 2, node_limit: u64::MAX, ..SearchBudget::default() };
    let report = find_uniform(g, 0, 2, &budget, runner)?;
    match report.outcome {
        Outcome::Found(_) => Ok(true),
        Outcome::ProvedAbsent => Ok(false),
        Outcome::BudgetExhausted => unreachable!("unlimited budget"),
    }
}
