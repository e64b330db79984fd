//! Classifies every labeled graph on `n` vertices (or a supplied list) and
//! writes one CSV row per graph.

use std::io::Write;

use rayon::prelude::*;
use wordrep_core::search::{census_graph, CensusRow, Qualifier, SearchBudget, Sequential};
use wordrep_core::Graph;

use crate::formats::graph6;

pub const MAX_N: usize = 7;

pub const HEADER: [&str; 7] = ["graph6", "n", "k_claimed", "qualifier", "witness_word", "family", "nodes_expanded"];

#[derive(Debug, thiserror::Error)]
pub enum CensusError {
    #[error("census supports at most {MAX_N} vertices, got {0}")]
    TooLarge(usize),
    #[error(transparent)]
    Core(#[from] wordrep_core::Error),
    #[error(transparent)]
    Format(#[from] crate::FormatError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

/// All labeled graphs on `n` vertices, in mask order.
pub fn labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>, CensusError> {
    if n > MAX_N {
        return Err(CensusError::TooLarge(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    Ok((0..1u64 << bits).map(move |mask| Graph::from_mask(n, mask)))
}

/// Rows in input order. Graphs are spread over `budget.worker_hint`
/// threads; each graph is searched sequentially, so the rows do not depend
/// on the thread count.
pub fn run(graphs: &[Graph], max_level: u32, budget: &SearchBudget) -> Result<Vec<CensusRow>, CensusError> {
    if let Some(g) = graphs.iter().find(|g| g.n() > MAX_N) {
        return Err(CensusError::TooLarge(g.n()));
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(budget.worker_hint.max(1)).build().expect("thread pool");
    let rows = pool.install(|| {
        graphs.par_iter().map(|g| census_graph(g, max_level, budget, &Sequential)).collect::<Result<Vec<_>, _>>()
    })?;
    Ok(rows)
}

pub fn write_csv(rows: &[CensusRow], out: impl Write) -> Result<(), CensusError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(HEADER)?;
    for row in rows {
        let level = row.level.map(|l| l.to_string()).unwrap_or_default();
        let witness = row.witness.as_ref().map(|w| w.to_string()).unwrap_or_default();
        let qualifier = match row.qualifier {
            Qualifier::Exact => "=".to_string(),
            q => q.to_string(),
        };
        w.write_record([
            graph6::serialize(&row.graph)?,
            row.graph.n().to_string(),
            level,
            qualifier,
            witness,
            row.family.clone(),
            row.nodes_expanded.to_string(),
        ])?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}
