//! Graphs represented by words through counts of the pattern `11`.
//!
//! A word `w` over `{1, ..., n}` `k`-11-represents the graph on `{1, ..., n}`
//! in which `x` and `y` are adjacent iff the subword of `w` induced by
//! `{x, y}` contains at most `k` factors `xx` or `yy`.
//!
//! The crate is `no_std` with `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod constructions;
pub mod error;
pub mod graphs;
pub mod models;
pub mod repr;
pub mod search;
pub mod universal;
pub mod words;

pub use error::{Error, Result};
pub use graphs::{Graph, IdMap};
pub use repr::{graph_of_word, verify, PairCounts, ReprClaim, Verdict, Violation};
pub use words::{Letter, Word};
