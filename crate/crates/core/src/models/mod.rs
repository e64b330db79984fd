//! Geometric models whose intersection graphs are represented by words:
//! interval models, chord diagrams and convex piecewise linear curves.

pub mod geometry;
pub mod interval;

pub use geometry::{chord_crossings, m_intersection_graph, Coloring};
pub use interval::{
    interval_to_word, intervals_to_runiform, intervals_to_runiform_with, runiform_to_intervals, word_to_intervals,
    Endpoint, IntervalModel,
};
