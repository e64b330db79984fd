//! File formats, SVG output, a parallel search runner and the census
//! driver for the `wordrep` command-line tool.

pub mod census;
pub mod error;
pub mod formats;
pub mod parallel;
pub mod svg;

pub use error::FormatError;
pub use parallel::Parallel;
