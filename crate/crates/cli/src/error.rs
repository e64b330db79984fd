use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("empty input")]
    Empty,
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("graph6: {0}")]
    Graph6(&'static str),
    #[error(transparent)]
    Core(#[from] wordrep_core::Error),
}

impl FormatError {
    pub(crate) fn line(line: usize, msg: impl Into<String>) -> Self {
        FormatError::Line { line, msg: msg.into() }
    }
}
