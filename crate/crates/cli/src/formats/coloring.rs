//! A single line of `n * r` whitespace-separated labels in point order.

use wordrep_core::models::Coloring;
use wordrep_core::Word;

use crate::error::FormatError;

pub fn parse(text: &str, r: usize) -> Result<Coloring, FormatError> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let line = lines.next().ok_or(FormatError::Empty)?;
    if lines.next().is_some() {
        return Err(FormatError::line(2, "a coloring file holds a single line"));
    }
    let word: Word = line.parse()?;
    let n = word.standard_size().ok_or(wordrep_core::Error::AlphabetNotStandard)?;
    Ok(Coloring::new(n, r, word.into_letters())?)
}

pub fn serialize(c: &Coloring) -> String {
    format!("{}\n", c.word())
}
