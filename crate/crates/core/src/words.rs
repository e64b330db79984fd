//! Word primitives.
//!
//! A word is a finite sequence of positive integer letters. Everything in
//! this crate is ultimately a transformation of words, so the primitives here
//! are deliberately total: empty words are legal values, and only the
//! operations that need a letter to exist reject them.
//!
//! Text form: whitespace-separated decimal letters. A standalone `/` token is
//! a block separator used when printing permutational words; it carries no
//! meaning and is skipped when parsing.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::num::NonZeroU32;
use core::str::FromStr;

use crate::error::{Error, Result};

/// A vertex name. Letters are 1-based.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter(NonZeroU32);

impl Letter {
    pub fn new(value: u32) -> Option<Self> {
        NonZeroU32::new(value).map(Letter)
    }

    pub const fn get(self) -> u32 {
        self.0.get()
    }

    /// Zero-based index, `letter - 1`.
    #[inline]
    pub fn index(self) -> usize {
        (self.0.get() - 1) as usize
    }

    /// Inverse of [`Letter::index`].
    #[inline]
    pub fn from_index(index: usize) -> Self {
        Letter(NonZeroU32::new(index as u32 + 1).expect("index overflow"))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    pub fn empty() -> Self {
        Word::default()
    }

    pub fn from_values(values: &[u32]) -> Result<Self> {
        values
            .iter()
            .map(|&v| Letter::new(v).ok_or_else(|| Error::Parse(format!("letter must be positive, got {v}"))))
            .collect::<Result<Vec<_>>>()
            .map(Word::new)
    }

    /// Parses a run of single digits such as `14213243`. Only usable for
    /// alphabets within `1..=9`; whitespace is ignored.
    pub fn from_compact(text: &str) -> Result<Self> {
        text.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c.to_digit(10).and_then(Letter::new) {
                Some(l) => Ok(l),
                None => Err(Error::Parse(format!("expected a digit 1-9, got {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word::new)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = Letter> + ExactSizeIterator + '_ {
        self.letters.iter().copied()
    }

    pub fn first(&self) -> Option<Letter> {
        self.letters.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.letters.last().copied()
    }

    pub fn push(&mut self, letter: Letter) {
        self.letters.push(letter);
    }

    pub fn extend_from(&mut self, other: &Word) {
        self.letters.extend_from_slice(&other.letters);
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn repeat(&self, times: usize) -> Word {
        Word { letters: self.letters.repeat(times) }
    }

    pub fn alphabet(&self) -> BTreeSet<Letter> {
        self.letters.iter().copied().collect()
    }

    pub fn contains(&self, letter: Letter) -> bool {
        self.letters.contains(&letter)
    }

    pub fn max_letter(&self) -> Option<Letter> {
        self.letters.iter().copied().max()
    }

    pub fn occurrences(&self, letter: Letter) -> usize {
        self.letters.iter().filter(|&&l| l == letter).count()
    }

    pub fn multiplicities(&self) -> BTreeMap<Letter, usize> {
        let mut m = BTreeMap::new();
        for &l in &self.letters {
            *m.entry(l).or_insert(0) += 1;
        }
        m
    }

    /// Returns `Some(n)` when the alphabet is exactly `{1, ..., n}`.
    pub fn standard_size(&self) -> Option<usize> {
        let n = self.max_letter()?.get() as usize;
        let mut seen = alloc::vec![false; n];
        for l in &self.letters {
            seen[l.index()] = true;
        }
        seen.iter().all(|&s| s).then_some(n)
    }

    /// The subsequence of letters in `set`, order preserved.
    pub fn restrict(&self, set: &[Letter]) -> Word {
        self.restrict_by(|l| set.contains(&l))
    }

    pub fn restrict_by(&self, mut keep: impl FnMut(Letter) -> bool) -> Word {
        Word { letters: self.letters.iter().copied().filter(|&l| keep(l)).collect() }
    }

    /// Leftmost occurrences of each letter, in order.
    pub fn initial_permutation(&self) -> Result<Word> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(first_occurrences(self.letters.iter().copied()))
    }

    /// Rightmost occurrences of each letter, in order.
    pub fn final_permutation(&self) -> Result<Word> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        let mut w = first_occurrences(self.letters.iter().rev().copied());
        w.letters.reverse();
        Ok(w)
    }

    pub fn reverse(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word { letters }
    }

    /// Number of adjacent equal pairs in the subword induced by `{x, y}`,
    /// i.e. occurrences of the factors `xx` and `yy` there.
    pub fn count_pattern11(&self, x: Letter, y: Letter) -> Result<usize> {
        if x == y {
            return Err(Error::SameLetter(x));
        }
        let mut prev = None;
        let mut count = 0;
        for l in self.iter().filter(|&l| l == x || l == y) {
            if prev == Some(l) {
                count += 1;
            }
            prev = Some(l);
        }
        Ok(count)
    }

    /// `Some(t)` if every letter occurs exactly `t` times.
    pub fn is_uniform(&self) -> Option<usize> {
        let m = self.multiplicities();
        let t = *m.values().next()?;
        m.values().all(|&c| c == t).then_some(t)
    }

    /// If `self = uv` with `|u| = split`, returns `vu`.
    pub fn cyclic_shift(&self, split: usize) -> Result<Word> {
        if split > self.len() {
            return Err(Error::SplitOutOfRange { split, len: self.len() });
        }
        let mut letters = self.letters.clone();
        letters.rotate_left(split);
        Ok(Word { letters })
    }

    /// Number of blocks if the word is a concatenation of permutations of
    /// its alphabet.
    pub fn is_permutational(&self) -> Option<usize> {
        let n = self.alphabet().len();
        if n == 0 || !self.len().is_multiple_of(n) {
            return None;
        }
        let perm = |chunk: &[Letter]| {
            let mut set: Vec<Letter> = chunk.to_vec();
            set.sort_unstable();
            set.windows(2).all(|p| p[0] != p[1])
        };
        self.letters.chunks(n).all(perm).then_some(self.len() / n)
    }

    /// Splits a permutational word into its blocks.
    pub fn blocks(&self) -> Result<Vec<Word>> {
        self.is_permutational().ok_or(Error::NotPermutational)?;
        let n = self.alphabet().len();
        Ok(self.letters.chunks(n).map(|c| Word { letters: c.to_vec() }).collect())
    }

    pub fn relabel(&self, mut map: impl FnMut(Letter) -> Letter) -> Word {
        Word { letters: self.letters.iter().map(|&l| map(l)).collect() }
    }

    /// Relabels the alphabet onto `{1, ..., n}` preserving letter order and
    /// returns the map from new letters (by index) to the original ones.
    pub fn compact(&self) -> (Word, Vec<Letter>) {
        let originals: Vec<Letter> = self.alphabet().into_iter().collect();
        let w = self.relabel(|l| {
            let i = originals.binary_search(&l).expect("letter in alphabet");
            Letter::from_index(i)
        });
        (w, originals)
    }

    /// Display adapter putting ` / ` after every `block_len` letters.
    pub fn display_blocks(&self, block_len: usize) -> BlockDisplay<'_> {
        BlockDisplay { word: self, block_len }
    }
}

fn first_occurrences(it: impl Iterator<Item = Letter>) -> Word {
    let mut seen = BTreeSet::new();
    Word { letters: it.filter(|&l| seen.insert(l)).collect() }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word { letters }
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word { letters: iter.into_iter().collect() }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

pub struct BlockDisplay<'a> {
    word: &'a Word,
    block_len: usize,
}

impl fmt::Display for BlockDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.word.letters.iter().enumerate() {
            if i > 0 {
                if self.block_len > 0 && i % self.block_len == 0 {
                    f.write_str(" / ")?;
                } else {
                    f.write_str(" ")?;
                }
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split_whitespace()
            .filter(|tok| *tok != "/")
            .map(|tok| {
                tok.parse::<u32>().ok().and_then(Letter::new).ok_or_else(|| Error::Parse(format!("bad letter {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word::new)
    }
}
