//! Permutations in one-line notation.
//!
//! A [`Permutation`] of length `n` stores the word `σ(1)σ(2)⋯σ(n)` as bytes,
//! so lengths are limited to 255. Two text forms are supported: compact
//! digits (`139278456`, only for `n ≤ 9`) and comma-separated
//! (`1,3,9,2,7,8,4,5,6`, any `n`).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::runs::RunDecomposition;

/// Longest word that can be represented.
pub const MAX_LEN: usize = u8::MAX as usize;

/// A rearrangement of `1..=n`. The empty permutation (`n = 0`) is allowed
/// as a convention for maps that drop an element.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Permutation {
    word: Vec<u8>,
}

impl Permutation {
    pub fn new(word: Vec<u8>) -> Result<Self> {
        let n = word.len();
        if n > MAX_LEN {
            return Err(Error::InvalidPermutation(format!("length {n} exceeds {MAX_LEN}")));
        }
        let mut seen = vec![false; n + 1];
        for &v in &word {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(join_comma(&word)));
            }
            seen[v] = true;
        }
        Ok(Self { word })
    }

    /// Wraps a word known to be a permutation. Only for internal callers
    /// that construct the word by a bijective rule.
    pub(crate) fn from_word_unchecked(word: Vec<u8>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok(), "{word:?}");
        Self { word }
    }

    pub fn empty() -> Self {
        Self { word: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_LEN);
        Self { word: (1..=n as u8).collect() }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// The one-line word, 0-indexed: `word()[i]` is `σ(i + 1)`.
    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn into_word(self) -> Vec<u8> {
        self.word
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// 0-indexed position of value `v`.
    pub fn position_of(&self, v: u8) -> Option<usize> {
        self.word.iter().position(|&x| x == v)
    }

    pub fn reversed(&self) -> Self {
        let mut word = self.word.clone();
        word.reverse();
        Self { word }
    }

    pub fn starts_with(&self, prefix: &[u8]) -> bool {
        self.word.starts_with(prefix)
    }

    /// Number of pairs `i < j` with `σ(i) > σ(j)`.
    pub fn inversions(&self) -> usize {
        let w = &self.word;
        (0..w.len()).map(|i| w[i + 1..].iter().filter(|&&b| b < w[i]).count()).sum()
    }

    /// Maximal ascending runs, left to right.
    pub fn runs(&self) -> RunDecomposition {
        RunDecomposition::of(self)
    }

    /// Number of maximal ascending runs (0 for the empty permutation).
    pub fn run_count(&self) -> usize {
        if self.word.is_empty() {
            0
        } else {
            1 + self.word.windows(2).filter(|w| w[0] > w[1]).count()
        }
    }

    /// True iff the starting points of the runs increase from left to right.
    pub fn is_flattened(&self) -> bool {
        let mut last_start = 0u8;
        for (i, &v) in self.word.iter().enumerate() {
            if i == 0 || self.word[i - 1] > v {
                if v <= last_start {
                    return false;
                }
                last_start = v;
            }
        }
        true
    }

    /// Compact digit form; `None` when `n > 9`.
    pub fn to_compact(&self) -> Option<String> {
        if self.word.len() > 9 {
            return None;
        }
        Some(self.word.iter().map(|&v| char::from(b'0' + v)).collect())
    }

    pub fn to_comma(&self) -> String {
        join_comma(&self.word)
    }

    /// Parses the comma form only (`"1,3,2"`). The empty string is the
    /// empty permutation.
    pub fn parse_comma(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let word = s
            .split(',')
            .map(|tok| {
                tok.trim().parse::<u8>().map_err(|e| Error::Parse { input: s.to_string(), reason: e.to_string() })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(word)
    }

    /// Parses the compact digit form only (`"132"`).
    pub fn parse_compact(s: &str) -> Result<Self> {
        let s = s.trim();
        let word = s
            .chars()
            .map(|c| match c.to_digit(10) {
                Some(d) if d > 0 => Ok(d as u8),
                _ => Err(Error::Parse { input: s.to_string(), reason: format!("unexpected character {c:?}") }),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(word)
    }
}

fn join_comma(word: &[u8]) -> String {
    let parts: Vec<String> = word.iter().map(|v| v.to_string()).collect();
    parts.join(",")
}

/// Compact form when `n ≤ 9`, comma form otherwise.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_compact() {
            Some(s) => f.write_str(&s),
            None => f.write_str(&self.to_comma()),
        }
    }
}

/// Accepts either form; a comma anywhere selects the comma form.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.contains(',') {
            Self::parse_comma(s)
        } else {
            Self::parse_compact(s)
        }
    }
}

impl TryFrom<Vec<u8>> for Permutation {
    type Error = Error;

    fn try_from(word: Vec<u8>) -> Result<Self> {
        Self::new(word)
    }
}

impl AsRef<[u8]> for Permutation {
    fn as_ref(&self) -> &[u8] {
        &self.word
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Replaces each entry of a word of distinct values by its rank, giving the
/// order-isomorphic permutation of `1..=len`.
pub fn standardize<T: Ord>(word: &[T]) -> Result<Permutation> {
    if word.len() > MAX_LEN {
        return Err(Error::InvalidArgument(format!("word longer than {MAX_LEN}")));
    }
    let mut order: Vec<usize> = (0..word.len()).collect();
    order.sort_by(|&a, &b| word[a].cmp(&word[b]));
    if order.windows(2).any(|w| word[w[0]] == word[w[1]]) {
        return Err(Error::RepeatedEntry(format!("{} entries", word.len())));
    }
    let mut out = vec![0u8; word.len()];
    for (rank, &pos) in order.iter().enumerate() {
        out[pos] = (rank + 1) as u8;
    }
    Ok(Permutation::from_word_unchecked(out))
}
