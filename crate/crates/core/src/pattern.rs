//! Classical pattern occurrence and the Motzkin-permutation condition.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A permutation read as a classical pattern.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pattern(Permutation);

impl Pattern {
    pub fn new(word: Permutation) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::InvalidArgument("empty pattern".into()));
        }
        Ok(Self(word))
    }

    /// The six patterns of length three, in lexicographic order.
    pub fn length_three() -> Vec<Pattern> {
        ["123", "132", "213", "231", "312", "321"].iter().map(|s| s.parse().unwrap()).collect()
    }

    pub fn word(&self) -> &[u8] {
        self.0.word()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn as_permutation(&self) -> &Permutation {
        &self.0
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Pattern::new(s.parse()?)
    }
}

/// Zero, one or two distinct patterns, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PatternSet {
    patterns: Vec<Pattern>,
}

impl PatternSet {
    pub const MAX_PATTERNS: usize = 2;

    pub fn new(mut patterns: Vec<Pattern>) -> Result<Self> {
        patterns.sort();
        if patterns.len() > Self::MAX_PATTERNS {
            return Err(Error::InvalidPatternSet(format!(
                "at most {} patterns, got {}",
                Self::MAX_PATTERNS,
                patterns.len()
            )));
        }
        if patterns.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidPatternSet(format!("repeated pattern {}", patterns[0])));
        }
        Ok(Self { patterns })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn single(p: Pattern) -> Self {
        Self { patterns: vec![p] }
    }

    /// Parses e.g. `"231,213"` or `"213+231"`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "none" {
            return Ok(Self::empty());
        }
        let patterns = s.split([',', '+']).map(|t| t.trim().parse::<Pattern>()).collect::<Result<Vec<_>>>()?;
        Self::new(patterns)
    }

    pub fn patterns(&self) -> &[Pattern] {
        &self.patterns
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    /// The six single-pattern sets of length three.
    pub fn singles() -> Vec<PatternSet> {
        Pattern::length_three().into_iter().map(PatternSet::single).collect()
    }

    /// The fifteen pairs of distinct length-three patterns.
    pub fn pairs() -> Vec<PatternSet> {
        Pattern::length_three()
            .into_iter()
            .tuple_combinations()
            .map(|(a, b)| PatternSet { patterns: vec![a, b] })
            .collect()
    }

    /// `p` contains none of the patterns.
    pub fn avoided_by(&self, p: &Permutation) -> bool {
        self.patterns.iter().all(|t| !p.contains(t))
    }
}

/// Smaller sets first, then lexicographic on the sorted patterns.
impl Ord for PatternSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.patterns.len().cmp(&other.patterns.len()).then_with(|| self.patterns.cmp(&other.patterns))
    }
}

impl PartialOrd for PatternSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `213+231`; the empty set prints as `none`.
impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.patterns.is_empty() {
            return f.write_str("none");
        }
        let parts: Vec<String> = self.patterns.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join("+"))
    }
}

impl FromStr for PatternSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PatternSet::parse(s)
    }
}

impl Permutation {
    /// True iff some subsequence is order-isomorphic to `t`.
    pub fn contains(&self, t: &Pattern) -> bool {
        if t.len() == 3 {
            contains_len3(self.word(), t.word())
        } else {
            contains_by_definition(self.word(), t.word())
        }
    }

    pub fn avoids(&self, t: &Pattern) -> bool {
        !self.contains(t)
    }

    /// Number of index sets whose subsequence is order-isomorphic to `t`.
    pub fn count_occurrences(&self, t: &Pattern) -> usize {
        let w = self.word();
        let pat = t.word();
        if pat.len() == 3 {
            let mut count = 0;
            for i in 0..w.len() {
                for j in i + 1..w.len() {
                    for k in j + 1..w.len() {
                        if order_isomorphic(&[w[i], w[j], w[k]], pat) {
                            count += 1;
                        }
                    }
                }
            }
            count
        } else {
            (0..w.len())
                .combinations(pat.len())
                .filter(|idx| {
                    let vals: Vec<u8> = idx.iter().map(|&i| w[i]).collect();
                    order_isomorphic(&vals, pat)
                })
                .count()
        }
    }

    /// Avoids 132 and has no `i < j` with `σ(i) < σ(j) < σ(j+1)`.
    pub fn is_motzkin(&self) -> bool {
        let w = self.word();
        let n = w.len();
        for j in 1..n.saturating_sub(1) {
            if w[j] < w[j + 1] && w[..j].iter().any(|&a| a < w[j]) {
                return false;
            }
        }
        !self.contains(&"132".parse().unwrap())
    }
}

/// Same relative order, compared pairwise.
pub fn order_isomorphic(values: &[u8], pattern: &[u8]) -> bool {
    values.len() == pattern.len()
        && (0..values.len())
            .all(|i| (i + 1..values.len()).all(|j| (values[i] < values[j]) == (pattern[i] < pattern[j])))
}

/// Definitional scan over every index subset of the pattern's length.
pub fn contains_by_definition(word: &[u8], pattern: &[u8]) -> bool {
    (0..word.len()).combinations(pattern.len()).any(|idx| {
        let vals: Vec<u8> = idx.iter().map(|&i| word[i]).collect();
        order_isomorphic(&vals, pattern)
    })
}

// For each middle index, keep the extreme admissible values on each side.
fn contains_len3(w: &[u8], t: &[u8]) -> bool {
    let first_below_mid = t[0] < t[1];
    let last_below_mid = t[2] < t[1];
    let first_below_last = t[0] < t[2];
    for j in 1..w.len().saturating_sub(1) {
        let mid = w[j];
        let left = w[..j].iter().filter(|&&a| (a < mid) == first_below_mid);
        let right = w[j + 1..].iter().filter(|&&c| (c < mid) == last_below_mid);
        let hit = if first_below_last {
            match (left.min(), right.max()) {
                (Some(a), Some(c)) => a < c,
                _ => false,
            }
        } else {
            match (left.max(), right.min()) {
                (Some(a), Some(c)) => a > c,
                _ => false,
            }
        };
        if hit {
            return true;
        }
    }
    false
}

/// True iff an occurrence of `pattern` uses the last entry of `word`.
///
/// Used for prefix pruning: if `word[..len-1]` avoids the pattern then
/// `word` avoids it exactly when this returns false.
pub fn ends_with_occurrence(word: &[u8], pattern: &[u8]) -> bool {
    let Some((&last, rest)) = word.split_last() else {
        return false;
    };
    if pattern.len() == 3 {
        let mid_below_last = pattern[1] < pattern[2];
        let first_below_mid = pattern[0] < pattern[1];
        let first_below_last = pattern[0] < pattern[2];
        for j in 1..rest.len() {
            let mid = rest[j];
            if (mid < last) != mid_below_last {
                continue;
            }
            if rest[..j].iter().any(|&a| (a < mid) == first_below_mid && (a < last) == first_below_last) {
                return true;
            }
        }
        false
    } else {
        let k = pattern.len();
        if k > word.len() {
            return false;
        }
        (0..rest.len()).combinations(k - 1).any(|idx| {
            let mut vals: Vec<u8> = idx.iter().map(|&i| rest[i]).collect();
            vals.push(last);
            order_isomorphic(&vals, pattern)
        })
    }
}
