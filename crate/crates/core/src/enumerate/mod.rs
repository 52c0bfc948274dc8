//! Generation and counting of flattened partitions and pattern classes.
//!
//! Two independent routes exist for every class:
//!
//! * the *direct* generator builds words left to right. For flattened
//!   partitions the next entry is either any unused value above the current
//!   one (the run continues) or, when it is below the current value, the
//!   smallest unused value (a new run starts). Prefixes that already contain
//!   a forbidden pattern are pruned.
//! * the *brute-force* filter walks all `n!` permutations and keeps those
//!   passing [`Permutation::is_flattened`] and [`PatternSet::avoided_by`].
//!
//! Both emit permutations in lexicographic order.

mod structure;
mod table;

pub use structure::{compose_213, decompose_213, first_run_length_table, split_at_max, PQDecomposition, SplitAtMax};
pub use table::{CountTable, Method};

use crate::error::{guard, Error, Result};
use crate::pattern::{ends_with_occurrence, PatternSet};
use crate::perm::Permutation;

/// Size guards for the exhaustive routes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` for anything that walks all `n!` permutations.
    pub brute_max: usize,
    /// Largest `n` for the pruned direct generators.
    pub direct_max: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self { brute_max: 10, direct_max: 16 }
    }
}

impl Limits {
    pub fn all_permutations(&self, n: usize) -> Result<AllPermutations> {
        guard("all_permutations", n, 1, self.brute_max)?;
        Ok(AllPermutations::new(n))
    }

    pub fn all_flattened(&self, n: usize) -> Result<Walk> {
        self.enumerate_avoiding(n, &PatternSet::empty())
    }

    pub fn enumerate_avoiding(&self, n: usize, ps: &PatternSet) -> Result<Walk> {
        guard("enumerate_avoiding", n, 1, self.direct_max)?;
        Ok(Walk::new(n, ps, true))
    }

    pub fn count_avoiding(&self, n: usize, ps: &PatternSet) -> Result<u64> {
        Ok(self.enumerate_avoiding(n, ps)?.count_remaining())
    }

    /// Flattened partitions avoiding `ps`, by filtering all permutations.
    pub fn brute_force_avoiding(&self, n: usize, ps: &PatternSet) -> Result<Vec<Permutation>> {
        Ok(self.all_permutations(n)?.filter(|p| p.is_flattened() && ps.avoided_by(p)).collect())
    }

    /// All permutations of `1..=n` (flattened or not) avoiding `ps`.
    /// `n = 0` yields the empty permutation once.
    pub fn avoiding_permutations(&self, n: usize, ps: &PatternSet) -> Result<Walk> {
        guard("avoiding_permutations", n, 0, self.direct_max)?;
        Ok(Walk::new(n, ps, false))
    }

    /// Motzkin permutations of length `n`.
    pub fn motzkin_permutations(&self, n: usize) -> Result<Vec<Permutation>> {
        let ps = PatternSet::parse("132")?;
        Ok(self.avoiding_permutations(n, &ps)?.filter(Permutation::is_motzkin).collect())
    }
}

/// All `n!` permutations in lexicographic order. Guarded to `1 ≤ n ≤ 10`.
pub fn all_permutations(n: usize) -> Result<AllPermutations> {
    Limits::default().all_permutations(n)
}

/// All flattened partitions of `[n]`, `1 ≤ n ≤ 16`.
pub fn all_flattened(n: usize) -> Result<Walk> {
    Limits::default().all_flattened(n)
}

/// Flattened partitions of `[n]` avoiding every pattern in `ps`.
pub fn enumerate_avoiding(n: usize, ps: &PatternSet) -> Result<Walk> {
    Limits::default().enumerate_avoiding(n, ps)
}

pub fn count_avoiding(n: usize, ps: &PatternSet) -> Result<u64> {
    Limits::default().count_avoiding(n, ps)
}

pub fn brute_force_avoiding(n: usize, ps: &PatternSet) -> Result<Vec<Permutation>> {
    Limits::default().brute_force_avoiding(n, ps)
}

pub fn avoiding_permutations(n: usize, ps: &PatternSet) -> Result<Walk> {
    Limits::default().avoiding_permutations(n, ps)
}

pub fn motzkin_permutations(n: usize) -> Result<Vec<Permutation>> {
    Limits::default().motzkin_permutations(n)
}

/// `p` is a flattened partition avoiding `ps`.
pub fn is_member(p: &Permutation, ps: &PatternSet) -> bool {
    p.is_flattened() && ps.avoided_by(p)
}

pub(crate) fn require_member(map: &'static str, p: &Permutation, ps: &PatternSet) -> Result<()> {
    if is_member(p, ps) {
        Ok(())
    } else {
        Err(Error::OutOfDomain { map, input: p.to_comma(), class: format!("F(n; {ps})") })
    }
}

/// Lexicographic successor iteration (Narayana's algorithm).
#[derive(Debug, Clone)]
pub struct AllPermutations {
    next: Option<Vec<u8>>,
}

impl AllPermutations {
    fn new(n: usize) -> Self {
        Self { next: Some((1..=n as u8).collect()) }
    }
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut w = current.clone();
        if let Some(i) = (0..w.len().saturating_sub(1)).rev().find(|&i| w[i] < w[i + 1]) {
            let j = (i + 1..w.len()).rev().find(|&j| w[j] > w[i]).unwrap();
            w.swap(i, j);
            w[i + 1..].reverse();
            self.next = Some(w);
        }
        Some(Permutation::from_word_unchecked(current))
    }
}

/// Depth-first, pruned construction of a permutation class in
/// lexicographic order.
#[derive(Debug, Clone)]
pub struct Walk {
    n: usize,
    flattened: bool,
    patterns: Vec<Vec<u8>>,
    word: Vec<u8>,
    // Bit `v` set iff value `v` is placed; bit 0 always set.
    used: u64,
    // cursor[d]: smallest value still to try at position d.
    cursor: Vec<u8>,
    done: bool,
}

impl Walk {
    fn new(n: usize, ps: &PatternSet, flattened: bool) -> Self {
        assert!(n < 64, "walk supports n < 64");
        Self {
            n,
            flattened,
            patterns: ps.patterns().iter().map(|t| t.word().to_vec()).collect(),
            word: Vec::with_capacity(n),
            used: 1,
            cursor: vec![1],
            done: false,
        }
    }

    fn admissible(&self, v: u8) -> bool {
        if self.used & (1 << v) != 0 {
            return false;
        }
        if self.flattened {
            let smallest_unused = (!self.used).trailing_zeros() as u8;
            match self.word.last() {
                None => v == 1,
                Some(&last) => v > last || v == smallest_unused,
            }
        } else {
            true
        }
    }

    /// Moves to the next complete word; false when exhausted.
    fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        loop {
            let d = self.word.len();
            if d == self.n {
                // Leave the frame of the completed word for the next call.
                self.cursor.pop();
                return true;
            }
            let start = self.cursor[d];
            let mut found = None;
            for v in start..=self.n as u8 {
                if !self.admissible(v) {
                    continue;
                }
                self.word.push(v);
                let clash = self.patterns.iter().any(|t| ends_with_occurrence(&self.word, t));
                self.word.pop();
                if !clash {
                    found = Some(v);
                    break;
                }
            }
            match found {
                Some(v) => {
                    self.cursor[d] = v + 1;
                    self.word.push(v);
                    self.used |= 1 << v;
                    self.cursor.push(1);
                }
                None => {
                    self.cursor.pop();
                    match self.word.pop() {
                        Some(v) => self.used &= !(1 << v),
                        None => {
                            self.done = true;
                            return false;
                        }
                    }
                }
            }
        }
    }

    fn retreat_from_leaf(&mut self) {
        if let Some(v) = self.word.pop() {
            self.used &= !(1 << v);
        } else {
            // n = 0: the single empty word has been produced.
            self.done = true;
        }
    }

    /// Counts the remaining words without materializing them.
    pub fn count_remaining(mut self) -> u64 {
        let mut count = 0;
        while self.advance() {
            count += 1;
            self.retreat_from_leaf();
        }
        count
    }
}

impl Iterator for Walk {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if !self.advance() {
            return None;
        }
        let out = Permutation::from_word_unchecked(self.word.clone());
        self.retreat_from_leaf();
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn ps(s: &str) -> PatternSet {
        PatternSet::parse(s).unwrap()
    }

    fn words(it: impl Iterator<Item = Permutation>) -> Vec<String> {
        it.map(|p| p.to_string()).collect()
    }

    #[test]
    fn all_permutations_order_and_size() {
        assert_eq!(words(all_permutations(1).unwrap()), vec!["1"]);
        let three = words(all_permutations(3).unwrap());
        assert_eq!(three, vec!["123", "132", "213", "231", "312", "321"]);
        let eight: BTreeSet<Permutation> = all_permutations(8).unwrap().collect();
        assert_eq!(eight.len(), 40320);
        assert!(matches!(all_permutations(0), Err(Error::Guard { .. })));
        assert!(matches!(all_permutations(11), Err(Error::Guard { .. })));
    }

    #[test]
    fn all_flattened_small() {
        assert_eq!(words(all_flattened(1).unwrap()), vec!["1"]);
        assert_eq!(words(all_flattened(3).unwrap()), vec!["123", "132"]);
        let direct: Vec<Permutation> = all_flattened(5).unwrap().collect();
        let brute = brute_force_avoiding(5, &PatternSet::empty()).unwrap();
        assert_eq!(direct, brute);
        assert!(all_flattened(17).is_err());
    }

    #[test]
    fn listed_classes() {
        let mut got = words(enumerate_avoiding(5, &ps("213,231")).unwrap());
        got.sort();
        let mut want = vec!["15234", "15243", "12345", "12354", "12534"];
        want.sort();
        assert_eq!(got, want);
        assert_eq!(words(enumerate_avoiding(4, &ps("312,231")).unwrap()), vec!["1234", "1243", "1324"]);
        assert_eq!(words(enumerate_avoiding(4, &ps("213,231")).unwrap()), vec!["1234", "1243", "1423"]);
        for set in PatternSet::pairs() {
            assert_eq!(words(enumerate_avoiding(1, &set).unwrap()), vec!["1"]);
        }
    }

    #[test]
    fn counts() {
        assert_eq!(count_avoiding(7, &ps("231")).unwrap(), 51);
        assert_eq!(count_avoiding(7, &ps("321")).unwrap(), 132);
        assert_eq!(count_avoiding(8, &ps("231")).unwrap(), 127);
        // Bell(n − 1) flattened partitions of [n].
        assert_eq!(count_avoiding(8, &PatternSet::empty()).unwrap(), 877);
        assert_eq!(count_avoiding(9, &PatternSet::empty()).unwrap(), 4140);
    }

    #[test]
    fn unrestricted_class_walk() {
        let s3: Vec<Permutation> = avoiding_permutations(3, &PatternSet::empty()).unwrap().collect();
        let all: Vec<Permutation> = all_permutations(3).unwrap().collect();
        assert_eq!(s3, all);
        assert_eq!(avoiding_permutations(0, &ps("321")).unwrap().count(), 1);
        assert_eq!(avoiding_permutations(0, &ps("321")).unwrap().count_remaining(), 1);
        assert_eq!(avoiding_permutations(6, &ps("321")).unwrap().count(), 132);
        assert_eq!(motzkin_permutations(4).unwrap().len(), 9);
    }

    #[test]
    fn limits_are_configurable() {
        let tight = Limits { brute_max: 4, direct_max: 5 };
        assert!(tight.all_permutations(5).is_err());
        assert!(tight.enumerate_avoiding(6, &PatternSet::empty()).is_err());
        assert_eq!(tight.count_avoiding(5, &ps("213")).unwrap(), 8);
    }
}
