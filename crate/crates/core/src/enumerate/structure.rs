//! Structural decompositions of the 213- and 231-avoiding classes.

use std::fmt;

use crate::error::{Error, Result};
use crate::pattern::PatternSet;
use crate::perm::Permutation;

use super::{enumerate_avoiding, require_member};

/// The p/q words of a 213-avoiding flattened partition.
///
/// The partition is `p₁q₁|p₂q₂|⋯|p_{r−1}q_{r−1}|p_r`, each word is a block
/// of consecutive integers, and `p₁p₂⋯p_r q_{r−1}⋯q₁` is `12⋯n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PQDecomposition {
    p_words: Vec<Vec<u8>>,
    q_words: Vec<Vec<u8>>,
}

impl PQDecomposition {
    pub fn p_words(&self) -> &[Vec<u8>] {
        &self.p_words
    }

    /// `q₁, …, q_{r−1}`.
    pub fn q_words(&self) -> &[Vec<u8>] {
        &self.q_words
    }

    pub fn run_count(&self) -> usize {
        self.p_words.len()
    }

    /// `p₁q₁p₂q₂⋯p_r`.
    pub fn recompose(&self) -> Permutation {
        let mut word = Vec::new();
        for (i, p) in self.p_words.iter().enumerate() {
            word.extend_from_slice(p);
            if let Some(q) = self.q_words.get(i) {
                word.extend_from_slice(q);
            }
        }
        Permutation::from_word_unchecked(word)
    }

    /// `p₁⋯p_r q_{r−1}⋯q₁`, which is the identity word.
    pub fn block_order(&self) -> Vec<u8> {
        let mut word: Vec<u8> = self.p_words.concat();
        for q in self.q_words.iter().rev() {
            word.extend_from_slice(q);
        }
        word
    }

    /// Gap positions cut in `12⋯n` (gap `c` sits between `c` and `c+1`).
    pub fn demarcations(&self) -> Vec<usize> {
        let mut cuts = Vec::new();
        let mut acc = 0;
        let blocks = self.p_words.iter().chain(self.q_words.iter().rev());
        let total = self.p_words.len() + self.q_words.len();
        for block in blocks.take(total - 1) {
            acc += block.len();
            cuts.push(acc);
        }
        cuts
    }
}

impl fmt::Display for PQDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = |w: &[u8]| w.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
        for (i, p) in self.p_words.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "p{}={}", i + 1, word(p))?;
            if let Some(q) = self.q_words.get(i) {
                write!(f, " q{}={}", i + 1, word(q))?;
            }
        }
        Ok(())
    }
}

fn is_consecutive(w: &[u8]) -> bool {
    w.windows(2).all(|x| x[1] == x[0] + 1)
}

/// Splits a 213-avoiding flattened partition into its p/q words.
pub fn decompose_213(p: &Permutation) -> Result<PQDecomposition> {
    require_member("decompose_213", p, &PatternSet::parse("213")?)?;
    let runs = p.runs();
    let r = runs.len();
    let broken = || Error::IdentityFailed(format!("{p} has no p/q structure"));
    let mut p_words = Vec::with_capacity(r);
    let mut q_words = Vec::with_capacity(r.saturating_sub(1));
    for (i, run) in runs.runs().iter().enumerate() {
        if i + 1 == r {
            if !is_consecutive(run) {
                return Err(broken());
            }
            p_words.push(run.clone());
        } else {
            let split = (1..run.len()).find(|&s| run[s] != run[s - 1] + 1).ok_or_else(broken)?;
            let (head, tail) = run.split_at(split);
            if !is_consecutive(tail) {
                return Err(broken());
            }
            p_words.push(head.to_vec());
            q_words.push(tail.to_vec());
        }
    }
    let d = PQDecomposition { p_words, q_words };
    if d.block_order() != Permutation::identity(p.len()).word() {
        return Err(broken());
    }
    Ok(d)
}

/// Builds the 213-avoiding flattened partition obtained by cutting `12⋯n`
/// at the given gaps into `p₁…p_r, q_{r−1}…q₁`.
pub fn compose_213(n: usize, cuts: &[usize]) -> Result<Permutation> {
    if n == 0 || n > crate::perm::MAX_LEN {
        return Err(Error::InvalidArgument(format!("n = {n}")));
    }
    let mut cuts = cuts.to_vec();
    cuts.sort_unstable();
    if cuts.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidArgument("repeated cut position".into()));
    }
    if cuts.iter().any(|&c| c == 0 || c >= n) {
        return Err(Error::InvalidArgument(format!("cut positions must lie in 1..={}", n - 1)));
    }
    if !cuts.len().is_multiple_of(2) {
        return Err(Error::InvalidArgument("an even number of cuts is required".into()));
    }
    let r = cuts.len() / 2 + 1;
    let mut bounds = vec![0];
    bounds.extend(&cuts);
    bounds.push(n);
    let blocks: Vec<Vec<u8>> = bounds.windows(2).map(|b| ((b[0] + 1) as u8..=b[1] as u8).collect()).collect();
    let p_words = blocks[..r].to_vec();
    let q_words: Vec<Vec<u8>> = blocks[r..].iter().rev().cloned().collect();
    Ok(PQDecomposition { p_words, q_words }.recompose())
}

/// A 231-avoiding flattened partition cut at the position of `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitAtMax {
    /// 1-indexed position of `n`.
    pub k: usize,
    /// The entries before `n`; a permutation of `1..k−1`.
    pub left: Permutation,
    /// The entries after `n`, shifted down by `k − 1`.
    pub right: Permutation,
}

impl SplitAtMax {
    pub fn join(&self) -> Permutation {
        let n = self.left.len() + self.right.len() + 1;
        let shift = (self.k - 1) as u8;
        let mut word = self.left.word().to_vec();
        word.push(n as u8);
        word.extend(self.right.word().iter().map(|&v| v + shift));
        Permutation::from_word_unchecked(word)
    }
}

pub fn split_at_max(p: &Permutation) -> Result<SplitAtMax> {
    let n = p.len();
    if n < 2 {
        return Err(Error::InvalidArgument("split_at_max needs n ≥ 2".into()));
    }
    require_member("split_at_max", p, &PatternSet::parse("231")?)?;
    let w = p.word();
    let pos = p.position_of(n as u8).unwrap();
    let k = pos + 1;
    let bound = k as u8;
    if k < 2 || w[..pos].iter().any(|&v| v >= bound) || w[pos + 1..].iter().any(|&v| v < bound) {
        return Err(Error::IdentityFailed(format!("{p} does not split at its maximum")));
    }
    let left = Permutation::from_word_unchecked(w[..pos].to_vec());
    let right = Permutation::from_word_unchecked(w[pos + 1..].iter().map(|&v| v - (bound - 1)).collect());
    Ok(SplitAtMax { k, left, right })
}

/// `table[k]` is the number of (213, 231)-avoiding flattened partitions of
/// `[n]` whose first run has length `k`, for `0 ≤ k ≤ n`.
pub fn first_run_length_table(n: usize) -> Result<Vec<u64>> {
    let ps = PatternSet::parse("213,231")?;
    let mut table = vec![0u64; n + 1];
    for p in enumerate_avoiding(n, &ps)? {
        table[p.runs().lengths()[0]] += 1;
    }
    Ok(table)
}
