use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{Permutation, MAX_LEN};

/// A set partition of `{1..n}` into non-empty blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetPartition {
    blocks: Vec<Vec<u8>>,
    n: usize,
}

impl SetPartition {
    pub fn new(blocks: Vec<Vec<u8>>) -> Result<Self> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        if n > MAX_LEN {
            return Err(Error::InvalidSetPartition(format!("{n} elements")));
        }
        let mut seen = vec![false; n + 1];
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::InvalidSetPartition("empty block".into()));
            }
            for &v in block {
                let v = v as usize;
                if v == 0 || v > n || seen[v] {
                    return Err(Error::InvalidSetPartition(format!("{blocks:?}")));
                }
                seen[v] = true;
            }
        }
        Ok(Self { blocks, n })
    }

    pub fn blocks(&self) -> &[Vec<u8>] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Sort each block, order blocks by their minima, concatenate.
    pub fn flatten(&self) -> Permutation {
        let mut blocks = self.blocks.clone();
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Permutation::from_word_unchecked(blocks.concat())
    }

    /// Every set partition of `{1..n}`, via restricted growth strings.
    pub fn all(n: usize) -> Vec<SetPartition> {
        assert!(n <= MAX_LEN);
        let mut out = Vec::new();
        let mut rgs = vec![0usize; n];
        loop {
            let k = rgs.iter().max().map_or(0, |m| m + 1);
            let mut blocks = vec![Vec::new(); k];
            for (i, &b) in rgs.iter().enumerate() {
                blocks[b].push((i + 1) as u8);
            }
            out.push(SetPartition { blocks, n });
            // Next restricted growth string: a[i] ≤ 1 + max(a[..i]).
            let mut i = n;
            loop {
                if i <= 1 {
                    return out;
                }
                i -= 1;
                let bound = rgs[..i].iter().max().copied().unwrap_or(0) + 1;
                if rgs[i] < bound {
                    rgs[i] += 1;
                    for x in &mut rgs[i + 1..] {
                        *x = 0;
                    }
                    break;
                }
            }
        }
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            for v in b {
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}
