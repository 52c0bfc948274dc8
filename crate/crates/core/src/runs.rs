use std::fmt;

use crate::perm::Permutation;

/// The factorization of a permutation into maximal ascending runs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunDecomposition {
    runs: Vec<Vec<u8>>,
}

impl RunDecomposition {
    pub fn of(p: &Permutation) -> Self {
        let mut runs: Vec<Vec<u8>> = Vec::new();
        for &v in p.word() {
            match runs.last_mut() {
                Some(run) if *run.last().unwrap() < v => run.push(v),
                _ => runs.push(vec![v]),
            }
        }
        Self { runs }
    }

    pub fn runs(&self) -> &[Vec<u8>] {
        &self.runs
    }

    pub fn len(&self) -> usize {
        self.runs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// First element of each run.
    pub fn starts(&self) -> Vec<u8> {
        self.runs.iter().map(|r| r[0]).collect()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.runs.iter().map(Vec::len).collect()
    }

    pub fn first(&self) -> Option<&[u8]> {
        self.runs.first().map(Vec::as_slice)
    }

    pub fn concat(&self) -> Vec<u8> {
        self.runs.concat()
    }
}

/// Runs separated by `|`, e.g. `139|278|456`.
impl fmt::Display for RunDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let multi_digit = self.runs.iter().flatten().any(|&v| v > 9);
        for (i, run) in self.runs.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            for (j, v) in run.iter().enumerate() {
                if multi_digit && j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn runs_of(s: &str) -> RunDecomposition {
        s.parse::<Permutation>().unwrap().runs()
    }

    // Split at every descent, written independently of `RunDecomposition::of`.
    fn split_at_descents(w: &[u8]) -> Vec<Vec<u8>> {
        let mut cuts = vec![0];
        cuts.extend((1..w.len()).filter(|&i| w[i - 1] > w[i]));
        cuts.push(w.len());
        cuts.windows(2).map(|c| w[c[0]..c[1]].to_vec()).collect()
    }

    #[test]
    fn nine_letter_example() {
        let r = runs_of("139278456");
        assert_eq!(r.runs(), &[vec![1, 3, 9], vec![2, 7, 8], vec![4, 5, 6]]);
        assert_eq!(r.starts(), vec![1, 2, 4]);
        assert_eq!(r.to_string(), "139|278|456");
    }

    #[test]
    fn identity_is_one_run() {
        let r = Permutation::identity(7).runs();
        assert_eq!(r.lengths(), vec![7]);
    }

    #[test]
    fn agrees_with_descent_split() {
        let w = [1, 3, 2, 4, 6, 5];
        let p = Permutation::new(w.to_vec()).unwrap();
        let expected = split_at_descents(&w);
        assert_eq!(expected, vec![vec![1, 3], vec![2, 4, 6], vec![5]]);
        assert_eq!(p.runs().runs(), expected.as_slice());
        assert_eq!(p.runs().starts(), vec![1, 2, 5]);
        assert_eq!(p.run_count(), 3);
    }

    #[test]
    fn display_with_large_values() {
        let p: Permutation = "1,10,2,3,4,5,6,7,8,9".parse().unwrap();
        assert_eq!(p.runs().to_string(), "1,10|2,3,4,5,6,7,8,9");
    }
}
