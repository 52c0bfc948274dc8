use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::error::{guard, Error, Result};
use crate::pattern::PatternSet;
use crate::perm::Permutation;
use crate::series::closed_form_count;

use super::Limits;

/// How a count was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Brute,
    Direct,
    ClosedForm,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Direct => "direct",
            Method::ClosedForm => "closed-form",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "brute" => Ok(Method::Brute),
            "direct" => Ok(Method::Direct),
            "closed-form" | "closed" => Ok(Method::ClosedForm),
            other => Err(Error::InvalidArgument(format!("unknown method {other:?}"))),
        }
    }
}

/// Exact class sizes keyed by pattern set and `n`, with the methods that
/// produced each one. Every method recorded for a cell gave the same value.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CountTable {
    cells: BTreeMap<(PatternSet, usize), Cell>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Cell {
    count: u64,
    methods: Vec<Method>,
}

impl CountTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records a count; fails if the cell already holds a different value.
    pub fn insert(&mut self, n: usize, ps: &PatternSet, method: Method, count: u64) -> Result<()> {
        let key = (ps.clone(), n);
        match self.cells.get_mut(&key) {
            Some(cell) if cell.count != count => Err(Error::IdentityFailed(format!(
                "|F({n}; {ps})|: {method} gives {count}, {} gives {}",
                cell.methods.iter().map(|m| m.as_str()).collect::<Vec<_>>().join("/"),
                cell.count
            ))),
            Some(cell) => {
                if let Err(at) = cell.methods.binary_search(&method) {
                    cell.methods.insert(at, method);
                }
                Ok(())
            }
            None => {
                self.cells.insert(key, Cell { count, methods: vec![method] });
                Ok(())
            }
        }
    }

    /// Merges another table; order of merging does not matter.
    pub fn merge(&mut self, other: &CountTable) -> Result<()> {
        for ((ps, n), cell) in &other.cells {
            for &m in &cell.methods {
                self.insert(*n, ps, m, cell.count)?;
            }
        }
        Ok(())
    }

    pub fn get(&self, n: usize, ps: &PatternSet) -> Option<u64> {
        self.cells.get(&(ps.clone(), n)).map(|c| c.count)
    }

    pub fn methods(&self, n: usize, ps: &PatternSet) -> &[Method] {
        self.cells.get(&(ps.clone(), n)).map_or(&[], |c| &c.methods)
    }

    /// Counts for `ps` in increasing `n`.
    pub fn sequence(&self, ps: &PatternSet) -> Vec<(usize, u64)> {
        self.cells.iter().filter(|((set, _), _)| set == ps).map(|((_, n), c)| (*n, c.count)).collect()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Computes every `(ps, n)` cell for `1 ≤ n ≤ n_max` by each requested
    /// method. Brute force is only run where `n ≤ limits.brute_max`;
    /// closed forms only where one is known.
    pub fn build(n_max: usize, sets: &[PatternSet], methods: &[Method], limits: &Limits) -> Result<Self> {
        guard("table", n_max, 1, limits.direct_max)?;
        let mut table = CountTable::new();
        if methods.contains(&Method::Direct) {
            let jobs: Vec<(PatternSet, usize)> =
                sets.iter().flat_map(|ps| (1..=n_max).map(move |n| (ps.clone(), n))).collect();
            let counts: Vec<Result<u64>> = jobs.par_iter().map(|(ps, n)| limits.count_avoiding(*n, ps)).collect();
            for ((ps, n), count) in jobs.iter().zip(counts) {
                table.insert(*n, ps, Method::Direct, count?)?;
            }
        }
        if methods.contains(&Method::Brute) {
            let brute_top = n_max.min(limits.brute_max);
            let per_n: Vec<Result<Vec<u64>>> =
                (1..=brute_top).into_par_iter().map(|n| brute_counts(n, sets, limits)).collect();
            for (n, counts) in (1..=brute_top).zip(per_n) {
                for (ps, count) in sets.iter().zip(counts?) {
                    table.insert(n, ps, Method::Brute, count)?;
                }
            }
        }
        if methods.contains(&Method::ClosedForm) {
            for ps in sets {
                for n in 1..=n_max {
                    if let Some(value) = closed_form_count(n, ps) {
                        let count = u64::try_from(&value)
                            .map_err(|_| Error::InvalidArgument(format!("{value} overflows u64")))?;
                        table.insert(n, ps, Method::ClosedForm, count)?;
                    }
                }
            }
        }
        Ok(table)
    }

    /// CSV with header `n,patterns,count,method`, one row per method.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,patterns,count,method\n");
        for ((ps, n), cell) in &self.cells {
            for m in &cell.methods {
                out.push_str(&format!("{n},{ps},{},{m}\n", cell.count));
            }
        }
        out
    }

    /// `{"213": {"1": {"count": 1, "methods": ["direct"]}, ...}, ...}`.
    pub fn to_json(&self) -> Value {
        let mut root = Map::new();
        for ((ps, n), cell) in &self.cells {
            let entry = root.entry(ps.to_string()).or_insert_with(|| Value::Object(Map::new()));
            if let Value::Object(row) = entry {
                row.insert(n.to_string(), json!({ "count": cell.count, "methods": cell.methods }));
            }
        }
        Value::Object(root)
    }
}

// One pass over n! permutations, shared by every pattern set.
fn brute_counts(n: usize, sets: &[PatternSet], limits: &Limits) -> Result<Vec<u64>> {
    let flattened: Vec<Permutation> = limits.all_permutations(n)?.filter(Permutation::is_flattened).collect();
    Ok(sets.iter().map(|ps| flattened.iter().filter(|p| ps.avoided_by(p)).count() as u64).collect())
}
