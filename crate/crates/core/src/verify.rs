//! One-shot checking of every structural and numerical identity, grouped
//! by scope. Exhaustive work is capped per check so that `n_max = 16` stays
//! tractable: brute-force filters stop at 9, permutation-wide scans at 7,
//! and bijection certificates at 10.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigUint;

use crate::bijections::{certify, fixed_points_of_f, Bijection};
use crate::enumerate::{
    all_flattened, all_permutations, brute_force_avoiding, compose_213, count_avoiding, decompose_213,
    enumerate_avoiding, is_member, split_at_max,
};
use crate::error::{guard, Error, Result};
use crate::partition::SetPartition;
use crate::pattern::{contains_by_definition, Pattern, PatternSet};
use crate::perm::Permutation;
use crate::report::VerificationReport;
use crate::series::{
    catalan, closed_form_count, inv_distribution, runs_distribution, verify_motzkin_recurrence, verify_pair_ogf,
    verify_pair_recurrences,
};

const BRUTE_CAP: usize = 9;
const SCAN_CAP: usize = 7;
const MAP_CAP: usize = 10;
const DIRECT_CAP: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    All,
    Core,
    Bijections,
    Series,
}

impl Scope {
    pub fn as_str(self) -> &'static str {
        match self {
            Scope::All => "all",
            Scope::Core => "core",
            Scope::Bijections => "bijections",
            Scope::Series => "series",
        }
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Scope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Scope::All, Scope::Core, Scope::Bijections, Scope::Series]
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown scope {s:?}")))
    }
}

/// Runs the checks of `scope` for sizes up to `n_max` (`1 ≤ n_max ≤ 16`).
pub fn run(scope: Scope, n_max: usize) -> Result<Vec<VerificationReport>> {
    guard("verify", n_max, 1, 16)?;
    let mut reports = Vec::new();
    if matches!(scope, Scope::All | Scope::Core) {
        reports.extend(core_checks(n_max)?);
    }
    if matches!(scope, Scope::All | Scope::Bijections) {
        reports.extend(bijection_checks(n_max)?);
    }
    if matches!(scope, Scope::All | Scope::Series) {
        reports.extend(series_checks(n_max)?);
    }
    Ok(reports)
}

fn set(ps: &str) -> PatternSet {
    PatternSet::parse(ps).expect("static pattern set")
}

fn class(n: usize, ps: &str) -> Result<Vec<Permutation>> {
    Ok(enumerate_avoiding(n, &set(ps))?.collect())
}

/// The empty set, the six singles and the fifteen pairs.
fn all_pattern_sets() -> Vec<PatternSet> {
    std::iter::once(PatternSet::empty()).chain(PatternSet::singles()).chain(PatternSet::pairs()).collect()
}

fn core_checks(n_max: usize) -> Result<Vec<VerificationReport>> {
    let brute = n_max.min(BRUTE_CAP);
    let scan = n_max.min(SCAN_CAP);
    let direct = n_max.min(DIRECT_CAP);
    let maps = n_max.min(MAP_CAP);
    let mut out = Vec::new();

    let mut r = VerificationReport::new("run_decomposition", 1, brute);
    for n in 1..=brute {
        for p in all_flattened(n)? {
            let runs = p.runs();
            let starts = runs.starts();
            r.check(n, runs.concat() == p.word(), || format!("{p}: runs do not concatenate back"));
            r.check(n, starts.windows(2).all(|w| w[0] < w[1]), || format!("{p}: run starts {starts:?}"));
            r.check(n, p.word()[0] == 1, || format!("{p}: does not start with 1"));
        }
    }
    out.push(r);

    let mut r = VerificationReport::new("flatten_set_partitions", 1, scan);
    for n in 1..=scan {
        let images: Vec<Permutation> = SetPartition::all(n).iter().map(SetPartition::flatten).collect();
        let distinct: BTreeSet<&Permutation> = images.iter().collect();
        let flattened: Vec<Permutation> = all_flattened(n)?.collect();
        r.check(n, distinct.into_iter().eq(flattened.iter()), || "Flatten image differs from F(n)".into());
    }
    out.push(r);

    let mut r = VerificationReport::new("pattern_scanner", 1, scan);
    for n in 1..=scan {
        for p in all_permutations(n)? {
            for t in Pattern::length_three() {
                let fast = p.contains(&t);
                let slow = contains_by_definition(p.word(), t.word());
                r.check(n, fast == slow, || format!("{p} vs {t}: fast {fast}, definition {slow}"));
                r.check(n, fast == (p.count_occurrences(&t) > 0), || format!("{p} vs {t}: count disagrees"));
            }
        }
    }
    out.push(r);

    let mut r = VerificationReport::new("inversion_complement", 1, scan);
    for n in 1..=scan {
        for p in all_permutations(n)? {
            let total = p.inversions() + p.reversed().inversions();
            r.check(n, total == n * (n - 1) / 2, || format!("{p}: inv + inv(reverse) = {total}"));
        }
    }
    out.push(r);

    let mut r = VerificationReport::new("oracle_equivalence", 1, brute);
    for n in 1..=brute {
        for ps in all_pattern_sets() {
            let direct: Vec<Permutation> = enumerate_avoiding(n, &ps)?.collect();
            let filtered = brute_force_avoiding(n, &ps)?;
            r.check(n, direct == filtered, || format!("{ps}: {} direct vs {} brute", direct.len(), filtered.len()));
        }
    }
    out.push(r);

    let mut r = VerificationReport::new("max_ends_first_run_213", 1, maps);
    for n in 1..=maps {
        for p in class(n, "213")? {
            let runs = p.runs();
            let first = runs.first().unwrap_or_default();
            r.check(n, first.last() == Some(&(n as u8)), || format!("{p}: first run {first:?}"));
        }
    }
    out.push(r);

    let mut r = VerificationReport::new("pq_decomposition_213", 1, maps);
    for n in 1..=maps {
        let members = class(n, "213")?;
        for p in &members {
            match decompose_213(p) {
                Ok(d) => {
                    r.check(n, &d.recompose() == p, || format!("{p}: recomposition {}", d.recompose()));
                    let cuts = d.demarcations();
                    match compose_213(n, &cuts) {
                        Ok(q) => r.check(n, &q == p, || format!("{p}: compose({cuts:?}) = {q}")),
                        Err(e) => r.fail(n, format!("{p}: {e}")),
                    }
                }
                Err(e) => r.fail(n, format!("{p}: {e}")),
            }
        }
        let mut image = BTreeSet::new();
        let mut total = 0usize;
        for size in (0..n).step_by(2) {
            for cuts in (1..n).combinations(size) {
                total += 1;
                image.insert(compose_213(n, &cuts)?);
            }
        }
        r.check(n, image.len() == total, || "distinct demarcations collide".into());
        r.check(n, image.iter().eq(members.iter()), || "demarcation image differs from F(n;213)".into());
    }
    out.push(r);

    let mut r = VerificationReport::new("starts_12_or_13_312", 3, maps);
    for n in 3..=maps {
        for p in class(n, "312")? {
            r.check(n, p.starts_with(&[1, 2]) || p.starts_with(&[1, 3]), || format!("{p}"));
        }
    }
    out.push(r);

    let mut r = VerificationReport::new("starts_12_or_1n_213_231", 3, maps);
    for n in 3..=maps {
        for p in class(n, "213,231")? {
            r.check(n, p.starts_with(&[1, 2]) || p.starts_with(&[1, n as u8]), || format!("{p}"));
        }
    }
    out.push(r);

    let mut r = VerificationReport::new("forced_prefix_213_231", 1, maps);
    for n in 1..=maps {
        for p in class(n, "213,231")? {
            let k = p.position_of(n as u8).expect("n is present");
            let ok = p.word()[..k].iter().enumerate().all(|(i, &v)| v as usize == i + 1);
            r.check(n, ok, || format!("{p}: prefix before n is not 1..{k}"));
        }
    }
    out.push(r);

    let mut r = VerificationReport::new("unique_13_start_213_312", 3, maps);
    for n in 3..=maps {
        let starts13: Vec<Permutation> = class(n, "213,312")?.into_iter().filter(|p| p.starts_with(&[1, 3])).collect();
        r.check(n, starts13.len() == 1, || format!("{} elements start with 13", starts13.len()));
        if let [p] = starts13.as_slice() {
            let runs = p.runs();
            r.check(n, runs.runs().get(1).is_some_and(|run| run.as_slice() == [2]), || {
                format!("{p}: 2 is not a singleton second run")
            });
        }
    }
    out.push(r);

    let mut r = VerificationReport::new("split_at_max_231", 2, maps);
    for n in 2..=maps {
        for p in class(n, "231")? {
            match split_at_max(&p) {
                Ok(s) => {
                    r.check(n, s.join() == p, || format!("{p}: rejoined as {}", s.join()));
                    let in_class = |q: &Permutation| q.is_empty() || is_member(q, &set("231"));
                    r.check(n, in_class(&s.left) && in_class(&s.right), || format!("{p}: parts leave F(231)"));
                }
                Err(e) => r.fail(n, format!("{p}: {e}")),
            }
        }
    }
    out.push(r);

    let mut r = VerificationReport::new("closed_form_counts", 1, direct);
    for n in 1..=direct {
        for ps in PatternSet::singles().into_iter().chain(PatternSet::pairs()) {
            let count = count_avoiding(n, &ps)?;
            let closed = closed_form_count(n, &ps);
            r.check(n, closed == Some(BigUint::from(count)), || format!("{ps}: count {count}, closed form {closed:?}"));
        }
    }
    out.push(r);

    Ok(out)
}

fn certificate_check(r: &mut VerificationReport, map: Bijection, n: usize) -> Option<Vec<(Permutation, Permutation)>> {
    match certify(map, n) {
        Ok(c) => Some(c.pairs),
        Err(e) => {
            r.fail(n, e.to_string());
            None
        }
    }
}

fn round_trip(r: &mut VerificationReport, map: Bijection, n: usize, pairs: &[(Permutation, Permutation)]) {
    for (x, y) in pairs {
        match map.inverse().apply(y) {
            Ok(back) => r.check(n, &back == x, || format!("{}({y}) = {back}, expected {x}", map.inverse())),
            Err(e) => r.fail(n, e.to_string()),
        }
    }
}

fn bijection_checks(n_max: usize) -> Result<Vec<VerificationReport>> {
    let maps = n_max.min(MAP_CAP);
    let mut out = Vec::new();

    let mut r = VerificationReport::new("f_run_length_bijection", 1, maps);
    for n in 1..=maps {
        for map in [Bijection::F, Bijection::G] {
            if let Some(pairs) = certificate_check(&mut r, map, n) {
                for (x, y) in &pairs {
                    r.check(n, x.runs().lengths() == y.runs().lengths(), || format!("{map}({x}) = {y}"));
                }
                round_trip(&mut r, map, n, &pairs);
            }
        }
        let tally = |ps: &str| -> Result<BTreeMap<Vec<usize>, usize>> {
            Ok(class(n, ps)?.iter().map(|p| p.runs().lengths()).counts().into_iter().collect())
        };
        r.check(n, tally("312")? == tally("213")?, || "run-length multisets differ".into());
    }
    out.push(r);

    let mut r = VerificationReport::new("f_fixed_points", 1, maps);
    for n in 1..=maps {
        let fixed = fixed_points_of_f(n)?;
        let pair = class(n, "213,312")?;
        r.check(n, fixed == pair, || format!("{} fixed points, {} in F(n;213,312)", fixed.len(), pair.len()));
    }
    out.push(r);

    let mut r = VerificationReport::new("swap23_involution", 3, maps);
    for n in 3..=maps {
        if let Some(pairs) = certificate_check(&mut r, Bijection::Swap23, n) {
            round_trip(&mut r, Bijection::Swap23, n, &pairs);
            for (x, y) in &pairs {
                let ok = (x.starts_with(&[1, 2]) && y.starts_with(&[1, 3]))
                    || (x.starts_with(&[1, 3]) && y.starts_with(&[1, 2]));
                r.check(n, ok, || format!("swap23({x}) = {y}"));
            }
        }
    }
    out.push(r);

    let mut r = VerificationReport::new("h_catalan_bijection", 1, maps);
    for n in 1..=maps {
        for map in [Bijection::H, Bijection::HInverse] {
            if let Some(pairs) = certificate_check(&mut r, map, n) {
                round_trip(&mut r, map, n, &pairs);
            }
        }
        let count = count_avoiding(n, &set("321"))?;
        let c = catalan(n as u64 - 1);
        r.check(n, BigUint::from(count) == c, || format!("|F(n;321)| = {count}, C_(n-1) = {c}"));
    }
    out.push(r);

    let mut r = VerificationReport::new("alpha_motzkin_bijection", 1, maps);
    for n in 1..=maps {
        for map in [Bijection::Alpha, Bijection::AlphaInverse] {
            if let Some(pairs) = certificate_check(&mut r, map, n) {
                round_trip(&mut r, map, n, &pairs);
            }
        }
    }
    out.push(r);

    Ok(out)
}

fn series_checks(n_max: usize) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();

    let mut r = VerificationReport::new("runs_distribution_213", 2, n_max.max(2));
    for n in 2..=n_max {
        if let Err(e) = runs_distribution(n) {
            r.fail(n, e.to_string());
        }
    }
    out.push(r);

    let mut r = VerificationReport::new("inv_distribution_312", 2, n_max.max(2));
    for n in 2..=n_max {
        if let Err(e) = inv_distribution(n) {
            r.fail(n, e.to_string());
        }
    }
    out.push(r);

    if n_max >= 3 {
        out.push(verify_motzkin_recurrence(n_max)?);
        out.extend(verify_pair_recurrences(n_max)?);
    }
    if n_max >= 2 {
        out.push(verify_pair_ogf(n_max)?);
    }
    Ok(out)
}
