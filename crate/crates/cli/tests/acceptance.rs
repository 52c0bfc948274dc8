//! Acceptance suite. Every criterion prints one PASS/FAIL line per check and
//! then asserts that all of its checks passed. All comparisons are exact
//! integer equality; the only tolerances are wall-clock budgets, pinned
//! below.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use flatpart_core::bijections::{alpha_motzkin, f_312_to_213, fixed_points_of_f, g_213_to_312};
use flatpart_core::enumerate::{first_run_length_table, motzkin_permutations};
use flatpart_core::series::{
    expand_pair_ogf, inv_distribution, runs_distribution, verify_motzkin_recurrence, verify_pair_ogf,
};
use flatpart_core::{certify, count_avoiding, enumerate_avoiding, Bijection, PatternSet, Permutation};
use serde_json::Value;

const TABLE_BUDGET: Duration = Duration::from_secs(10);
const ORACLE_BUDGET: Duration = Duration::from_secs(300);

struct Criterion {
    id: u8,
    failed: Vec<String>,
}

impl Criterion {
    fn new(id: u8) -> Self {
        Self { id, failed: Vec::new() }
    }

    fn check(&mut self, label: impl Into<String>, ok: bool) {
        let label = label.into();
        println!("{} criterion {:>2}: {label}", if ok { "PASS" } else { "FAIL" }, self.id);
        if !ok {
            self.failed.push(label);
        }
    }

    fn finish(self) {
        assert!(self.failed.is_empty(), "criterion {} failed: {:?}", self.id, self.failed);
    }
}

fn set(s: &str) -> PatternSet {
    PatternSet::parse(s).unwrap()
}

// Pascal's triangle, independent of the library's binomial.
fn pascal(rows: usize) -> Vec<Vec<u64>> {
    let mut t = vec![vec![1u64]];
    for n in 1..=rows {
        let prev = &t[n - 1];
        let mut row = vec![1u64; n + 1];
        for k in 1..n {
            row[k] = prev[k - 1] + prev[k];
        }
        t.push(row);
    }
    t
}

fn binom(t: &[Vec<u64>], n: usize, k: usize) -> u64 {
    if k > n {
        0
    } else {
        t[n][k]
    }
}

fn table_json(n_max: usize) -> (Value, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_flatpart"))
        .args(["table", "--n-max", &n_max.to_string(), "--methods", "brute,direct", "--format", "json"])
        .output()
        .expect("run flatpart");
    let elapsed = start.elapsed();
    assert!(out.status.success(), "table exited with {:?}", out.status);
    (serde_json::from_slice(&out.stdout).expect("table JSON"), elapsed)
}

fn row(table: &Value, ps: &str, n_max: usize) -> (Vec<u64>, bool) {
    let cells = &table[ps];
    let counts = (1..=n_max).map(|n| cells[n.to_string()]["count"].as_u64().unwrap_or(u64::MAX)).collect();
    let both = (1..=n_max).all(|n| {
        let m = &cells[n.to_string()]["methods"];
        m.as_array().is_some_and(|a| a.len() == 2)
    });
    (counts, both)
}

#[test]
fn criterion_01_single_pattern_table() {
    let mut c = Criterion::new(1);
    let (table, elapsed) = table_json(7);
    let expected: [(&str, [u64; 7]); 6] = [
        ("123", [1, 1, 1, 0, 0, 0, 0]),
        ("132", [1, 1, 1, 1, 1, 1, 1]),
        ("213", [1, 1, 2, 4, 8, 16, 32]),
        ("231", [1, 1, 2, 4, 9, 21, 51]),
        ("312", [1, 1, 2, 4, 8, 16, 32]),
        ("321", [1, 1, 2, 5, 14, 42, 132]),
    ];
    for (ps, want) in expected {
        let (got, both) = row(&table, ps, 7);
        c.check(format!("row {ps} = {want:?} (got {got:?})"), got == want);
        c.check(format!("row {ps} computed by brute force and direct generation"), both);
    }
    c.check(format!("runtime {elapsed:?} < {TABLE_BUDGET:?}"), elapsed < TABLE_BUDGET);
    c.finish();
}

#[test]
fn criterion_02_pair_table() {
    let mut c = Criterion::new(2);
    let (table, elapsed) = table_json(7);
    // The six sequence rows as printed, with the pairs listed on each.
    let groups: [(&str, &[&str], [u64; 7]); 6] = [
        ("Fibonacci", &["213+231", "231+312"], [1, 1, 2, 3, 5, 8, 13]),
        ("all ones", &["132+213", "132+231", "132+312", "132+321"], [1, 1, 1, 1, 1, 1, 1]),
        ("powers of two", &["213+321", "231+321", "312+321"], [1, 1, 2, 4, 8, 16, 32]),
        ("A028310", &["213+312"], [1, 1, 2, 3, 4, 5, 6]),
        ("zero after n = 2", &["123+132"], [1, 1, 0, 0, 0, 0, 0]),
        ("zero after n = 3", &["123+213", "123+231", "123+312", "123+321"], [1, 1, 1, 0, 0, 0, 0]),
    ];
    let mut covered = BTreeSet::new();
    for (name, pairs, want) in groups {
        for ps in pairs {
            covered.insert(ps.to_string());
            let (got, both) = row(&table, ps, 7);
            c.check(format!("{name} row: {ps} = {want:?} (got {got:?})"), got == want);
            c.check(format!("{ps} computed by brute force and direct generation"), both);
        }
    }
    c.check(format!("{} of 15 pairs covered", covered.len()), covered.len() == 15);
    c.check(format!("runtime {elapsed:?} < {TABLE_BUDGET:?}"), elapsed < TABLE_BUDGET);
    c.finish();
}

#[test]
fn criterion_03_oracle_equivalence() {
    let mut c = Criterion::new(3);
    let start = Instant::now();
    let sets: Vec<PatternSet> =
        std::iter::once(PatternSet::empty()).chain(PatternSet::singles()).chain(PatternSet::pairs()).collect();
    for n in 1..=9 {
        let mismatched: Vec<String> = sets
            .iter()
            .filter(|ps| {
                let direct: BTreeSet<Permutation> = enumerate_avoiding(n, ps).unwrap().collect();
                let brute: BTreeSet<Permutation> =
                    flatpart_core::brute_force_avoiding(n, ps).unwrap().into_iter().collect();
                direct != brute
            })
            .map(ToString::to_string)
            .collect();
        c.check(format!("n = {n}: 22 pattern sets agree (mismatches {mismatched:?})"), mismatched.is_empty());
    }
    let elapsed = start.elapsed();
    c.check(format!("runtime {elapsed:?} < {ORACLE_BUDGET:?}"), elapsed < ORACLE_BUDGET);
    c.finish();
}

#[test]
fn criterion_04_runs_distribution() {
    let mut c = Criterion::new(4);
    let t = pascal(16);
    for n in 2..=12 {
        let poly = runs_distribution(n).unwrap();
        let want: Vec<String> = (0..=n.div_ceil(2))
            .map(|r| if r == 0 { 0 } else { binom(&t, n - 1, 2 * r - 2) })
            .map(|v| v.to_string())
            .collect();
        let got: Vec<String> = (0..want.len().max(poly.coeffs().len())).map(|d| poly.coeff(d).to_string()).collect();
        let want_padded: Vec<String> =
            (0..got.len()).map(|d| want.get(d).cloned().unwrap_or_else(|| "0".into())).collect();
        c.check(format!("n = {n}: {poly}"), got == want_padded);
        let at_one = poly.eval_at_one().to_string();
        c.check(format!("n = {n}: value at q = 1 is 2^{} ({at_one})", n - 2), at_one == (1u64 << (n - 2)).to_string());
    }
    c.finish();
}

#[test]
fn criterion_05_inv_distribution() {
    let mut c = Criterion::new(5);
    let t = pascal(16);
    for n in 2..=12 {
        let poly = inv_distribution(n).unwrap();
        let got: Vec<String> = poly.coeffs().iter().map(ToString::to_string).collect();
        let want: Vec<String> = t[n - 2].iter().map(ToString::to_string).collect();
        c.check(format!("n = {n}: {poly} = (1+q)^{}", n - 2), got == want);
    }
    c.finish();
}

#[test]
fn criterion_06_run_length_bijection() {
    let mut c = Criterion::new(6);
    for n in 3..=10 {
        let domain: Vec<Permutation> = enumerate_avoiding(n, &set("312")).unwrap().collect();
        let codomain: BTreeSet<Permutation> = enumerate_avoiding(n, &set("213")).unwrap().collect();
        let images: Vec<Permutation> = domain.iter().map(|p| f_312_to_213(p).unwrap()).collect();
        let image_set: BTreeSet<Permutation> = images.iter().cloned().collect();
        c.check(
            format!("n = {n}: f is a bijection onto F(n;213)"),
            image_set.len() == domain.len() && image_set == codomain,
        );
        let lengths = domain.iter().zip(&images).all(|(p, q)| p.runs().lengths() == q.runs().lengths());
        c.check(format!("n = {n}: run-length vectors preserved"), lengths);
        let gf = domain.iter().zip(&images).all(|(p, q)| &g_213_to_312(q).unwrap() == p);
        let fg = codomain.iter().all(|q| &f_312_to_213(&g_213_to_312(q).unwrap()).unwrap() == q);
        c.check(format!("n = {n}: g∘f = id and f∘g = id"), gf && fg);
        let fixed: BTreeSet<Permutation> = fixed_points_of_f(n).unwrap().into_iter().collect();
        let pair: BTreeSet<Permutation> = enumerate_avoiding(n, &set("213,312")).unwrap().collect();
        c.check(format!("n = {n}: fixed points = F(n;213,312), {} elements", pair.len()), fixed == pair);
    }
    c.finish();
}

#[test]
fn criterion_07_catalan_bijection() {
    let mut c = Criterion::new(7);
    let t = pascal(20);
    for n in 1..=10 {
        let m = n - 1;
        let catalan = binom(&t, 2 * m, m) / (m as u64 + 1);
        match certify(Bijection::H, n) {
            Ok(cert) => c.check(
                format!("n = {n}: h certified onto S(n−1;321), {} pairs", cert.pairs.len()),
                cert.pairs.len() as u64 == catalan,
            ),
            Err(e) => c.check(format!("n = {n}: h certificate: {e}"), false),
        }
        let count = count_avoiding(n, &set("321")).unwrap();
        c.check(format!("n = {n}: |F(n;321)| = C_{m} = {catalan} (got {count})"), count == catalan);
    }
    c.check("C_9 = 4862", count_avoiding(10, &set("321")).unwrap() == 4862);
    c.finish();
}

#[test]
fn criterion_08_motzkin_recurrence() {
    let mut c = Criterion::new(8);
    let report = verify_motzkin_recurrence(14).unwrap();
    c.check(format!("library report over n = 3..=14 ({:?})", report.failures), report.passed());
    // Independent Motzkin numbers: M_m = M_{m−1} + Σ_{i=0}^{m−2} M_i M_{m−2−i}.
    let mut motzkin = vec![1u64, 1];
    for m in 2..=14 {
        let conv: u64 = (0..=m - 2).map(|i| motzkin[i] * motzkin[m - 2 - i]).sum();
        motzkin.push(motzkin[m - 1] + conv);
    }
    let counts: Vec<u64> =
        std::iter::once(0).chain((1..=14).map(|n| count_avoiding(n, &set("231")).unwrap())).collect();
    for n in 3..=14 {
        let rhs = counts[n - 1] + (2..n).map(|k| counts[k - 1] * counts[n - k]).sum::<u64>();
        c.check(format!("n = {n}: {} = {rhs} by the recurrence", counts[n]), counts[n] == rhs);
        c.check(format!("n = {n}: |F(n;231)| = M_{} = {}", n - 1, motzkin[n - 1]), counts[n] == motzkin[n - 1]);
    }
    c.finish();
}

#[test]
fn criterion_09_alpha_image() {
    let mut c = Criterion::new(9);
    for n in 1..=9 {
        let sources = motzkin_permutations(n - 1).unwrap();
        let image: Vec<Permutation> = sources.iter().map(|s| alpha_motzkin(s).unwrap()).collect();
        let image_set: BTreeSet<Permutation> = image.iter().cloned().collect();
        let target: BTreeSet<Permutation> = enumerate_avoiding(n, &set("231")).unwrap().collect();
        c.check(
            format!("n = {n}: α maps {} Motzkin permutations onto F(n;231)", sources.len()),
            image_set.len() == image.len() && image_set == target,
        );
    }
    c.finish();
}

#[test]
fn criterion_10_first_run_ogf() {
    let mut c = Criterion::new(10);
    let series = expand_pair_ogf(20).unwrap();
    for n in 2..=12 {
        let table = first_run_length_table(n).unwrap();
        let agree =
            (0..=n + 1).all(|k| series.coeff(n, k).to_string() == table.get(k).copied().unwrap_or(0).to_string());
        c.check(format!("n = {n}: series coefficients = first-run table {table:?}"), agree);
    }
    let mut fib = vec![0u64, 1];
    for i in 2..=20 {
        fib.push(fib[i - 1] + fib[i - 2]);
    }
    for (n, f) in fib.iter().enumerate().skip(2) {
        let sum = series.row_sum(n).to_string();
        c.check(format!("n = {n}: row sum {sum} = F_{n}"), sum == f.to_string());
    }
    let report = verify_pair_ogf(12).unwrap();
    c.check("library report passes", report.passed());
    c.check(format!("k = 1 recorded as a note: {:?}", report.notes), report.notes.len() == 1);
    c.finish();
}

#[test]
fn criterion_11_pair_closed_forms() {
    let mut c = Criterion::new(11);
    let t = pascal(16);
    for n in 1..=12 {
        let a = count_avoiding(n, &set("213,321")).unwrap();
        let want = binom(&t, n - 1, 2) + 1;
        c.check(format!("n = {n}: |F(n;213,321)| = C(n−1,2)+1 = {want} (got {a})"), a == want);
        let b = count_avoiding(n, &set("231,321")).unwrap();
        let want = if n < 2 { 1 } else { 1u64 << (n - 2) };
        c.check(format!("n = {n}: |F(n;231,321)| = 2^(n−2) = {want} (got {b})"), b == want);
    }
    c.finish();
}
