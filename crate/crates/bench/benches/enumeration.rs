use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use flatpart_bench::{pattern_sets, SIZES};
use flatpart_core::{brute_force_avoiding, count_avoiding, series, PatternSet};

fn direct_counts(c: &mut Criterion) {
    let mut group = c.benchmark_group("count_avoiding");
    group.sample_size(10);
    for ps in pattern_sets() {
        for n in SIZES {
            // The unrestricted class has Bell(14) = 190,899,322 members.
            if ps.is_empty() && n > 10 {
                continue;
            }
            group.bench_with_input(BenchmarkId::new(ps.to_string(), n), &n, |b, &n| {
                b.iter(|| count_avoiding(black_box(n), &ps).unwrap())
            });
        }
    }
    group.finish();
}

fn brute_filter(c: &mut Criterion) {
    let ps = PatternSet::parse("231").unwrap();
    let mut group = c.benchmark_group("brute_force_avoiding");
    group.sample_size(10);
    for n in [6, 8] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| brute_force_avoiding(black_box(n), &ps).unwrap().len())
        });
    }
    group.finish();
}

fn ogf_expansion(c: &mut Criterion) {
    c.bench_function("expand_pair_ogf/30", |b| b.iter(|| series::expand_pair_ogf(black_box(30)).unwrap()));
}

criterion_group!(benches, direct_counts, brute_filter, ogf_expansion);
criterion_main!(benches);
