use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use forest_homfly::invariants::{alexander, homfly_closed, homfly_recursive};
use forest_homfly::plabic::{construct_from_forest, homfly_skein};
use forest_homfly_bench::{case, CASES};

fn homfly(c: &mut Criterion) {
    let mut g = c.benchmark_group("homfly");
    for name in CASES {
        let f = case(name);
        g.bench_with_input(BenchmarkId::new("recursive", name), &f, |b, f| b.iter(|| homfly_recursive(black_box(f))));
        g.bench_with_input(BenchmarkId::new("closed", name), &f, |b, f| b.iter(|| homfly_closed(black_box(f))));
    }
    g.finish();
}

fn alexander_poly(c: &mut Criterion) {
    let mut g = c.benchmark_group("alexander");
    for name in CASES {
        let f = case(name);
        g.bench_with_input(BenchmarkId::from_parameter(name), &f, |b, f| b.iter(|| alexander(black_box(f))));
    }
    g.finish();
}

fn skein(c: &mut Criterion) {
    let mut g = c.benchmark_group("skein");
    g.sample_size(20);
    for name in ["A4", "D5", "E8", "T9", "A3+D4"] {
        let map = construct_from_forest(&case(name));
        g.bench_with_input(BenchmarkId::new("construct", name), &case(name), |b, f| {
            b.iter(|| construct_from_forest(black_box(f)))
        });
        g.bench_with_input(BenchmarkId::new("evaluate", name), &map, |b, m| b.iter(|| homfly_skein(black_box(m))));
    }
    g.finish();
}

criterion_group!(benches, homfly, alexander_poly, skein);
criterion_main!(benches);
