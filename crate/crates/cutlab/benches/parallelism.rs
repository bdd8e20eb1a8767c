//! Sequential vs data-parallel throughput of the instance-level sweeps
//! (family analysis, scheme preprocessing, lower-bound verification).
//!
//! With the default `parallel` feature the "par" benchmarks run on the
//! default rayon pool and the "seq" ones on a single-thread pool; built
//! with `--no-default-features` only the sequential path exists. Both
//! paths produce identical reports, so the comparison is pure timing.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use cutlab::construct::{gen_matching_lb, random_connected, verify_lower_bound};
use cutlab::exec::with_jobs;
use cutlab::family::{analyze, FamilyKind, InstanceFamily};
use cutlab::scheme::build_scheme;

fn all_terminals(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// jobs = 1 pins one worker; jobs = 0 uses the default pool. Without
/// the `parallel` feature both run sequentially.
fn modes() -> Vec<(&'static str, usize)> {
    if cfg!(feature = "parallel") {
        vec![("seq", 1), ("par", 0)]
    } else {
        vec![("seq", 1)]
    }
}

fn bench_analyze(c: &mut Criterion) {
    let g = random_connected(7, 100, 42);
    let family =
        InstanceFamily::new(FamilyKind::Multicut { k: 2 }, &all_terminals(7), true).unwrap();
    let mut group = c.benchmark_group("analyze_multicut_k2_n7");
    group.sample_size(10);
    for (name, jobs) in modes() {
        group.bench_function(name, |b| {
            b.iter(|| with_jobs(jobs, || analyze(black_box(&g), black_box(&family)).unwrap()))
        });
    }
    group.finish();
}

fn bench_scheme_build(c: &mut Criterion) {
    let g = random_connected(9, 100, 7);
    let family = InstanceFamily::new(
        FamilyKind::GroupCut { alpha: 2, beta: 2 },
        &all_terminals(9),
        true,
    )
    .unwrap();
    let mut group = c.benchmark_group("scheme_build_groupcut22_n9");
    group.sample_size(10);
    for (name, jobs) in modes() {
        group.bench_function(name, |b| {
            b.iter(|| {
                with_jobs(jobs, || {
                    build_scheme(black_box(&g), black_box(&family)).unwrap()
                })
            })
        });
    }
    group.finish();
}

fn bench_verify_matching(c: &mut Criterion) {
    let g = gen_matching_lb(8).unwrap();
    let family =
        InstanceFamily::new(FamilyKind::Multicut { k: 2 }, &all_terminals(8), true).unwrap();
    let mut group = c.benchmark_group("verify_matching_lb_n8_k2");
    group.sample_size(10);
    for (name, jobs) in modes() {
        group.bench_function(name, |b| {
            b.iter(|| {
                with_jobs(jobs, || {
                    verify_lower_bound(black_box(&g), black_box(&family), 6).unwrap()
                })
            })
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_analyze,
    bench_scheme_build,
    bench_verify_matching
);
criterion_main!(benches);
