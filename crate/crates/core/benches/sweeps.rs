//! Sequential against rayon for the heavier sweeps. Without the `parallel`
//! feature both arms run the same sequential code.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use lagwron::coalescence::b_set_with;
use lagwron::exactalg::rat;
use lagwron::par::Exec;
use lagwron::partitions::part;
use lagwron::qkdv::{i_operator_with, Beta};
use lagwron::spectra::count_blz_with;
use lagwron::verify::{run_suite, VerifyConfig};
use lagwron::wronskian::{phi_tilde_with, StrictVector};

const MODES: [(&str, Exec); 2] = [
    ("sequential", Exec::Sequential),
    ("parallel", Exec::Parallel),
];

fn wronskian(c: &mut Criterion) {
    let mut g = c.benchmark_group("phi_tilde");
    let a = StrictVector::from_partition(&part(&[4, 2, 1]), 4);
    let b = StrictVector::from_partition(&part(&[3, 1]), 3);
    for (name, exec) in MODES {
        g.bench_function(name, |bench| {
            bench.iter(|| phi_tilde_with(exec, black_box(&a), black_box(&b)).unwrap())
        });
    }
    g.finish();
}

fn counts(c: &mut Criterion) {
    let mut g = c.benchmark_group("count_blz");
    for n in [10, 14] {
        for (name, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(name, n), &n, |bench, &n| {
                bench.iter(|| count_blz_with(exec, n, &rat(1, 3)))
            });
        }
    }
    g.finish();
    let mut g = c.benchmark_group("b_set");
    for (name, exec) in MODES {
        g.bench_function(name, |bench| bench.iter(|| b_set_with(exec, black_box(12))));
    }
    g.finish();
}

fn qkdv(c: &mut Criterion) {
    let mut g = c.benchmark_group("i5_blocks");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(name, |bench| {
            bench.iter(|| i_operator_with(exec, 5, &Beta::Symbolic, 6).unwrap())
        });
    }
    g.finish();
}

fn suites(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify_wronskian_structure");
    g.sample_size(10);
    for (name, exec) in MODES {
        let cfg = VerifyConfig {
            exec,
            ..VerifyConfig::new(5)
        };
        g.bench_function(name, |bench| {
            bench.iter(|| run_suite("wronskian-structure", &cfg).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, wronskian, counts, qkdv, suites);
criterion_main!(benches);
