use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use horizon_bench::bench_graph;
use horizon_core::instances::{fig2, FIG2_DEFAULT_LOOPS};
use horizon_core::rational::frac;
use horizon_core::{
    adversarial_value, maxplus_power_value, specified_value, value_iteration, StoppingDistribution,
    DEFAULT_WITNESS_BOUND,
};

fn fixed_horizon(c: &mut Criterion) {
    let g = bench_graph(8, 0.5, 1);
    let mut group = c.benchmark_group("fixed_horizon");
    for t in [64u64, 1024] {
        group.bench_with_input(BenchmarkId::new("bellman", t), &t, |b, &t| {
            b.iter(|| value_iteration(&g, 0, t).unwrap())
        });
    }
    for t in [64u64, 1024, 1 << 20] {
        group.bench_with_input(BenchmarkId::new("maxplus", t), &t, |b, &t| {
            b.iter(|| maxplus_power_value(&g, 0, t).unwrap())
        });
    }
    group.finish();
}

fn specified(c: &mut Criterion) {
    let g = fig2(FIG2_DEFAULT_LOOPS).unwrap();
    let dist = StoppingDistribution::new(vec![
        (5, frac(1, 4)),
        (32, frac(1, 4)),
        (200, frac(1, 4)),
        (5000, frac(1, 4)),
    ])
    .unwrap();
    c.bench_function("specified/fig2_four_points", |b| {
        b.iter(|| specified_value(&g, 0, &dist, DEFAULT_WITNESS_BOUND).unwrap())
    });
}

fn adversarial(c: &mut Criterion) {
    let mut group = c.benchmark_group("adversarial");
    group.sample_size(10);
    for n in [4usize, 8, 12] {
        let g = bench_graph(n, 0.5, 3);
        let horizon = frac(17, 3);
        group.bench_with_input(BenchmarkId::new("vertices", n), &n, |b, _| {
            b.iter(|| adversarial_value(&g, 0, &horizon).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, fixed_horizon, specified, adversarial);
criterion_main!(benches);
