use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rho_core::par::Execution;
use rho_core::verify;

fn lens_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("lens_agreement");
    group.sample_size(10);
    for max_p in [12i64, 24] {
        for (label, exec) in [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)] {
            group.bench_with_input(BenchmarkId::new(label, max_p), &max_p, |b, &p| {
                b.iter(|| verify::lens_agreement(p, exec))
            });
        }
    }
    group.finish();
}

fn maslov_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("maslov_algebra");
    group.sample_size(10);
    for (label, exec) in [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)] {
        group.bench_function(label, |b| b.iter(|| verify::maslov_algebra(100, 7, exec)));
    }
    group.finish();
}

fn torus_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("torus_identity");
    group.sample_size(10);
    for (label, exec) in [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)] {
        group.bench_function(label, |b| b.iter(|| verify::torus_identity(5, exec)));
    }
    group.finish();
}

criterion_group!(sweeps, lens_sweep, maslov_sweep, torus_sweep);
criterion_main!(sweeps);
