use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use trigmat::{
    build_fir, build_p, jacobi_eigs_default, power_traces, rank_bound_check, FirParams,
};

fn bench_build_p(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_p_fir");
    for n in [8usize, 32, 64] {
        let spec = build_fir(FirParams::new(n, 1.3).unwrap()).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &spec, |b, spec| {
            b.iter(|| build_p(black_box(spec)).unwrap())
        });
    }
    group.finish();
}

fn bench_jacobi(c: &mut Criterion) {
    let mut group = c.benchmark_group("jacobi_eigs_fir");
    group.sample_size(20);
    for n in [8usize, 16, 32] {
        let spec = build_fir(FirParams::new(n, 0.9).unwrap()).unwrap();
        let p = build_p(&spec).unwrap().p;
        group.bench_with_input(BenchmarkId::from_parameter(2 * n), &p, |b, p| {
            b.iter(|| jacobi_eigs_default(black_box(p)).unwrap())
        });
    }
    group.finish();
}

fn bench_power_traces(c: &mut Criterion) {
    let spec = build_fir(FirParams::new(32, 2.2).unwrap()).unwrap();
    let p = build_p(&spec).unwrap().p;
    c.bench_function("power_traces_64", |b| {
        b.iter(|| power_traces(black_box(&p), 4).unwrap())
    });
}

fn bench_rank_check(c: &mut Criterion) {
    let spec = build_fir(FirParams::new(12, 0.4).unwrap()).unwrap();
    c.bench_function("rank_bound_check_12", |b| {
        b.iter(|| rank_bound_check(black_box(&spec), 1e-12).unwrap())
    });
}

criterion_group!(
    benches,
    bench_build_p,
    bench_jacobi,
    bench_power_traces,
    bench_rank_check
);
criterion_main!(benches);
