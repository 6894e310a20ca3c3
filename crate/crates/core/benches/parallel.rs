//! Parallel vs sequential throughput on the data-parallel kernels: the
//! pseudo-spectral nonlinear term, Sobolev norms, and a verification sample
//! batch. With the `parallel` feature (default) each kernel is measured on
//! both code paths via the runtime override; without it only the sequential
//! path exists.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use gmhd_core::exec;
use gmhd_core::grid::GridSpec;
use gmhd_core::lp::{bernstein_ratio, DyadicPartition, LebesgueExponent};
use gmhd_core::multiplier::MultiplierSpec;
use gmhd_core::norms;
use gmhd_core::sampling;
use gmhd_core::solver::{init_fields, nonlinear_rhs, InitSpec};

fn modes() -> Vec<(&'static str, bool)> {
    if cfg!(feature = "parallel") {
        vec![("parallel", false), ("sequential", true)]
    } else {
        vec![("sequential", true)]
    }
}

fn bench_nonlinear_rhs(c: &mut Criterion) {
    let mut group = c.benchmark_group("nonlinear_rhs");
    for n in [64usize, 128] {
        let grid = GridSpec::new(2, n).unwrap();
        let state = init_fields(
            &InitSpec::RandomBand { band: [2.0, (n / 4) as f64], u_amplitude: 1.0, b_amplitude: 0.5 },
            grid,
            42,
        )
        .unwrap();
        for (label, seq) in modes() {
            group.bench_with_input(BenchmarkId::new(label, n), &state, |bench, s| {
                exec::force_sequential(seq);
                bench.iter(|| nonlinear_rhs(std::hint::black_box(s), true).unwrap());
                exec::force_sequential(false);
            });
        }
    }
    group.finish();
}

fn bench_norms(c: &mut Criterion) {
    let mut group = c.benchmark_group("vec_hk");
    for n in [128usize, 256] {
        let grid = GridSpec::new(2, n).unwrap();
        let v = init_fields(
            &InitSpec::RandomBand { band: [1.0, (n / 4) as f64], u_amplitude: 1.0, b_amplitude: 0.0 },
            grid,
            7,
        )
        .unwrap()
        .u;
        for (label, seq) in modes() {
            group.bench_with_input(BenchmarkId::new(label, n), &v, |bench, v| {
                exec::force_sequential(seq);
                bench.iter(|| norms::vec_hk(std::hint::black_box(v), 3.0));
                exec::force_sequential(false);
            });
        }
    }
    group.finish();
}

fn bench_sample_batch(c: &mut Criterion) {
    let grid = GridSpec::new(2, 128).unwrap();
    let part = DyadicPartition::new(grid, 0, 6).unwrap();
    let mult = MultiplierSpec::log_power(2.0, 0.5, 1.0).unwrap();
    let mut group = c.benchmark_group("verify_sample_batch");
    for (label, seq) in modes() {
        group.bench_function(label, |bench| {
            exec::force_sequential(seq);
            bench.iter(|| {
                let ratios = exec::map_indexed(16, |idx| {
                    let mut rng = sampling::rng_for("bench", 0, idx as u64);
                    let u = sampling::random_shell_field(grid, 4, &mut rng);
                    let b = bernstein_ratio(
                        &part,
                        &u,
                        4,
                        LebesgueExponent::Two,
                        LebesgueExponent::Infinity,
                        1,
                    )
                    .unwrap();
                    b + norms::dissipation(&u, &mult)
                });
                std::hint::black_box(ratios)
            });
            exec::force_sequential(false);
        });
    }
    group.finish();
}

criterion_group!(benches, bench_nonlinear_rhs, bench_norms, bench_sample_batch);
criterion_main!(benches);
