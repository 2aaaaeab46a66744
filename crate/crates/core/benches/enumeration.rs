//! Each benchmark runs once on a single-thread pool and once on the global
//! pool. Built with `--no-default-features`, only the sequential path runs.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qrep::{rigid, subcat, DynkinType, IndecTable};

fn tables() -> Vec<(&'static str, IndecTable)> {
    [("D5", DynkinType::d(5)), ("E6", DynkinType::e(6)), ("E7", DynkinType::e(7))]
        .into_iter()
        .map(|(name, ty)| (name, IndecTable::build(&ty.orientation(0)).unwrap()))
        .collect()
}

#[cfg(feature = "parallel")]
fn modes() -> Vec<(&'static str, Option<rayon::ThreadPool>)> {
    let single = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    vec![("sequential", Some(single)), ("parallel", None)]
}

#[cfg(not(feature = "parallel"))]
fn modes() -> Vec<(&'static str, Option<()>)> {
    vec![("sequential", None)]
}

#[cfg(feature = "parallel")]
fn in_mode<R: Send>(pool: &Option<rayon::ThreadPool>, f: impl FnOnce() -> R + Send) -> R {
    match pool {
        Some(p) => p.install(f),
        None => f(),
    }
}

#[cfg(not(feature = "parallel"))]
fn in_mode<R>(_: &Option<()>, f: impl FnOnce() -> R) -> R {
    f()
}

fn bench_rigid(c: &mut Criterion) {
    let tables = tables();
    let mut group = c.benchmark_group("rigid_profile");
    group.sample_size(10);
    for (mode, pool) in &modes() {
        for (name, t) in &tables {
            group.bench_with_input(BenchmarkId::new(*mode, name), t, |b, t| {
                b.iter(|| in_mode(pool, || rigid::rigid_profile(t)))
            });
        }
    }
    group.finish();
}

fn bench_ice(c: &mut Criterion) {
    let tables = tables();
    let mut group = c.benchmark_group("enumerate_ice");
    group.sample_size(10);
    for (mode, pool) in &modes() {
        for (name, t) in tables.iter().take(2) {
            group.bench_with_input(BenchmarkId::new(*mode, name), t, |b, t| {
                b.iter(|| in_mode(pool, || subcat::enumerate_ice(t).len()))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, bench_rigid, bench_ice);
criterion_main!(benches);
