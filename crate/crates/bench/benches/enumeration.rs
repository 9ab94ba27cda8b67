use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use magiclab_core::{enumerate_em, enumerate_sem, sem_interval, SearchOptions};

fn sem_spectrum(c: &mut Criterion) {
    let mut group = c.benchmark_group("sem_spectrum");
    for (name, g) in magiclab_bench::fixtures() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| {
            b.iter(|| enumerate_sem(black_box(g), &SearchOptions::default()).unwrap())
        });
    }
    group.finish();
}

fn em_spectrum(c: &mut Criterion) {
    let mut group = c.benchmark_group("em_spectrum");
    group.sample_size(10);
    let opts = SearchOptions::default().spectrum_only();
    for (name, g) in magiclab_bench::fixtures() {
        if g.order() + g.size() > 14 {
            continue;
        }
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| {
            b.iter(|| enumerate_em(black_box(g), &opts).unwrap())
        });
    }
    group.finish();
}

fn parallel_sem(c: &mut Criterion) {
    let g = magiclab_bench::fixtures().remove(1).1;
    let mut group = c.benchmark_group("sem_workers");
    for workers in [1, 2, 4] {
        let opts = SearchOptions::default().with_workers(workers);
        group.bench_with_input(BenchmarkId::from_parameter(workers), &opts, |b, opts| {
            b.iter(|| enumerate_sem(black_box(&g), opts).unwrap())
        });
    }
    group.finish();
}

fn intervals(c: &mut Criterion) {
    let fixtures = magiclab_bench::fixtures();
    c.bench_function("sem_interval/all_fixtures", |b| {
        b.iter(|| {
            for (_, g) in &fixtures {
                black_box(sem_interval(g).unwrap());
            }
        })
    });
}

criterion_group!(benches, sem_spectrum, em_spectrum, parallel_sem, intervals);
criterion_main!(benches);
