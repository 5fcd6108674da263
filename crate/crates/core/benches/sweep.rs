use c4hz::chains::Degree;
use c4hz::closedform::mackey_at;
use c4hz::engine::{homotopy, sweep, sweep_sequential};
use c4hz::mackey::compare;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn agree(d: Degree) -> bool {
    compare(&homotopy(d).unwrap(), &mackey_at(d))
}

fn bench_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("window_compare");
    group.sample_size(10);
    for (a, b, cc) in [(2, 2, 2), (4, 3, 3), (8, 5, 5)] {
        let ds = Degree::window(a, b, cc);
        group.bench_with_input(BenchmarkId::new("parallel", ds.len()), &ds, |bch, ds| bch.iter(|| sweep(ds, agree)));
        group.bench_with_input(BenchmarkId::new("sequential", ds.len()), &ds, |bch, ds| {
            bch.iter(|| sweep_sequential(ds, agree))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_sweep);
criterion_main!(benches);
