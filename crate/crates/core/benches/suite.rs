use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use axial_core::catalog::{run_suite, AxisPair, Tier};
use axial_core::constructions::named_fixture;
use axial_core::parallel::Execution;

fn suites(c: &mut Criterion) {
    let mut group = c.benchmark_group("run_suite");
    group.sample_size(10);
    for name in ["spin:1/3:4", "matsuo:S4", "sym:1/2,1/2,1/2,1/2"] {
        let fx = named_fixture(name, None).unwrap();
        let pair = AxisPair::new(&fx.algebra, fx.element("a").unwrap(), fx.element("b").unwrap()).unwrap();
        for (label, exec) in [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)] {
            group.bench_with_input(BenchmarkId::new(label, name), &pair, |bench, pair| {
                bench.iter(|| run_suite(pair, Tier::Extended, None, exec).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, suites);
criterion_main!(benches);
