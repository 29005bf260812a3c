use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use kn_plactic::alphabet::parse_word;
use kn_plactic::crystal::{explore_component_with, DEFAULT_COMPONENT_CAP};
use kn_plactic::verify::{run_suite, CheckOptions};
use kn_plactic::{Exec, LieKind};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn explore(c: &mut Criterion) {
    let mut g = c.benchmark_group("explore");
    let kind = LieKind::b(4);
    let hw = parse_word(kind, "1 2 3 1 2 1").unwrap().letters;
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new("B4 (1 2 3 1 2 1)", name), &exec, |b, &exec| {
            b.iter(|| explore_component_with(kind, &hw, DEFAULT_COMPONENT_CAP, exec).unwrap().len())
        });
    }
    g.finish();
}

fn suites(c: &mut Criterion) {
    let mut g = c.benchmark_group("suites");
    g.sample_size(10);
    for (suite, label) in [(5, "plactic"), (7, "kn-criterion")] {
        for (name, exec) in MODES {
            let opts = CheckOptions { exec, ..CheckOptions::default() };
            g.bench_with_input(BenchmarkId::new(label, name), &opts, |b, opts| {
                b.iter(|| run_suite(suite, opts).unwrap().passed())
            });
        }
    }
    g.finish();
}

criterion_group!(benches, explore, suites);
criterion_main!(benches);
