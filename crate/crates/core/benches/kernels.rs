//! Sequential vs parallel runs of the main kernels. Without the `parallel`
//! feature both arms are sequential.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use pauli_geom::geometry::{build_pauli_graph_with, enumerate_mcs, exact_cover, BuildOptions, PauliGraphBundle};
use pauli_geom::graph::{is_strongly_regular_with, max_cliques_with, BitSet};
use pauli_geom::par::Exec;
use pauli_geom::pauli::SystemParams;

const ARMS: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn bundle(p: u32, n: usize) -> PauliGraphBundle {
    build_pauli_graph_with(&SystemParams::new(p, n).unwrap(), BuildOptions::default()).unwrap()
}

fn graph_build(c: &mut Criterion) {
    let mut group = c.benchmark_group("graph_build");
    for (p, n) in [(2, 4), (2, 5), (3, 3)] {
        let params = SystemParams::new(p, n).unwrap();
        for (name, exec) in ARMS {
            let opts = BuildOptions { exec, debug_oracle: false };
            group.bench_with_input(BenchmarkId::new(name, format!("p{p}n{n}")), &opts, |b, &opts| {
                b.iter(|| build_pauli_graph_with(&params, opts).unwrap())
            });
        }
    }
    group.finish();
}

fn cliques(c: &mut Criterion) {
    let mut group = c.benchmark_group("max_cliques");
    for (p, n) in [(3, 2), (2, 3), (2, 4)] {
        let b = bundle(p, n);
        let size = b.params().dim() - 1;
        for (name, exec) in ARMS {
            group.bench_function(BenchmarkId::new(name, format!("p{p}n{n}")), |bench| {
                bench.iter(|| max_cliques_with(b.graph(), size, exec))
            });
        }
    }
    group.finish();
}

fn strongly_regular(c: &mut Criterion) {
    let mut group = c.benchmark_group("is_strongly_regular");
    for (p, n) in [(2, 4), (2, 5)] {
        let b = bundle(p, n);
        for (name, exec) in ARMS {
            group.bench_function(BenchmarkId::new(name, format!("p{p}n{n}")), |bench| {
                bench.iter(|| is_strongly_regular_with(b.graph(), exec))
            });
        }
    }
    group.finish();
}

fn spreads(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact_cover");
    for (p, n) in [(2, 2), (3, 2), (2, 3)] {
        let s = enumerate_mcs(&bundle(p, n)).unwrap();
        let rows: Vec<BitSet> = (0..s.line_count()).map(|l| s.line_set(l)).collect();
        for (name, exec) in ARMS {
            group.bench_function(BenchmarkId::new(name, format!("p{p}n{n}")), |bench| {
                bench.iter(|| exact_cover(s.point_count(), &rows, Some(200), exec))
            });
        }
    }
    group.finish();
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = graph_build, cliques, strongly_regular, spreads
}
criterion_main!(benches);
