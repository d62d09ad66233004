use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use shifted_burnside::lattice::{all_subgroups, gen_classes};
use shifted_burnside::star::StarFrame;
use shifted_burnside::{catalog_lookup, essential_report, ScanConfig, TripleProduct};

fn pipeline(c: &mut Criterion) {
    let c4 = catalog_lookup("C4").unwrap();
    let q8 = catalog_lookup("Q8").unwrap();
    let mut group = c.benchmark_group("pipeline");
    group.sample_size(10);
    group.bench_function("report C4 C4", |b| {
        b.iter(|| essential_report(&c4, &c4, &ScanConfig::default()).unwrap())
    });
    group.bench_function("report C4 Q8", |b| {
        b.iter(|| essential_report(&c4, &q8, &ScanConfig::default()).unwrap())
    });
    group.bench_function("report C4 Q8 fast", |b| {
        let cfg = ScanConfig {
            reduced: true,
            symmetry: true,
            ..Default::default()
        };
        b.iter(|| essential_report(&c4, &q8, &cfg).unwrap())
    });
    group.finish();
}

fn lattice(c: &mut Criterion) {
    let s4 = catalog_lookup("S4").unwrap();
    let c4 = catalog_lookup("C4").unwrap();
    let q8 = catalog_lookup("Q8").unwrap();
    let p = TripleProduct::new(&c4, &c4, &q8).unwrap();
    c.bench_function("subgroups of S4", |b| b.iter(|| all_subgroups(black_box(&s4)).unwrap()));
    c.bench_function("subgroups of C4xC4xQ8", |b| b.iter(|| all_subgroups(black_box(&p)).unwrap()));
    c.bench_function("gen classes C4 Q8", |b| b.iter(|| gen_classes(black_box(&p)).unwrap()));
}

fn star(c: &mut Criterion) {
    let c4 = catalog_lookup("C4").unwrap();
    let q8 = catalog_lookup("Q8").unwrap();
    let f = StarFrame::from_groups(&c4, &c4, &c4, &q8).unwrap();
    let left = all_subgroups(f.left()).unwrap();
    let right = all_subgroups(f.right()).unwrap();
    c.bench_function("star 64x64 pairs over C4xC4xQ8", |b| {
        b.iter(|| {
            let mut n = 0;
            for l in left.iter().step_by(left.len() / 64 + 1) {
                for r in right.iter().step_by(right.len() / 64 + 1) {
                    n += f.star(l, r).order();
                }
            }
            n
        })
    });
}

criterion_group!(benches, pipeline, lattice, star);
criterion_main!(benches);
