use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use knotcolor::coloring::{color_backtrack, color_braid, color_brute, encode_cnf, sat_decide};
use knotcolor::{alexander_polynomial, dihedral, fox_count, Budget, Mode};
use knotcolor_bench::{quandle_pair, torus_family};

fn decide_engines(c: &mut Criterion) {
    let mut group = c.benchmark_group("decide");
    let budget = Budget::unlimited();
    for p in [3usize, 5, 7] {
        let q = dihedral(p).unwrap();
        for w in torus_family(&[7, 15]) {
            let id = format!("{} d{p}", w.name);
            if w.diagram.arc_count() <= 7 {
                group.bench_with_input(BenchmarkId::new("brute", &id), &w, |b, w| {
                    b.iter(|| color_brute(&w.diagram, &q, Mode::Decide, &budget).unwrap())
                });
            }
            group.bench_with_input(BenchmarkId::new("backtrack", &id), &w, |b, w| {
                b.iter(|| color_backtrack(&w.diagram, &q, Mode::Decide, &budget).unwrap())
            });
            group.bench_with_input(BenchmarkId::new("braid", &id), &w, |b, w| {
                b.iter(|| color_braid(&w.braid, &q, Mode::Decide, &budget).unwrap())
            });
            group.bench_with_input(BenchmarkId::new("sat", &id), &w, |b, w| {
                b.iter(|| sat_decide(&encode_cnf(&w.diagram, &q, true, true).unwrap()))
            });
        }
    }
    group.finish();
}

fn affine_vs_conjugation(c: &mut Criterion) {
    let (affine, conj) = quandle_pair();
    let mut group = c.benchmark_group("quandle kind");
    for w in torus_family(&[9, 21]) {
        for q in [&affine, &conj] {
            group.bench_with_input(BenchmarkId::new(q.label(), &w.name), &w, |b, w| {
                b.iter(|| sat_decide(&encode_cnf(&w.diagram, q, q.is_connected(), true).unwrap()))
            });
        }
    }
    group.finish();
}

fn invariants(c: &mut Criterion) {
    let mut group = c.benchmark_group("invariants");
    for w in torus_family(&[11, 31]) {
        group.bench_with_input(BenchmarkId::new("alexander", &w.name), &w, |b, w| {
            b.iter(|| alexander_polynomial(black_box(&w.diagram)))
        });
        group.bench_with_input(BenchmarkId::new("fox 45", &w.name), &w, |b, w| {
            b.iter(|| fox_count(black_box(&w.diagram), 45))
        });
    }
    group.finish();
}

criterion_group!(benches, decide_engines, affine_vs_conjugation, invariants);
criterion_main!(benches);
