use bscurve::bstree::{build_global_tree, build_infinity_tree, canonical_code};
use bscurve::invariants;
use bscurve::normalform::{extract, realize};
use bscurve_bench::{curve, data, CURVES};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

fn trees(c: &mut Criterion) {
    let mut g = c.benchmark_group("trees");
    for (name, text) in CURVES {
        let f = curve(text);
        g.bench_with_input(BenchmarkId::new("infinity", name), &f, |b, f| b.iter(|| canonical_code(&build_infinity_tree(black_box(f)).unwrap())));
        g.bench_with_input(BenchmarkId::new("global", name), &f, |b, f| b.iter(|| canonical_code(&build_global_tree(black_box(f)).unwrap())));
    }
    g.finish();
}

fn singularities(c: &mut Criterion) {
    let mut g = c.benchmark_group("singularities");
    for (name, text) in CURVES {
        let f = curve(text);
        g.bench_with_input(BenchmarkId::new("milnor_delta", name), &f, |b, f| {
            b.iter(|| {
                for (x, y) in invariants::singular_points(f).unwrap() {
                    black_box(invariants::milnor_number(f, &x, &y).unwrap());
                    black_box(invariants::delta_invariant(f, &x, &y).unwrap());
                }
            })
        });
    }
    g.finish();
}

fn normal_forms(c: &mut Criterion) {
    let mut g = c.benchmark_group("normal_forms");
    for a in data() {
        g.bench_with_input(BenchmarkId::new("round_trip", a.to_json()), &a, |b, a| b.iter(|| extract(&realize(black_box(a)).unwrap()).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, trees, singularities, normal_forms);
criterion_main!(benches);
