use criterion::{criterion_group, criterion_main, Criterion};
use sprugnoli::{extract_stripes, gf, production_matrix, Series, SprugnoliTriple};

fn fundamental(order: usize) -> SprugnoliTriple {
    SprugnoliTriple::new(
        gf("1/(1-x-x^2)", order).unwrap(),
        gf("x*(1+x)/(1-x)", order).unwrap(),
        gf("x/(1-x^2)", order).unwrap(),
    )
    .unwrap()
}

fn bench_build(c: &mut Criterion) {
    let t = fundamental(32);
    c.bench_function("build 32x32", |b| b.iter(|| t.build(32).unwrap()));
}

fn bench_inv(c: &mut Criterion) {
    let t = fundamental(24);
    c.bench_function("inverse triple at order 24", |b| b.iter(|| t.inv()));
}

fn bench_production(c: &mut Criterion) {
    let m = fundamental(32).build(32).unwrap();
    c.bench_function("production matrix and stripes from 32x32", |b| {
        b.iter(|| {
            let p = production_matrix(&m).unwrap();
            extract_stripes(&p, 2).unwrap()
        })
    });
}

fn bench_revert(c: &mut Criterion) {
    let f = gf("x*(1+x)/(1-x)", 32).unwrap();
    c.bench_function("compositional reversion at order 32", |b| {
        b.iter(|| f.revert().unwrap())
    });
}

fn bench_expr(c: &mut Criterion) {
    c.bench_function("expression evaluation at order 24", |b| {
        b.iter(|| -> Series { gf("(1+2*x)*sqrt(1+6*x^2+x^4)/((5-12*x^2)*(5+42*x^2))", 24).unwrap() })
    });
}

criterion_group!(
    benches,
    bench_build,
    bench_inv,
    bench_production,
    bench_revert,
    bench_expr
);
criterion_main!(benches);
