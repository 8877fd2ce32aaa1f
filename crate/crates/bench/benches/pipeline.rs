use std::sync::Arc;

use criterion::{criterion_group, criterion_main, Criterion};
use parcont::text::parse_polynomial;
use parcont::{buchberger, discriminant, FamilySpec, Polynomial, VariableContext};

fn quadratic_family() -> FamilySpec {
    let ctx = Arc::new(VariableContext::new(vec!["x"], vec!["a", "b", "c"]).unwrap());
    let f = parse_polynomial(&ctx, "a*x^2 + b*x + c").unwrap();
    FamilySpec::new(&ctx, vec![f]).unwrap()
}

fn circle_family() -> FamilySpec {
    let ctx = Arc::new(VariableContext::new(vec!["x1", "x2"], vec!["a"]).unwrap());
    let f1 = parse_polynomial(&ctx, "(x1 - a) * (x1 - 1) * (x1^2 + x2^2 - 1)").unwrap();
    let f2 = parse_polynomial(&ctx, "(x2 - 3) * (x2 - 4)^2 * (x1^2 + x2^2 - 1)").unwrap();
    FamilySpec::new(&ctx, vec![f1, f2]).unwrap()
}

fn bench_buchberger(c: &mut Criterion) {
    let ctx = Arc::new(VariableContext::new(vec!["x"], vec!["a", "b", "c"]).unwrap().augmented());
    let gens: Vec<Polynomial> = vec![
        parse_polynomial(&ctx, "a*x^2 + b*x + c").unwrap(),
        parse_polynomial(&ctx, "1 - y*(2*a*x + b)").unwrap(),
    ];
    c.bench_function("buchberger_augmented_quadratic", |b| {
        b.iter(|| buchberger(std::hint::black_box(&gens)).unwrap())
    });
}

fn bench_saturation(c: &mut Criterion) {
    let family = circle_family();
    c.bench_function("saturate_circle_family", |b| {
        b.iter(|| std::hint::black_box(&family).saturate().unwrap())
    });
}

fn bench_discriminant(c: &mut Criterion) {
    let family = quadratic_family();
    c.bench_function("discriminant_quadratic", |b| {
        b.iter(|| discriminant(std::hint::black_box(&family), 0).unwrap())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = bench_buchberger, bench_saturation, bench_discriminant
}
criterion_main!(benches);
