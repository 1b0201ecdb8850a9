use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use zeta7_bench::{base_quartic, rational_nodes, small_nodes, solved};
use zeta7_core::curvefactory::{assemble_bundle, genus3_discriminant_check, quartic_smoothness};
use zeta7_core::diophantine::{cramer_s7, hermite_s7, solve};
use zeta7_core::exactcore::discriminant;
use zeta7_core::polarization::{gram, lattice_basis, smith_normal_form};

fn solver(c: &mut Criterion) {
    let mut g = c.benchmark_group("solver");
    for (label, p) in [("integer", small_nodes()), ("rational", rational_nodes())] {
        g.bench_function(format!("hermite/{label}"), |b| b.iter(|| hermite_s7(black_box(&p))));
        g.bench_function(format!("cramer/{label}"), |b| b.iter(|| cramer_s7(black_box(&p))));
        g.bench_function(format!("solve/{label}"), |b| b.iter(|| solve(black_box(&p))));
    }
    g.finish();
}

fn elimination(c: &mut Criterion) {
    let (s7, q4, f6) = solved(&small_nodes());
    c.bench_function("discriminant/f6", |b| b.iter(|| discriminant(black_box(&f6))));
    c.bench_function("gcd/s7_f6q4", |b| {
        let fq = f6.clone() * &q4;
        b.iter(|| black_box(&s7).gcd(black_box(&fq)))
    });
}

fn bundle(c: &mut Criterion) {
    let p = small_nodes();
    let (s7, q4, _) = solved(&p);
    let b = assemble_bundle(Some(&p), &s7, &q4).expect("bundle");
    let mut g = c.benchmark_group("bundle");
    g.sample_size(10);
    g.bench_function("assemble", |bn| {
        bn.iter(|| assemble_bundle(Some(&p), black_box(&s7), black_box(&q4)))
    });
    g.bench_function("genus3_discriminant", |bn| {
        bn.iter(|| genus3_discriminant_check(black_box(&b)))
    });
    g.finish();
}

fn lattice(c: &mut Criterion) {
    let basis = lattice_basis();
    c.bench_function("polarization/gram", |b| b.iter(|| gram(black_box(&basis))));
    let g = gram(&basis).expect("gram");
    c.bench_function("polarization/snf", |b| {
        b.iter(|| smith_normal_form(black_box(&g.entries)))
    });
    let q = base_quartic();
    let mut grp = c.benchmark_group("smoothness");
    grp.sample_size(10);
    grp.bench_function("base_quartic", |b| b.iter(|| quartic_smoothness(black_box(&q))));
    grp.finish();
}

criterion_group!(benches, solver, elimination, bundle, lattice);
criterion_main!(benches);
