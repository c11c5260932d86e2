use criterion::{criterion_group, criterion_main, Criterion};
use hopfkit::catalog;
use hopfkit::comod::galois_beta;
use hopfkit::galoisobj::{h2_finite_abelian, AbelianInvariants};
use hopfkit::generic::generic_extension;
use hopfkit::hopf::check_hopf_axioms;
use hopfkit::ncalg::parse_expr;
use std::hint::black_box;

fn rewriting(c: &mut Criterion) {
    let uq = catalog::hopf("Uq").unwrap();
    let env = catalog::env_for(uq.alphabet(), uq.alg.q.as_ref());
    let x = parse_expr(&env, "F*E*K*F*E*Kinv*F*E").unwrap();
    c.bench_function("uq normal form, degree 8", |b| b.iter(|| uq.alg.rs.normal_form(black_box(&x))));
}

fn axioms(c: &mut Criterion) {
    let slq = catalog::hopf("SLq2").unwrap();
    let mut g = c.benchmark_group("axioms");
    g.sample_size(10);
    g.bench_function("SLq2 hopf axioms", |b| b.iter(|| check_hopf_axioms(black_box(&slq))));
    g.finish();
}

fn galois(c: &mut Criterion) {
    let h = catalog::struct_hopf("taft3").unwrap();
    let ext = hopfkit::comod::trivial_extension(&h);
    c.bench_function("beta of trivial taft3 extension", |b| b.iter(|| galois_beta(black_box(&ext), None)));
}

fn cohomology(c: &mut Criterion) {
    let inv = AbelianInvariants::new(&[3, 3, 3]).unwrap();
    c.bench_function("H2 of (Z/3)^3", |b| b.iter(|| h2_finite_abelian(black_box(&inv))));
}

fn generic(c: &mut Criterion) {
    let h = catalog::struct_hopf("u4").unwrap();
    let mut g = c.benchmark_group("generic");
    g.sample_size(10);
    g.bench_function("A_H of u4", |b| b.iter(|| generic_extension(black_box(&h)).unwrap()));
    g.finish();
}

criterion_group!(benches, rewriting, axioms, galois, cohomology, generic);
criterion_main!(benches);
