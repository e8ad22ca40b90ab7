use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rpd_core::analysis::{fourier_coefficient, polygon_eigenvalues};
use rpd_core::matrices::{schoenberg_matrix_with, sym_eigenvalues};
use rpd_core::measures::{transition_density, RadialMeasure};
use rpd_core::specfun::{bessel_j, hyp2f1, omega};
use rpd_core::{parse_config, QuadratureSpec, RadialKernel};

fn special_functions(c: &mut Criterion) {
    let mut g = c.benchmark_group("specfun");
    for x in [0.5, 15.0, 250.0] {
        g.bench_with_input(BenchmarkId::new("bessel_j(7.5)", x), &x, |b, &x| b.iter(|| bessel_j(7.5, black_box(x))));
        g.bench_with_input(BenchmarkId::new("omega(5)", x), &x, |b, &x| b.iter(|| omega(5, black_box(x))));
    }
    g.bench_function("hyp2f1", |b| b.iter(|| hyp2f1(0.5, 1.5, 3.0, black_box(0.9))));
    g.finish();
}

fn quadrature(c: &mut Criterion) {
    let spec = QuadratureSpec::default();
    let cosine = RadialKernel::cosine(1.0).unwrap();
    c.bench_function("fourier_coefficient(cos, k=3)", |b| {
        b.iter(|| fourier_coefficient(&cosine, 3, black_box(2.0), &spec))
    });
    let gauss = RadialMeasure::gauss_family(6).unwrap();
    c.bench_function("transition(gauss:6 -> 3)", |b| {
        b.iter(|| transition_density(3, 3, &gauss, black_box(0.7), &spec))
    });
}

fn spectra(c: &mut Criterion) {
    let spec = QuadratureSpec::default();
    let k = RadialKernel::omega(2).unwrap();
    let mut g = c.benchmark_group("spectra");
    for m in [64usize, 1024, 4096] {
        g.bench_with_input(BenchmarkId::new("polygon", m), &m, |b, &m| b.iter(|| polygon_eigenvalues(&k, m, 10.0)));
    }
    let x = parse_config("random:2,200,1,10").unwrap();
    g.bench_function("dense(200)", |b| b.iter(|| sym_eigenvalues(&schoenberg_matrix_with(&k, &x, &spec).unwrap())));
    g.finish();
}

criterion_group!(benches, special_functions, quadrature, spectra);
criterion_main!(benches);
