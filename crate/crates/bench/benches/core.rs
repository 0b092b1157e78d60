use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use fueter_core::fueter::gaussian_fundamental_pair;
use fueter_core::numeric::{decay_scan, CompiledPair, GaussSeries};
use fueter_core::poly::{hermite_closed, hermite_rec, sample_pk};
use fueter_core::{fueter, seed, BladeMask, EvalPoint, ExactMultivector, Rational, SeedKind};

fn dense(m: usize, shift: i64) -> ExactMultivector {
    (0..1u32 << m).fold(ExactMultivector::zero(m), |acc, bits| {
        let q = Rational::new(
            (bits as i64 % 7 - 3 + shift).into(),
            (bits as i64 % 3 + 1).into(),
        );
        &acc + &ExactMultivector::blade(m, BladeMask::new(bits, m).unwrap(), q)
    })
}

fn geometric_product(c: &mut Criterion) {
    let mut g = c.benchmark_group("geometric_product");
    for m in [3, 5, 7] {
        let (a, b) = (dense(m, 0), dense(m, 1));
        g.bench_with_input(BenchmarkId::from_parameter(m), &m, |bch, _| {
            bch.iter(|| black_box(&a) * black_box(&b))
        });
    }
    g.finish();
}

fn hermite(c: &mut Criterion) {
    let mut g = c.benchmark_group("hermite");
    for n in [6, 12] {
        g.bench_with_input(BenchmarkId::new("rec", n), &n, |b, &n| {
            b.iter(|| hermite_rec(n, 5).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("closed", n), &n, |b, &n| {
            b.iter(|| hermite_closed(n, 5).unwrap())
        });
    }
    g.finish();
}

fn fueter_transform(c: &mut Criterion) {
    let mut g = c.benchmark_group("fueter");
    let pk = sample_pk(2, 7).unwrap();
    for kind in [SeedKind::InvZ, SeedKind::GaussFund, SeedKind::ZPow(10)] {
        let s = seed(kind).unwrap();
        g.bench_function(BenchmarkId::new("transform_and_vekua", kind.name()), |b| {
            b.iter(|| fueter(&s, 2, 7, &pk).unwrap().is_monogenic())
        });
    }
    g.finish();
}

fn series_eval(c: &mut Criterion) {
    let series = GaussSeries::new(5, 60).unwrap();
    let pt = EvalPoint::new(0.4, vec![0.3, -0.5, 0.2, 0.1, 0.6]);
    c.bench_function("gauss_series_m5_order60", |b| {
        b.iter(|| series.eval(black_box(&pt)).unwrap())
    });
    let closed = CompiledPair::new(&gaussian_fundamental_pair(5).unwrap());
    c.bench_function("gauss_fund_closed_m5", |b| {
        b.iter(|| closed.eval(black_box(&pt)).unwrap())
    });
}

fn scan(c: &mut Criterion) {
    let p = gaussian_fundamental_pair(3).unwrap();
    let mut g = c.benchmark_group("decay_scan_101x101");
    g.sample_size(10);
    for threads in [1, 4] {
        g.bench_with_input(BenchmarkId::from_parameter(threads), &threads, |b, &t| {
            b.iter(|| decay_scan(&p, 2.0, 3.0, 8.0, (101, 101), t).unwrap())
        });
    }
    g.finish();
}

criterion_group!(
    benches,
    geometric_product,
    hermite,
    fueter_transform,
    series_eval,
    scan
);
criterion_main!(benches);
