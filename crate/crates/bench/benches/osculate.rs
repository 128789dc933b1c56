use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use osculate_core::arith::{int, Rational};
use osculate_core::classify::classify_double_point;
use osculate_core::geometry::{implicitize, project_scheme, LinearCenter, PlaneParameterization, RationalNormalCurve};
use osculate_core::groebner::{hilbert_function, zero_dim_radical};
use osculate_core::poly::{parse_poly, PolyRing};
use osculate_core::xk::{x2_census, xk_ideal};

const SEXTIC: &str = "s^6 + t^6; -s^5*t + 3*s*t^5 - s^3*t^3; 9*s^2*t^4 + s^4*t^2 - s^3*t^3";

fn normal_forms(c: &mut Criterion) {
    let ring = PolyRing::of(&["x", "y", "z"]);
    let origin: Vec<Rational> = vec![int(0), int(0), int(1)];
    let mut group = c.benchmark_group("classify_normal_form");
    for s in [1u32, 4, 8, 12] {
        // A shear keeps the tangent off the coordinate axes.
        let text = format!("(y - x)^2*z^{} - x^{}", s - 1, s + 1);
        let f = parse_poly::<Rational>(&text, &ring).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(s), &f, |b, f| {
            b.iter(|| classify_double_point(black_box(f), &origin, None).unwrap())
        });
    }
    group.finish();
}

fn groebner(c: &mut Criterion) {
    let curve = RationalNormalCurve::with_letters(6).unwrap();
    let center = LinearCenter::parse("a + g; 3*f - b - d; 9*e + c - d", curve.ring()).unwrap();
    let four = curve.fat_endpoints(4).unwrap();
    c.bench_function("project_fat_endpoints", |b| {
        b.iter(|| project_scheme(black_box(&four), &center, &["u", "v", "w"]).unwrap())
    });
    let p = PlaneParameterization::parse(SEXTIC).unwrap();
    let x2 = xk_ideal(&p, 2).unwrap();
    c.bench_function("hilbert_x2_sextic", |b| b.iter(|| hilbert_function(black_box(&x2), 6).unwrap()));
    c.bench_function("radical_x2_sextic", |b| b.iter(|| zero_dim_radical(black_box(&x2), 1).unwrap()));
}

fn rational_curves(c: &mut Criterion) {
    let p = PlaneParameterization::parse(SEXTIC).unwrap();
    let mut group = c.benchmark_group("rational_curves");
    group.sample_size(10);
    group.bench_function("implicitize_sextic", |b| b.iter(|| implicitize(black_box(&p)).unwrap()));
    group.bench_function("x2_census_sextic", |b| b.iter(|| x2_census(black_box(&p)).unwrap()));
    group.finish();
}

criterion_group!(benches, normal_forms, groebner, rational_curves);
criterion_main!(benches);
