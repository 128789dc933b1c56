use osculate_core::arith::{int, Field, QuadExt, Rational};
use osculate_core::classify::classify_double_point;
use osculate_core::geometry::{implicitize, PlaneParameterization};
use osculate_core::poly::{poly_gcd, squarefree_multivariate, Poly};
use osculate_core::xk::{classify_all_singularities, x2_census, xk_is_empty, CensusPoint, LabelSource};

fn param(text: &str) -> PlaneParameterization {
    PlaneParameterization::parse(text).unwrap()
}

// Parameters over a rational image point, as the binary form gcd of the
// cross products P_j f_i - P_i f_j.
fn fiber(p: &PlaneParameterization, point: &[Rational]) -> Poly<Rational> {
    let f = p.forms();
    let mut g = Poly::zero(f[0].ring());
    for i in 0..3 {
        for j in i + 1..3 {
            g = poly_gcd(&g, &(&f[i].scale(&point[j]) - &f[j].scale(&point[i])));
        }
    }
    g
}

fn rational_image(pt: &CensusPoint) -> Option<Vec<Rational>> {
    pt.image.as_ref()?.iter().map(QuadExt::to_rational).collect()
}

fn check_cross_module(p: &PlaneParameterization) {
    let census = classify_all_singularities(p).unwrap();
    assert!(census.length_law, "{p}");
    let equation = implicitize(p).unwrap().equation;
    for pt in &census.points {
        assert_eq!(pt.delta_consistent(), Some(true), "{pt:?}");
        let s = pt.s.unwrap();
        // One branch exactly when the point lies on the cusp conic.
        assert_eq!(pt.cusp, s % 2 == 0, "{pt:?}");
        let Some(image) = rational_image(pt) else { continue };
        assert_eq!(pt.label_source, Some(LabelSource::Classifier));
        let direct = classify_double_point(&equation, &image, None).unwrap();
        assert_eq!(direct.verdict.s(), Some(s));
        let u = fiber(p, &image);
        let distinct = squarefree_multivariate(&u).unwrap().total_degree();
        assert_eq!(u.total_degree(), Some(2), "{pt:?}: fiber {u}");
        assert_eq!(distinct, Some(if pt.cusp { 1 } else { 2 }), "{pt:?}: fiber {u}");
    }
}

#[test]
fn oscnode_quartic() {
    // (y - x^2)^2 = y^3 in the chart z = 1, up to coordinates.
    let p = param("s^3*t - s*t^3; s^4 - 2*s^2*t^2 + t^4; s^4");
    let census = classify_all_singularities(&p).unwrap();
    assert_eq!(census.x2_length, 3);
    assert_eq!(census.points.len(), 1);
    let pt = &census.points[0];
    assert_eq!((pt.delta, pt.cusp, pt.s), (3, false, Some(5)));
    assert!(xk_is_empty(&p, 3).unwrap());
    check_cross_module(&p);
}

#[test]
fn tacnode_quartic() {
    let p = param("s^3*t + s*t^3; s^2*t^2; s^4 - t^4");
    let census = classify_all_singularities(&p).unwrap();
    let labels: Vec<(u64, Option<u32>)> = census.points.iter().map(|pt| (pt.delta, pt.s)).collect();
    assert!(labels.contains(&(2, Some(3))), "{labels:?}");
    assert_eq!(census.total_delta(), 3);
    check_cross_module(&p);
}

#[test]
fn cuspidal_and_nodal_cubics() {
    for text in ["s^2*t - t^3; s^3 - s*t^2; t^3", "s^2*t; s^3; t^3"] {
        check_cross_module(&param(text));
    }
    let cusp = x2_census(&param("s^2*t; s^3; t^3")).unwrap();
    assert_eq!(cusp.cusp_count(), 1);
}

#[test]
fn quartic_with_three_nodes() {
    // Three double points from three pairs of parameters.
    let p = param("s^4 + 2*s^3*t - s*t^3; s^2*t^2 + t^4; s^3*t - 3*s^2*t^2 + 2*t^4");
    let census = classify_all_singularities(&p).unwrap();
    assert_eq!(census.total_delta(), 3);
    assert!(xk_is_empty(&p, 3).unwrap());
    check_cross_module(&p);
}

#[test]
fn sextic_census() {
    let p = param("s^6 + t^6; -s^5*t + 3*s*t^5 - s^3*t^3; 9*s^2*t^4 + s^4*t^2 - s^3*t^3");
    let census = classify_all_singularities(&p).unwrap();
    assert_eq!((census.x2_length, census.support_size, census.total_delta()), (10, 8, 10));
    assert_eq!(census.cusp_count(), 0);
    let oscnode = census.points.iter().find(|pt| pt.delta == 3).unwrap();
    let zero = QuadExt::rational(int(0));
    let one = QuadExt::rational(int(1));
    assert_eq!(oscnode.coords, Some(vec![zero.clone(), one.clone(), zero.clone()]));
    assert_eq!(oscnode.image, Some(vec![one, zero.clone(), zero]));
    assert_eq!(oscnode.s, Some(5));
    let cluster = census.points.iter().find(|pt| pt.cluster_size == 7).unwrap();
    assert_eq!((cluster.delta, cluster.s, cluster.label_source), (1, Some(1), Some(LabelSource::Inferred)));
    check_cross_module(&p);
    assert!(!Field::is_zero(&implicitize(&p).unwrap().equation.eval(&[int(1), int(1), int(1)])));
}
