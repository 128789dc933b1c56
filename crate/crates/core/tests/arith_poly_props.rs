use num_bigint::BigInt;
use proptest::prelude::*;

use osculate_core::arith::{int, rat, squarefree_normalize, Field, QuadExt, Rational};
use osculate_core::poly::matrix::{determinant, inverse};
use osculate_core::poly::{order_at_zero, parse_poly, Monomial, Poly, PolyMatrix, PolyRing, RingRef};

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn quad(d: i64) -> impl Strategy<Value = QuadExt> {
    (rational(), rational()).prop_map(move |(a, b)| QuadExt::new(a, b, &int(d)).unwrap())
}

fn xyz() -> RingRef {
    PolyRing::of(&["x", "y", "z"])
}

fn poly(max_terms: usize) -> impl Strategy<Value = Poly<Rational>> {
    prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), -6i64..=6), 0..max_terms).prop_map(|terms| {
        Poly::from_terms(&xyz(), terms.into_iter().map(|((a, b, c), k)| (Monomial(vec![a, b, c]), int(k))))
    })
}

fn uni(max_terms: usize) -> impl Strategy<Value = Poly<Rational>> {
    let r = PolyRing::of(&["t"]);
    prop::collection::vec((0u32..6, -4i64..=4), 0..max_terms)
        .prop_map(move |terms| Poly::from_terms(&r, terms.into_iter().map(|(e, k)| (Monomial(vec![e]), int(k)))))
}

// Cofactor expansion along `row`, recursing on the minors.
fn cofactor(m: &[Vec<Rational>], row: usize) -> Rational {
    if m.len() == 1 {
        return m[0][0].clone();
    }
    (0..m.len()).fold(int(0), |acc, j| {
        let minor: Vec<Vec<Rational>> = (0..m.len())
            .filter(|&i| i != row)
            .map(|i| (0..m.len()).filter(|&k| k != j).map(|k| m[i][k].clone()).collect())
            .collect();
        let term = &m[row][j] * cofactor(&minor, 0);
        if (row + j).is_multiple_of(2) {
            acc + term
        } else {
            acc - term
        }
    })
}

fn matrix(n: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    prop::collection::vec(prop::collection::vec((-5i64..=5).prop_map(int), n), n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_field_laws(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        if let Some(i) = a.inv() {
            prop_assert!(a.mul(&i).is_one());
        } else {
            prop_assert!(Field::is_zero(&a));
        }
    }

    #[test]
    fn quadext_field_laws(a in quad(-1), b in quad(-1), c in quad(-1)) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        if let Some(i) = a.inv() {
            prop_assert!(a.mul(&i).is_one());
        }
        prop_assert_eq!(a.sub(&a), QuadExt::zero());
    }

    #[test]
    fn norm_is_multiplicative(a in quad(5), b in quad(5)) {
        prop_assert_eq!(a.mul(&b).norm(), a.norm() * b.norm());
        prop_assert_eq!(a.mul(&a.conjugate()).to_rational(), Some(a.norm()));
    }

    #[test]
    fn normalization_is_idempotent(n in -400i64..=400, d in 1i64..=60) {
        prop_assume!(n != 0);
        let r = Rational::new(BigInt::from(n), BigInt::from(d));
        prop_assert_eq!(Rational::new(r.numer().clone(), r.denom().clone()), r.clone());
        let (scale, core) = squarefree_normalize(&r);
        let (scale2, core2) = squarefree_normalize(&Rational::from_integer(core.clone()));
        prop_assert_eq!(&core2, &core);
        prop_assert_eq!(scale2, int(1));
        prop_assert_eq!(scale.clone() * scale * Rational::from_integer(core), r);
    }

    #[test]
    fn quadext_text_round_trip(a in quad(-3)) {
        prop_assert_eq!(QuadExt::parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn ring_laws(f in poly(5), g in poly(5), h in poly(5)) {
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&(&f + &g) - &g, f.clone());
        prop_assert_eq!(parse_poly::<Rational>(&f.to_string(), &xyz()).unwrap(), f);
    }

    #[test]
    fn substitute_is_a_homomorphism(f in poly(4), g in poly(4), a in poly(3), b in poly(3), c in poly(3)) {
        let images = [a, b, c];
        let lhs = (&f * &g).substitute(&images).unwrap();
        let rhs = &f.substitute(&images).unwrap() * &g.substitute(&images).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn order_at_zero_is_additive(u in uni(4), v in uni(4)) {
        let lhs = order_at_zero(&(&u * &v)).unwrap();
        let rhs = order_at_zero(&u).unwrap() + order_at_zero(&v).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn linear_change_inverts(f in poly(5), m in matrix(3)) {
        prop_assume!(!Field::is_zero(&determinant(&m)));
        let m_inv = inverse(&m).unwrap();
        prop_assert_eq!(f.linear_change(&m).unwrap().linear_change(&m_inv).unwrap(), f);
    }

    #[test]
    fn determinant_matches_row_expansion(m in matrix(4), row in 0usize..4) {
        prop_assert_eq!(cofactor(&m, row), determinant(&m));
        let ring = xyz();
        let pm = PolyMatrix::from_rows(&ring, m.iter().map(|r| r.iter().map(|c| Poly::constant(&ring, c.clone())).collect()).collect()).unwrap();
        prop_assert_eq!(pm.determinant().unwrap().constant_value().unwrap_or_else(|| int(0)), determinant(&m));
    }
}
