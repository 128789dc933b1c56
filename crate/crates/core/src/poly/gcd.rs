//! Multivariate gcd over the rationals by recursive primitive pseudo-remainder
//! sequences.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::polynomial::Poly;
use super::ring::Monomial;
use super::univariate::{primitive_prs_gcd, UniPoly};
use crate::arith::Rational;
use crate::error::{Error, Result};

/// Scales `p` to integer coefficients with gcd 1 and a positive leading
/// coefficient.
pub fn primitive(p: &Poly<Rational>) -> Poly<Rational> {
    let Some((_, lc)) = p.leading() else {
        return p.clone();
    };
    let den = p.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let num =
        p.terms().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(&(c * Rational::from_integer(den.clone())).to_integer()));
    let mut s = Rational::new(den, num);
    if lc.is_negative() {
        s = -s;
    }
    p.scale(&s)
}

/// Greatest common divisor, normalized by [`primitive`]; the gcd of two
/// zeros is zero.
pub fn poly_gcd(a: &Poly<Rational>, b: &Poly<Rational>) -> Poly<Rational> {
    if a.is_zero() {
        return primitive(b);
    }
    if b.is_zero() {
        return primitive(a);
    }
    let mut used = a.vars_used();
    used.extend(b.vars_used());
    let Some(&v) = used.iter().max() else {
        return Poly::one(a.ring());
    };
    let da = a.degree_in(v).unwrap();
    let db = b.degree_in(v).unwrap();
    if da == 0 {
        return poly_gcd(a, &content(b, v));
    }
    if db == 0 {
        return poly_gcd(&content(a, v), b);
    }
    let ca = content(a, v);
    let cb = content(b, v);
    let gc = poly_gcd(&ca, &cb);
    let (mut x, mut y) = (a.div_exact(&ca).unwrap(), b.div_exact(&cb).unwrap());
    if da < db {
        std::mem::swap(&mut x, &mut y);
    }
    loop {
        let r = pseudo_rem(&x, &y, v);
        if r.is_zero() {
            return primitive(&(&gc * &primitive_part(&y, v)));
        }
        if r.degree_in(v) == Some(0) {
            return primitive(&gc);
        }
        x = y;
        y = primitive_part(&r, v);
    }
}

/// Gcd of the coefficients of `p` as a polynomial in variable `v`.
pub fn content(p: &Poly<Rational>, v: usize) -> Poly<Rational> {
    p.coeffs_in(v).iter().filter(|c| !c.is_zero()).fold(Poly::zero(p.ring()), |acc, c| poly_gcd(&acc, c))
}

fn primitive_part(p: &Poly<Rational>, v: usize) -> Poly<Rational> {
    p.div_exact(&content(p, v)).unwrap()
}

fn pseudo_rem(a: &Poly<Rational>, b: &Poly<Rational>, v: usize) -> Poly<Rational> {
    let n = a.ring().nvars();
    let db = b.degree_in(v).unwrap();
    let lb = b.coeffs_in(v).pop().unwrap();
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v).unwrap() >= db {
        let dr = r.degree_in(v).unwrap();
        let lr = r.coeffs_in(v).pop().unwrap();
        let shift = Poly::monomial(a.ring(), Monomial::var(n, v, dr - db), Rational::one());
        r = &(&r * &lb) - &(&(&lr * &shift) * b);
    }
    r
}

/// Product of the distinct irreducible factors of `p`, made primitive.
pub fn squarefree_multivariate(p: &Poly<Rational>) -> Result<Poly<Rational>> {
    if p.is_zero() {
        return Err(Error::InvalidArgument("square-free part of zero".into()));
    }
    if certified_squarefree(p) {
        return Ok(primitive(p));
    }
    let mut g = p.clone();
    for v in p.vars_used() {
        g = poly_gcd(&g, &p.derivative(v));
    }
    Ok(primitive(&p.div_exact(&g).expect("gcd divides")))
}

// A repeated factor involving `v` survives a specialization of the other
// variables that keeps the degree in `v`, so a trivial univariate gcd with
// the derivative for every variable proves `p` square-free.
pub(crate) fn certified_squarefree(p: &Poly<Rational>) -> bool {
    let n = p.ring().nvars();
    p.vars_used().into_iter().all(|v| {
        let coeffs = p.coeffs_in(v);
        (1..=4i64).any(|shift| {
            let point: Vec<Rational> =
                (0..n).map(|i| Rational::from_integer(BigInt::from(2 * i as i64 + 3 * shift + 1))).collect();
            let u = UniPoly::new(coeffs.iter().map(|c| c.eval(&point)).collect());
            u.degree() == Some(coeffs.len() - 1) && primitive_prs_gcd(&u, &u.derivative()).degree() == Some(0)
        })
    })
}

/// Splits off the largest monomial dividing every term.
pub fn monomial_content(p: &Poly<Rational>) -> (Monomial, Poly<Rational>) {
    let n = p.ring().nvars();
    let mut m: Option<Monomial> = None;
    for (k, _) in p.terms() {
        m = Some(match m {
            None => k.clone(),
            Some(acc) => Monomial(acc.0.iter().zip(&k.0).map(|(a, b)| *a.min(b)).collect()),
        });
    }
    let m = m.unwrap_or_else(|| Monomial::one(n));
    let rest = Poly::from_terms(p.ring(), p.terms().map(|(k, c)| (m.quotient_of(k), c.clone())));
    (m, rest)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, PolyRing, RingRef};

    fn p(s: &str, r: &RingRef) -> Poly<Rational> {
        parse_poly(s, r).unwrap()
    }

    #[test]
    fn gcd_of_products() {
        let r = PolyRing::of(&["x", "y", "z"]);
        let common = p("x*z - y^2", &r);
        let a = &common * &p("x + 2*y - z", &r);
        let b = &common * &p("3*x^2 - y*z + 1", &r);
        assert_eq!(poly_gcd(&a, &b), common);
        assert_eq!(poly_gcd(&p("x", &r), &p("y", &r)), Poly::one(&r));
        assert_eq!(poly_gcd(&p("2*x*y", &r), &p("4*x^2", &r)), p("x", &r));
    }

    #[test]
    fn squarefree_strips_powers() {
        let r = PolyRing::of(&["x", "y", "z"]);
        let f = p("x^4 - 2*x^2*y*z - y^3*z + y^2*z^2", &r);
        let sq = &(&f * &f) * &p("-3*x", &r);
        assert_eq!(squarefree_multivariate(&sq).unwrap(), primitive(&(&f * &p("x", &r))));
        let (m, rest) = monomial_content(&p("x^3*y - x^2*y^2", &r));
        assert_eq!(m, Monomial(vec![2, 1, 0]));
        assert_eq!(rest, p("x - y", &r));
    }
}
