use std::fmt;
use std::ops;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::polynomial::Poly;
use super::ring::{Monomial, RingRef};
use crate::arith::{Field, Rational};
use crate::error::{Error, Result};

/// Order of vanishing or intersection number: a natural number or infinity.
///
/// Serializes as the number itself or the string `"inf"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "OrderRepr", try_from = "OrderRepr")]
pub enum Order {
    Finite(u32),
    Infinite,
}

impl Order {
    pub fn finite(self) -> Option<u32> {
        match self {
            Order::Finite(n) => Some(n),
            Order::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Order::Infinite
    }
}

#[derive(Clone, Serialize, Deserialize)]
#[serde(untagged)]
enum OrderRepr {
    Finite(u32),
    Text(String),
}

impl From<Order> for OrderRepr {
    fn from(o: Order) -> Self {
        match o {
            Order::Finite(n) => OrderRepr::Finite(n),
            Order::Infinite => OrderRepr::Text("inf".into()),
        }
    }
}

impl TryFrom<OrderRepr> for Order {
    type Error = String;
    fn try_from(r: OrderRepr) -> std::result::Result<Self, String> {
        match r {
            OrderRepr::Finite(n) => Ok(Order::Finite(n)),
            OrderRepr::Text(t) if t == "inf" => Ok(Order::Infinite),
            OrderRepr::Text(t) => Err(format!("expected a number or \"inf\", got {t:?}")),
        }
    }
}

impl ops::Add for Order {
    type Output = Order;
    fn add(self, rhs: Order) -> Order {
        match (self, rhs) {
            (Order::Finite(a), Order::Finite(b)) => Order::Finite(a + b),
            _ => Order::Infinite,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => write!(f, "inf"),
        }
    }
}

/// Dense univariate polynomial, coefficients from degree 0 upward, with no
/// trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UniPoly<F: Field> {
    coeffs: Vec<F>,
}

impl<F: Field> UniPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(F::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: F, k: usize) -> Self {
        let mut v = vec![F::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(F::zero)
    }

    pub fn order_at_zero(&self) -> Order {
        self.coeffs.iter().position(|c| !c.is_zero()).map_or(Order::Infinite, |k| Order::Finite(k as u32))
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k).add(&o.coeff(k))).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k).sub(&o.coeff(k))).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn monic(&self) -> Self {
        match self.lc().inv() {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let inv = d.lc().inv().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![F::zero(); self.coeffs.len().saturating_sub(dd).max(1)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let q = rem.last().unwrap().mul(&inv);
            for (j, c) in d.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].sub(&q.mul(c));
            }
            quot[k] = q;
            rem.pop();
            while rem.last().is_some_and(F::is_zero) {
                rem.pop();
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c.mul(&F::from_int(k as i64))).collect())
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs.iter().rev().fold(F::zero(), |acc, c| acc.mul(x).add(c))
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, o: &Self) -> Self {
        F::uni_gcd(self, o)
    }

    /// `u / gcd(u, u')`, monic. Errors on the zero polynomial.
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::InvalidArgument("square-free part of zero".into()));
        }
        let g = self.gcd(&self.derivative());
        Ok(self.divrem(&g).0.monic())
    }

    pub fn to_poly(&self, ring: &RingRef, var: usize) -> Poly<F> {
        Poly::from_terms(
            ring,
            self.coeffs.iter().enumerate().map(|(k, c)| (Monomial::var(ring.nvars(), var, k as u32), c.clone())),
        )
    }

    /// Reads a polynomial in which only `var` occurs.
    pub fn from_poly(p: &Poly<F>, var: usize) -> Result<Self> {
        if p.vars_used().iter().any(|&v| v != var) {
            return Err(Error::NotUnivariate);
        }
        let mut coeffs = vec![F::zero(); p.degree_in(var).map_or(0, |d| d as usize + 1)];
        for (m, c) in p.terms() {
            coeffs[m.0[var] as usize] = c.clone();
        }
        Ok(Self::new(coeffs))
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> UniPoly<G> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }
}

/// Euclid's algorithm with monic remainders.
pub fn euclid_gcd<F: Field>(a: &UniPoly<F>, b: &UniPoly<F>) -> UniPoly<F> {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let r = a.divrem(&b).1;
        a = b;
        b = r.monic();
    }
    a.monic()
}

/// Integer content-free representative of a rational polynomial, with a
/// positive leading coefficient.
pub fn primitive_integer(u: &UniPoly<Rational>) -> UniPoly<Rational> {
    if u.is_zero() {
        return u.clone();
    }
    let den = u.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = u.coeffs.iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect();
    let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if ints.last().unwrap().is_negative() {
        g = -g;
    }
    UniPoly::new(ints.into_iter().map(|c| Rational::from_integer(c / &g)).collect())
}

/// `lc(b)^(deg a - deg b + 1) * a mod b`, staying in the integers when the
/// inputs are integral.
fn pseudo_rem(a: &UniPoly<Rational>, b: &UniPoly<Rational>) -> UniPoly<Rational> {
    let db = b.degree().unwrap();
    let lb = b.lc();
    let mut r = a.clone();
    while r.degree().is_some_and(|d| d >= db) {
        let k = r.degree().unwrap() - db;
        let shifted = UniPoly::monomial(r.lc(), k).mul(b);
        r = r.scale(&lb).sub(&shifted);
    }
    r
}

/// Primitive pseudo-remainder sequence gcd over the integers.
pub fn primitive_prs_gcd(a: &UniPoly<Rational>, b: &UniPoly<Rational>) -> UniPoly<Rational> {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    let (mut a, mut b) = (primitive_integer(a), primitive_integer(b));
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        let r = pseudo_rem(&a, &b);
        if r.is_zero() {
            return b.monic();
        }
        if r.degree() == Some(0) {
            return UniPoly::constant(<Rational as One>::one());
        }
        a = b;
        b = primitive_integer(&r);
    }
}

/// Order of vanishing at 0 of a polynomial in at most one variable.
pub fn order_at_zero<F: Field>(u: &Poly<F>) -> Result<Order> {
    let used = u.vars_used();
    match used.as_slice() {
        [] => Ok(if u.is_zero() { Order::Infinite } else { Order::Finite(0) }),
        [v] => Ok(UniPoly::from_poly(u, *v)?.order_at_zero()),
        _ => Err(Error::NotUnivariate),
    }
}

/// Square-free part of a polynomial in at most one variable.
pub fn squarefree_part<F: Field>(u: &Poly<F>) -> Result<Poly<F>> {
    if u.is_zero() {
        return Err(Error::InvalidArgument("square-free part of zero".into()));
    }
    let used = u.vars_used();
    match used.as_slice() {
        [] => Ok(Poly::one(u.ring())),
        [v] => Ok(UniPoly::from_poly(u, *v)?.squarefree_part()?.to_poly(u.ring(), *v)),
        _ => Err(Error::NotUnivariate),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::poly::{parse_poly, PolyRing};

    fn up(v: &[i64]) -> UniPoly<Rational> {
        UniPoly::new(v.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn order_json() {
        assert_eq!(serde_json::to_string(&[Order::Finite(7), Order::Infinite]).unwrap(), r#"[7,"inf"]"#);
        let back: Vec<Order> = serde_json::from_str(r#"[3,"inf"]"#).unwrap();
        assert_eq!(back, vec![Order::Finite(3), Order::Infinite]);
        assert!(serde_json::from_str::<Order>(r#""many""#).is_err());
    }

    #[test]
    fn orders() {
        let r = PolyRing::of(&["x"]);
        let p: Poly<Rational> = parse_poly("-x^5 + x^7", &r).unwrap();
        assert_eq!(order_at_zero(&p).unwrap(), Order::Finite(5));
        assert_eq!(order_at_zero(&Poly::<Rational>::zero(&r)).unwrap(), Order::Infinite);
        assert_eq!(order_at_zero(&Poly::constant(&r, int(3))).unwrap(), Order::Finite(0));
        let r2 = PolyRing::of(&["x", "y"]);
        let q: Poly<Rational> = parse_poly("x*y", &r2).unwrap();
        assert_eq!(order_at_zero(&q), Err(Error::NotUnivariate));
        // univariate in the second variable of a bigger ring is fine
        let q: Poly<Rational> = parse_poly("y^3 + y^4", &r2).unwrap();
        assert_eq!(order_at_zero(&q).unwrap(), Order::Finite(3));
    }

    #[test]
    fn squarefree_examples() {
        let r = PolyRing::of(&["x"]);
        let p: Poly<Rational> = parse_poly("(x-1)^2*(x+2)", &r).unwrap();
        let want: Poly<Rational> = parse_poly("(x-1)*(x+2)", &r).unwrap();
        assert_eq!(squarefree_part(&p).unwrap(), want);
        let p: Poly<Rational> = parse_poly("x^3", &r).unwrap();
        assert_eq!(squarefree_part(&p).unwrap(), Poly::var(&r, 0));
        let p: Poly<Rational> = parse_poly("3*x^2 - 3", &r).unwrap();
        assert_eq!(squarefree_part(&p).unwrap(), p.monic());
        assert!(squarefree_part(&Poly::<Rational>::zero(&r)).is_err());
    }

    #[test]
    fn prs_matches_euclid() {
        let a = up(&[-6, 11, -6, 1]).mul(&up(&[5, 0, 3]));
        let b = up(&[-6, 11, -6, 1]).mul(&up(&[7, -1]));
        assert_eq!(primitive_prs_gcd(&a, &b), euclid_gcd(&a, &b));
        assert_eq!(primitive_prs_gcd(&a, &b), up(&[-6, 11, -6, 1]));
        assert_eq!(primitive_prs_gcd(&up(&[1, 1]), &up(&[-1, 1])), up(&[1]));
    }

    #[test]
    fn order_adds() {
        assert_eq!(Order::Finite(2) + Order::Finite(3), Order::Finite(5));
        assert_eq!(Order::Finite(2) + Order::Infinite, Order::Infinite);
        assert!(Order::Finite(1000) < Order::Infinite);
    }
}
