use std::collections::BTreeMap;
use std::fmt;
use std::ops;

use super::ring::{Monomial, RingRef};
use crate::arith::Field;
use crate::error::{Error, Result};

/// Sparse multivariate polynomial: exponent vector to nonzero coefficient.
#[derive(Clone)]
pub struct Poly<F: Field> {
    ring: RingRef,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> PartialEq for Poly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl<F: Field> Eq for Poly<F> {}

impl<F: Field> Poly<F> {
    pub fn zero(ring: &RingRef) -> Self {
        Poly { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ring: &RingRef, c: F) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, F::one())
    }

    pub fn var(ring: &RingRef, i: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), i, 1), F::one())
    }

    pub fn var_named(ring: &RingRef, name: &str) -> Result<Self> {
        Ok(Self::var(ring, ring.var_index(name)?))
    }

    pub fn monomial(ring: &RingRef, m: Monomial, c: F) -> Self {
        debug_assert_eq!(m.0.len(), ring.nvars());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { ring: ring.clone(), terms }
    }

    /// Sums the given terms; repeated monomials accumulate.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, F)>>(ring: &RingRef, terms: I) -> Self {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &F) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                let s = o.get().add(c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    /// Terms in graded-lex descending order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &F)> + '_ {
        self.terms.iter().rev()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_value(&self) -> Option<F> {
        if self.is_zero() {
            return Some(F::zero());
        }
        self.is_constant().then(|| self.terms.values().next().unwrap().clone())
    }

    pub fn coefficient(&self, m: &Monomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    /// Leading term for the graded-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &F)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading().map(|(m, _)| m.degree())
    }

    pub fn lowest_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[i]).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Indices of the variables that actually occur.
    pub fn vars_used(&self) -> Vec<usize> {
        (0..self.ring.nvars()).filter(|&i| self.terms.keys().any(|m| m.0[i] > 0)).collect()
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &c.neg());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = Self::zero(&self.ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), &c1.mul(c2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Poly { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, a)| (m.clone(), a.mul(c))).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Poly { ring: self.ring.clone(), terms: self.terms.iter().map(|(k, a)| (k.mul(m), a.mul(c))).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Scales so that the leading (graded-lex) coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
            None => self.clone(),
        }
    }

    pub fn eval(&self, point: &[F]) -> F {
        assert_eq!(point.len(), self.ring.nvars(), "point has wrong dimension");
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t = t.mul(x);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Replaces variable `i` by `images[i]`; all images share one ring.
    pub fn substitute(&self, images: &[Poly<F>]) -> Result<Poly<F>> {
        if images.len() != self.ring.nvars() {
            return Err(Error::InvalidArgument(format!("expected {} images, got {}", self.ring.nvars(), images.len())));
        }
        let Some(target) = images.first().map(|p| p.ring.clone()) else {
            return Ok(Poly::constant(&self.ring, self.constant_value().unwrap_or_else(F::zero)));
        };
        if images.iter().any(|p| p.ring != target) {
            return Err(Error::RingMismatch);
        }
        let mut powers: Vec<Vec<Poly<F>>> = images.iter().map(|p| vec![Poly::one(&target), p.clone()]).collect();
        let mut out = Poly::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(&target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            for (k, v) in t.terms {
                out.add_term(k, &v);
            }
        }
        Ok(out)
    }

    /// Substitutes the named variables; every other variable maps to the
    /// variable of the same name in the images' ring.
    pub fn substitute_vars(&self, assignments: &[(&str, Poly<F>)]) -> Result<Poly<F>> {
        let Some(target) = assignments.first().map(|(_, p)| p.ring.clone()) else {
            return Ok(self.clone());
        };
        let mut images = Vec::with_capacity(self.ring.nvars());
        for name in self.ring.vars() {
            match assignments.iter().find(|(n, _)| n == name) {
                Some((_, p)) => images.push(p.clone()),
                None => {
                    let idx = target.index_of(name).ok_or(Error::RingMismatch)?;
                    images.push(Poly::var(&target, idx));
                }
            }
        }
        for (n, _) in assignments {
            self.ring.var_index(n)?;
        }
        self.substitute(&images)
    }

    /// `f(M x)`: variable `i` becomes `sum_j M[i][j] x_j`.
    pub fn linear_change(&self, m: &[Vec<F>]) -> Result<Poly<F>> {
        let n = self.ring.nvars();
        if m.len() != n || m.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidArgument("matrix size does not match the ring".into()));
        }
        if super::matrix::determinant(m).is_zero() {
            return Err(Error::SingularMatrix);
        }
        let images: Vec<Poly<F>> = m
            .iter()
            .map(|row| {
                Poly::from_terms(&self.ring, row.iter().enumerate().map(|(j, c)| (Monomial::var(n, j, 1), c.clone())))
            })
            .collect();
        self.substitute(&images)
    }

    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut k = m.clone();
            k.0[i] -= 1;
            out.add_term(k, &c.mul(&F::from_int(e as i64)));
        }
        out
    }

    /// Coefficients with respect to variable `i`: entry `k` is the
    /// coefficient of `x_i^k`, a polynomial free of `x_i`.
    pub fn coeffs_in(&self, i: usize) -> Vec<Poly<F>> {
        let deg = self.degree_in(i).unwrap_or(0) as usize;
        let mut out = vec![Self::zero(&self.ring); deg + 1];
        if self.is_zero() {
            return Vec::new();
        }
        for (m, c) in &self.terms {
            let e = m.0[i] as usize;
            let mut k = m.clone();
            k.0[i] = 0;
            out[e].add_term(k, c);
        }
        out
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide.
    pub fn div_exact(&self, d: &Poly<F>) -> Option<Poly<F>> {
        let (dm, dc) = d.leading()?;
        let dc_inv = dc.inv().unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.ring);
        while let Some((rm, rc)) = rem.leading() {
            if !dm.divides(rm) {
                return None;
            }
            let qm = dm.quotient_of(rm);
            let qc = rc.mul(&dc_inv);
            rem = &rem - &d.mul_monomial(&qm, &qc);
            quot.add_term(qm, &qc);
        }
        Some(quot)
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        let mut out = Poly::zero(&self.ring);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &f(c));
        }
        out
    }

    /// Re-expresses the polynomial in `target`, matching variables by name.
    pub fn to_ring(&self, target: &RingRef) -> Result<Poly<F>> {
        let map: Vec<Option<usize>> = self.ring.vars().iter().map(|v| target.index_of(v)).collect();
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut k = Monomial::one(target.nvars());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    let j = map[i].ok_or(Error::RingMismatch)?;
                    k.0[j] += e;
                }
            }
            out.add_term(k, c);
        }
        Ok(out)
    }

    /// Homogenizes with respect to variable `h`, which must not occur.
    pub fn homogenize(&self, h: usize) -> Self {
        let d = self.total_degree().unwrap_or(0);
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            let mut k = m.clone();
            k.0[h] += d - m.degree();
            out.add_term(k, c);
        }
        out
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let vars = self.ring.vars();
        for (idx, (m, c)) in self.terms().enumerate() {
            let mut coef = c.to_string();
            if c.is_compound() {
                coef = format!("({coef})");
            }
            let negative = coef.starts_with('-');
            let abs = if negative { coef[1..].to_string() } else { coef };
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            let factors: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| if e == 1 { vars[i].clone() } else { format!("{}^{e}", vars[i]) })
                    .collect();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs == "1" {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({self})", self.ring.vars().join(","))
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<F: Field> ops::$tr<&Poly<F>> for &Poly<F> {
            type Output = Poly<F>;
            fn $method(self, rhs: &Poly<F>) -> Poly<F> {
                self.$checked(rhs).expect("polynomials from different rings")
            }
        }
        impl<F: Field> ops::$tr<Poly<F>> for Poly<F> {
            type Output = Poly<F>;
            fn $method(self, rhs: Poly<F>) -> Poly<F> {
                (&self).$checked(&rhs).expect("polynomials from different rings")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl<F: Field> ops::Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        self.scale(&F::one().neg())
    }
}

impl<F: Field> ops::Neg for Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        -&self
    }
}
