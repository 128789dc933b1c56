use std::fmt;
use std::sync::OnceLock;

use super::engine::{buchberger, reduce_full, GPoly};
use super::order::TermOrder;
use crate::arith::{Field, Rational};
use crate::error::{Error, Result};
use crate::poly::matrix::inverse;
use crate::poly::{Monomial, Poly, PolyRing, RingRef};

/// Finite generating set of an ideal of `QQ[vars]`, with a write-once cache
/// of one reduced Groebner basis.
#[derive(Debug)]
pub struct Ideal {
    ring: RingRef,
    gens: Vec<Poly<Rational>>,
    cache: OnceLock<(TermOrder, Vec<Poly<Rational>>)>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let cache = OnceLock::new();
        if let Some(c) = self.cache.get() {
            let _ = cache.set(c.clone());
        }
        Ideal { ring: self.ring.clone(), gens: self.gens.clone(), cache }
    }
}

impl PartialEq for Ideal {
    /// Equality of generator lists; use [`Ideal::same_ideal`] for equality
    /// of ideals.
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.gens == other.gens
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &RingRef, gens: Vec<Poly<Rational>>) -> Result<Self> {
        if gens.iter().any(|g| g.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            cache: OnceLock::new(),
        })
    }

    pub fn zero(ring: &RingRef) -> Self {
        Ideal { ring: ring.clone(), gens: Vec::new(), cache: OnceLock::new() }
    }

    pub fn unit(ring: &RingRef) -> Self {
        Ideal { ring: ring.clone(), gens: vec![Poly::one(ring)], cache: OnceLock::new() }
    }

    /// The ideal generated by all variables.
    pub fn irrelevant(ring: &RingRef) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: (0..ring.nvars()).map(|i| Poly::var(ring, i)).collect(),
            cache: OnceLock::new(),
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly<Rational>] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Poly::is_homogeneous)
    }

    /// Reduced Groebner basis for `ord`, cached when it is the first one
    /// requested.
    pub fn groebner(&self, ord: &TermOrder) -> Vec<Poly<Rational>> {
        if let Some((o, gb)) = self.cache.get() {
            if o == ord {
                return gb.clone();
            }
        }
        let gb = groebner_basis(&self.gens, ord);
        let _ = self.cache.set((ord.clone(), gb.clone()));
        gb
    }

    pub fn grevlex_basis(&self) -> Vec<Poly<Rational>> {
        self.groebner(&TermOrder::grevlex(self.ring.nvars()))
    }

    pub fn is_unit(&self) -> bool {
        let gb = self.grevlex_basis();
        gb.len() == 1 && gb[0].is_constant()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, f: &Poly<Rational>) -> bool {
        let ord = TermOrder::grevlex(self.ring.nvars());
        normal_form(f, &self.groebner(&ord), &ord).is_zero()
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn same_ideal(&self, other: &Ideal) -> bool {
        self.ring == other.ring && self.grevlex_basis() == other.grevlex_basis()
    }

    /// The same ideal presented by its reduced grevlex basis.
    pub fn reduced(&self) -> Ideal {
        let gb = self.grevlex_basis();
        let out = Ideal { ring: self.ring.clone(), gens: gb.clone(), cache: OnceLock::new() };
        let _ = out.cache.set((TermOrder::grevlex(self.ring.nvars()), gb));
        out
    }

    /// Substitutes every generator; the result lives in the images' ring.
    pub fn map(&self, images: &[Poly<Rational>]) -> Result<Ideal> {
        let target = images.first().map(|p| p.ring().clone()).unwrap_or_else(|| self.ring.clone());
        let gens = self.gens.iter().map(|g| g.substitute(images)).collect::<Result<Vec<_>>>()?;
        Ideal::new(&target, gens)
    }

    /// Generators rewritten in `target`, matching variables by name.
    pub fn to_ring(&self, target: &RingRef) -> Result<Ideal> {
        Ideal::new(target, self.gens.iter().map(|g| g.to_ring(target)).collect::<Result<Vec<_>>>()?)
    }

    /// `f(M x)` for every generator.
    pub fn linear_change(&self, m: &[Vec<Rational>]) -> Result<Ideal> {
        Ideal::new(&self.ring, self.gens.iter().map(|g| g.linear_change(m)).collect::<Result<Vec<_>>>()?)
    }
}

pub(crate) fn groebner_basis(gens: &[Poly<Rational>], ord: &TermOrder) -> Vec<Poly<Rational>> {
    let Some(ring) = gens.first().map(|g| g.ring().clone()) else {
        return Vec::new();
    };
    let internal: Vec<GPoly> = gens.iter().map(|g| GPoly::from_poly(g, ord)).collect();
    buchberger(internal, ord).iter().map(|g| g.to_poly(&ring, ord)).collect()
}

/// Remainder of `f` modulo a reduced Groebner basis for `ord`.
pub fn normal_form(f: &Poly<Rational>, gb: &[Poly<Rational>], ord: &TermOrder) -> Poly<Rational> {
    let basis: Vec<GPoly> = gb.iter().map(|g| GPoly::from_poly(g, ord)).collect();
    reduce_full(&GPoly::from_poly(f, ord), &basis, ord).to_poly(f.ring(), ord)
}

/// Leading monomial of `f` (in ring order) for `ord`.
pub fn leading_monomial(f: &Poly<Rational>, ord: &TermOrder) -> Option<Monomial> {
    f.terms().map(|(m, _)| m).max_by(|a, b| ord.cmp(&a.0, &b.0)).cloned()
}

/// Reduced Groebner basis of `ideal` for `ord`.
pub fn buchberger_basis(ideal: &Ideal, ord: &TermOrder) -> Vec<Poly<Rational>> {
    ideal.groebner(ord)
}

/// `I` intersected with the subring of the variables not in `drop`, as an
/// ideal of that subring.
pub fn eliminate(ideal: &Ideal, drop: &[&str]) -> Result<Ideal> {
    let ring = ideal.ring();
    let idx = drop.iter().map(|v| ring.var_index(v)).collect::<Result<Vec<_>>>()?;
    let keep: Vec<String> = ring.vars().iter().filter(|v| !drop.contains(&v.as_str())).cloned().collect();
    let sub = PolyRing::new(&keep)?;
    if idx.is_empty() {
        return ideal.to_ring(&sub);
    }
    let ord = TermOrder::elimination(ring.nvars(), &idx)?;
    let gb = ideal.groebner(&ord);
    let gens = gb
        .into_iter()
        .filter(|g| idx.iter().all(|&i| g.degree_in(i).unwrap_or(0) == 0))
        .map(|g| g.to_ring(&sub))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(&sub, gens)
}

/// Eliminates `drop` and returns the result in the original ring.
fn eliminate_in_place(ideal: &Ideal, drop: &[usize]) -> Result<Vec<Poly<Rational>>> {
    let ord = TermOrder::elimination(ideal.ring().nvars(), drop)?;
    Ok(ideal.groebner(&ord).into_iter().filter(|g| drop.iter().all(|&i| g.degree_in(i).unwrap_or(0) == 0)).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombineOp {
    Sum,
    Product,
    Power(u32),
    Intersection,
}

pub fn ideal_combine(a: &Ideal, b: &Ideal, op: CombineOp) -> Result<Ideal> {
    if a.ring != b.ring {
        return Err(Error::RingMismatch);
    }
    match op {
        CombineOp::Sum => Ideal::new(&a.ring, a.gens.iter().chain(&b.gens).cloned().collect()),
        CombineOp::Product => {
            let mut gens = Vec::new();
            for f in &a.gens {
                for g in &b.gens {
                    push_unique(&mut gens, f * g);
                }
            }
            Ideal::new(&a.ring, gens)
        }
        CombineOp::Power(e) => ideal_power(a, e),
        CombineOp::Intersection => intersect(a, b),
    }
}

fn push_unique(gens: &mut Vec<Poly<Rational>>, p: Poly<Rational>) {
    if !p.is_zero() && !gens.contains(&p) {
        gens.push(p);
    }
}

/// `I^e`, generated by all products of `e` generators.
pub fn ideal_power(a: &Ideal, e: u32) -> Result<Ideal> {
    let mut gens = vec![Poly::one(&a.ring)];
    for _ in 0..e {
        let mut next = Vec::new();
        for p in &gens {
            for g in &a.gens {
                push_unique(&mut next, p * g);
            }
        }
        gens = next;
    }
    Ideal::new(&a.ring, gens)
}

/// `A ∩ B` by eliminating `t` from `t A + (1 - t) B`.
pub fn intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    if a.ring != b.ring {
        return Err(Error::RingMismatch);
    }
    if a.is_unit() {
        return Ok(b.clone());
    }
    if b.is_unit() {
        return Ok(a.clone());
    }
    if a.is_zero_ideal() || b.is_zero_ideal() {
        return Ok(Ideal::zero(&a.ring));
    }
    let t = a.ring.fresh_name("t");
    let big = a.ring.extend(&[t.as_str()])?;
    let tv = Poly::var(&big, big.nvars() - 1);
    let one_minus_t = &Poly::one(&big) - &tv;
    let mut gens = Vec::new();
    for g in &a.gens {
        gens.push(&tv * &g.to_ring(&big)?);
    }
    for g in &b.gens {
        gens.push(&one_minus_t * &g.to_ring(&big)?);
    }
    let kept = eliminate_in_place(&Ideal::new(&big, gens)?, &[big.nvars() - 1])?;
    Ideal::new(&a.ring, kept.iter().map(|g| g.to_ring(&a.ring)).collect::<Result<Vec<_>>>()?)
}

/// `I : h^∞`.
pub fn saturate_principal(ideal: &Ideal, h: &Poly<Rational>) -> Result<Ideal> {
    let ring = &ideal.ring;
    if h.ring() != ring {
        return Err(Error::RingMismatch);
    }
    if h.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    if h.is_constant() || ideal.is_zero_ideal() {
        return Ok(ideal.clone());
    }
    if ideal.is_homogeneous() && h.is_homogeneous() && h.total_degree() == Some(1) {
        return saturate_linear(ideal, h);
    }
    let t = ring.fresh_name("t");
    let big = ring.extend(&[t.as_str()])?;
    let tv = Poly::var(&big, big.nvars() - 1);
    let mut gens = vec![&Poly::one(&big) - &(&tv * &h.to_ring(&big)?)];
    for g in &ideal.gens {
        gens.push(g.to_ring(&big)?);
    }
    let kept = eliminate_in_place(&Ideal::new(&big, gens)?, &[big.nvars() - 1])?;
    Ideal::new(ring, kept.iter().map(|g| g.to_ring(ring)).collect::<Result<Vec<_>>>()?)
}

// Homogeneous ideal saturated by a linear form: after a change of
// coordinates making the form the last grevlex variable, the basis elements
// divided by their largest power of that variable generate the saturation.
fn saturate_linear(ideal: &Ideal, h: &Poly<Rational>) -> Result<Ideal> {
    let ring = &ideal.ring;
    let n = ring.nvars();
    let coeffs: Vec<Rational> = (0..n).map(|i| h.coefficient(&Monomial::var(n, i, 1))).collect();
    let k = coeffs.iter().position(|c| !Field::is_zero(c)).unwrap();
    // New coordinates X = A x with X_k = h.
    let mut a: Vec<Vec<Rational>> = crate::poly::matrix::identity(n);
    a[k] = coeffs;
    let a_inv = inverse(&a)?;
    let moved = ideal.linear_change(&a_inv)?;
    let ord = TermOrder::grevlex_with_last(n, k);
    let gb = moved.groebner(&ord);
    let mut gens = Vec::with_capacity(gb.len());
    for g in gb {
        let e = g.terms().map(|(m, _)| m.0[k]).min().unwrap_or(0);
        let stripped = if e == 0 {
            g
        } else {
            Poly::from_terms(
                ring,
                g.terms().map(|(m, c)| {
                    let mut m = m.clone();
                    m.0[k] -= e;
                    (m, c.clone())
                }),
            )
        };
        gens.push(stripped.linear_change(&a)?);
    }
    Ideal::new(ring, gens)
}

/// `I : J^∞`, saturating by each generator of `J` and intersecting.
pub fn saturate(ideal: &Ideal, by: &Ideal) -> Result<Ideal> {
    if ideal.ring != by.ring {
        return Err(Error::RingMismatch);
    }
    if by.is_zero_ideal() {
        return Ok(Ideal::unit(&ideal.ring));
    }
    let mut parts: Vec<Ideal> = Vec::new();
    for h in &by.gens {
        let s = saturate_principal(ideal, h)?;
        if s.same_ideal(ideal) {
            // I ⊆ I : J^∞ ⊆ I : h^∞ = I.
            return Ok(ideal.reduced());
        }
        if s.is_unit() {
            continue;
        }
        if !parts.iter().any(|p| s.contains_ideal(p)) {
            parts.retain(|p| !p.contains_ideal(&s));
            parts.push(s);
        }
    }
    let Some(first) = parts.pop() else {
        return Ok(Ideal::unit(&ideal.ring));
    };
    let mut acc = first;
    for p in parts {
        acc = intersect(&acc, &p)?;
    }
    Ok(acc.reduced())
}
