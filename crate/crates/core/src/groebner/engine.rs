//! Buchberger's algorithm on an internal representation: terms sorted by the
//! term order, exponents written in significance order.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use super::order::TermOrder;
use crate::arith::Rational;
use crate::poly::{Monomial, Poly, RingRef};

#[derive(Clone, Debug)]
pub(crate) struct Term {
    pub exp: Vec<u32>,
    pub mask: u64,
    pub coef: Rational,
}

fn mask_of(e: &[u32]) -> u64 {
    e.iter().enumerate().fold(0u64, |m, (i, &x)| if x > 0 { m | (1 << (i % 64)) } else { m })
}

/// Polynomial with terms in strictly descending order.
#[derive(Clone, Debug, Default)]
pub(crate) struct GPoly {
    pub terms: Vec<Term>,
}

impl GPoly {
    pub fn from_poly(p: &Poly<Rational>, ord: &TermOrder) -> Self {
        let mut terms: Vec<Term> = p
            .terms()
            .map(|(m, c)| {
                let exp = ord.to_sig(&m.0);
                Term { mask: mask_of(&exp), exp, coef: c.clone() }
            })
            .collect();
        terms.sort_by(|a, b| ord.cmp_sig(&b.exp, &a.exp));
        GPoly { terms }
    }

    pub fn to_poly(&self, ring: &RingRef, ord: &TermOrder) -> Poly<Rational> {
        Poly::from_terms(ring, self.terms.iter().map(|t| (Monomial(ord.unsig(&t.exp)), t.coef.clone())))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> &Term {
        &self.terms[0]
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|t| t.exp.iter().sum::<u32>()).max().unwrap_or(0)
    }

    pub fn make_monic(&mut self) {
        if let Some(t) = self.terms.first() {
            if !t.coef.is_one() {
                let inv = t.coef.recip();
                for t in &mut self.terms {
                    t.coef = &t.coef * &inv;
                }
            }
        }
    }

    /// `self - c * x^m * g`.
    fn sub_mul(&self, c: &Rational, m: &[u32], g: &GPoly, ord: &TermOrder) -> GPoly {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let shifted = g.terms.iter().map(|t| {
            let exp: Vec<u32> = t.exp.iter().zip(m).map(|(x, y)| x + y).collect();
            Term { mask: mask_of(&exp), exp, coef: -(c * &t.coef) }
        });
        for b in shifted {
            while let Some(x) = a.peek() {
                if ord.cmp_sig(&x.exp, &b.exp) == Ordering::Greater {
                    out.push(a.next().unwrap().clone());
                } else {
                    break;
                }
            }
            match a.peek() {
                Some(x) if x.exp == b.exp => {
                    let s = &x.coef + &b.coef;
                    a.next();
                    if !s.is_zero() {
                        out.push(Term { coef: s, ..b });
                    }
                }
                _ => out.push(b),
            }
        }
        out.extend(a.cloned());
        GPoly { terms: out }
    }
}

fn divides(a: &Term, b: &Term) -> bool {
    a.mask & !b.mask == 0 && a.exp.iter().zip(&b.exp).all(|(x, y)| x <= y)
}

fn quotient(a: &[u32], b: &[u32]) -> Vec<u32> {
    b.iter().zip(a).map(|(x, y)| x - y).collect()
}

fn lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn exp_divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

/// Reduces `p` completely modulo monic `basis`.
pub(crate) fn reduce_full(p: &GPoly, basis: &[GPoly], ord: &TermOrder) -> GPoly {
    let mut p = p.clone();
    let mut done: Vec<Term> = Vec::new();
    while let Some(lt) = p.terms.first() {
        match basis.iter().find(|g| divides(g.lead(), lt)) {
            Some(g) => {
                let m = quotient(&g.lead().exp, &lt.exp);
                let c = lt.coef.clone();
                p = p.sub_mul(&c, &m, g, ord);
            }
            None => {
                done.push(p.terms.remove(0));
            }
        }
    }
    GPoly { terms: done }
}

/// Reduces only the leading term until it is irreducible.
fn reduce_lead(p: &GPoly, basis: &[GPoly], active: &[bool], ord: &TermOrder) -> GPoly {
    let mut p = p.clone();
    'outer: while let Some(lt) = p.terms.first() {
        for (g, &on) in basis.iter().zip(active) {
            if on && divides(g.lead(), lt) {
                let m = quotient(&g.lead().exp, &lt.exp);
                let c = lt.coef.clone();
                p = p.sub_mul(&c, &m, g, ord);
                continue 'outer;
            }
        }
        break;
    }
    p
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Vec<u32>,
    sugar: u32,
}

fn spoly(f: &GPoly, g: &GPoly, l: &[u32], ord: &TermOrder) -> GPoly {
    let mf = quotient(&f.lead().exp, l);
    let mg = quotient(&g.lead().exp, l);
    let shifted = GPoly {
        terms: f
            .terms
            .iter()
            .map(|t| {
                let exp: Vec<u32> = t.exp.iter().zip(&mf).map(|(x, y)| x + y).collect();
                Term { mask: mask_of(&exp), exp, coef: t.coef.clone() }
            })
            .collect(),
    };
    shifted.sub_mul(&Rational::one(), &mg, g, ord)
}

/// Reduced Groebner basis (monic, ascending leading terms) of the ideal
/// generated by `gens`.
pub(crate) fn buchberger(gens: Vec<GPoly>, ord: &TermOrder) -> Vec<GPoly> {
    let mut basis: Vec<GPoly> = Vec::new();
    let mut sugar: Vec<u32> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut input: Vec<GPoly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
    input.sort_by(|a, b| ord.cmp_sig(&a.lead().exp, &b.lead().exp));
    for f in input {
        let mut h = reduce_lead(&f, &basis, &active, ord);
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        let s = h.degree();
        update(&mut basis, &mut sugar, &mut active, &mut pairs, h, s);
    }
    while !pairs.is_empty() {
        // Normal strategy: smallest lcm first, sugar breaks ties.
        let k = (0..pairs.len())
            .min_by(|&a, &b| ord.cmp_sig(&pairs[a].lcm, &pairs[b].lcm).then(pairs[a].sugar.cmp(&pairs[b].sugar)))
            .unwrap();
        let pair = pairs.swap_remove(k);
        let s = spoly(&basis[pair.i], &basis[pair.j], &pair.lcm, ord);
        let mut h = reduce_lead(&s, &basis, &active, ord);
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        update(&mut basis, &mut sugar, &mut active, &mut pairs, h, pair.sugar);
    }
    finalize(basis, active, ord)
}

// Gebauer-Moeller installation of a new element.
fn update(
    basis: &mut Vec<GPoly>,
    sugar: &mut Vec<u32>,
    active: &mut Vec<bool>,
    pairs: &mut Vec<Pair>,
    h: GPoly,
    h_sugar: u32,
) {
    let k = basis.len();
    let hl = h.lead().exp.clone();
    let hdeg: u32 = hl.iter().sum();
    let candidates: Vec<(usize, Vec<u32>)> =
        (0..k).filter(|&i| active[i]).map(|i| (i, lcm(&basis[i].lead().exp, &hl))).collect();
    // Chain criterion among the new pairs, keeping one of equal lcms.
    let mut kept: Vec<(usize, Vec<u32>)> = Vec::new();
    for (idx, (i, l)) in candidates.iter().enumerate() {
        if coprime(&basis[*i].lead().exp, &hl) {
            kept.push((*i, l.clone()));
            continue;
        }
        let dominated = candidates
            .iter()
            .enumerate()
            .any(|(jdx, (_, l2))| jdx != idx && exp_divides(l2, l) && (l2 != l || jdx < idx))
            || kept.iter().any(|(_, l2)| exp_divides(l2, l));
        if !dominated {
            kept.push((*i, l.clone()));
        }
    }
    // Product criterion.
    let new_pairs: Vec<Pair> = kept
        .into_iter()
        .filter(|(i, _)| !coprime(&basis[*i].lead().exp, &hl))
        .map(|(i, l)| {
            let d: u32 = l.iter().sum();
            let si = sugar[i] + d - basis[i].lead().exp.iter().sum::<u32>();
            let sh = h_sugar + d - hdeg;
            Pair { i, j: k, lcm: l, sugar: si.max(sh) }
        })
        .collect();
    pairs.retain(|p| {
        !exp_divides(&hl, &p.lcm)
            || lcm(&basis[p.i].lead().exp, &hl) == p.lcm
            || lcm(&basis[p.j].lead().exp, &hl) == p.lcm
    });
    pairs.extend(new_pairs);
    for i in 0..k {
        if active[i] && exp_divides(&hl, &basis[i].lead().exp) {
            active[i] = false;
        }
    }
    basis.push(h);
    sugar.push(h_sugar);
    active.push(true);
}

fn finalize(basis: Vec<GPoly>, active: Vec<bool>, ord: &TermOrder) -> Vec<GPoly> {
    let mut min: Vec<GPoly> = basis.into_iter().zip(active).filter(|(_, a)| *a).map(|(g, _)| g).collect();
    min.sort_by(|a, b| ord.cmp_sig(&a.lead().exp, &b.lead().exp));
    let mut keep: Vec<GPoly> = Vec::new();
    for g in min {
        if !keep.iter().any(|k| divides(k.lead(), g.lead())) {
            keep.push(g);
        }
    }
    let mut out = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<GPoly> = keep.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()).collect();
        let lead = keep[i].terms[0].clone();
        let tail = GPoly { terms: keep[i].terms[1..].to_vec() };
        let mut r = reduce_full(&tail, &others, ord);
        r.terms.insert(0, lead);
        r.make_monic();
        out.push(r);
    }
    out
}
