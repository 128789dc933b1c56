//! Factorization of univariate rational polynomials into irreducibles over
//! the rationals: square-free decomposition, factoring modulo a small prime,
//! Hensel lifting and recombination of the lifted factors.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::univariate::{primitive_integer, UniPoly};
use crate::arith::Rational;

/// Irreducible factors with multiplicities. Factors are primitive integer
/// polynomials with positive leading coefficient, sorted by degree and then
/// coefficients; constants are dropped.
pub fn factor_rational(u: &UniPoly<Rational>) -> Vec<(UniPoly<Rational>, u32)> {
    let mut out = Vec::new();
    for (part, mult) in squarefree_decomposition(u) {
        for f in factor_squarefree(&to_int(&primitive_integer(&part))) {
            out.push((from_int(&f), mult));
        }
    }
    out.sort_by(|a, b| {
        a.0.degree().cmp(&b.0.degree()).then_with(|| a.0.coeffs().iter().rev().cmp(b.0.coeffs().iter().rev()))
    });
    out
}

// Yun's algorithm.
fn squarefree_decomposition(u: &UniPoly<Rational>) -> Vec<(UniPoly<Rational>, u32)> {
    let mut out = Vec::new();
    if u.degree().unwrap_or(0) == 0 {
        return out;
    }
    let d = u.derivative();
    let a0 = u.gcd(&d);
    let mut b = u.divrem(&a0).0;
    let mut c = d.divrem(&a0).0;
    let mut dd = c.sub(&b.derivative());
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&dd);
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.clone(), i));
        }
        b = b.divrem(&a).0;
        c = dd.divrem(&a).0;
        dd = c.sub(&b.derivative());
        i += 1;
    }
    out
}

type ZPoly = Vec<BigInt>;

fn to_int(u: &UniPoly<Rational>) -> ZPoly {
    u.coeffs().iter().map(|c| c.to_integer()).collect()
}

fn from_int(f: &ZPoly) -> UniPoly<Rational> {
    UniPoly::new(f.iter().map(|c| Rational::from_integer(c.clone())).collect())
}

fn factor_squarefree(f: &ZPoly) -> Vec<ZPoly> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.clone()];
    }
    let lc = f[n].clone();
    // Among a few admissible primes keep the one giving the fewest factors.
    let mut best: Option<(u64, Vec<Vec<u64>>)> = None;
    let mut admissible = 0;
    for p in small_primes().into_iter().skip(1) {
        if (&lc % p).is_zero() {
            continue;
        }
        let fp = reduce(f, p);
        if fp.len() != f.len() || gcd_p(&fp, &deriv_p(&fp, p), p).len() != 1 {
            continue;
        }
        let factors = factor_mod_p(&monic_p(&fp, p), p);
        if factors.len() == 1 {
            return vec![f.clone()];
        }
        if best.as_ref().is_none_or(|(_, b)| factors.len() < b.len()) {
            best = Some((p, factors));
        }
        admissible += 1;
        if admissible == 5 {
            break;
        }
    }
    let (p, modular) = best.expect("an admissible prime exists");
    let bound = coefficient_bound(f);
    let mut modulus = BigInt::from(p);
    while modulus <= bound {
        modulus = &modulus * &modulus;
    }
    let lifted = multifactor_lift(f, &modular, p, &modulus);
    recombine(f, lifted, &modulus)
}

fn small_primes() -> Vec<u64> {
    let mut ps = Vec::new();
    let mut k = 2u64;
    while ps.len() < 400 {
        if ps.iter().take_while(|&&q| q * q <= k).all(|&q| !k.is_multiple_of(q)) {
            ps.push(k);
        }
        k += 1;
    }
    ps
}

// Twice a bound on the coefficients of any factor times |lc|.
fn coefficient_bound(f: &ZPoly) -> BigInt {
    let n = f.len() - 1;
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    let root = norm2.sqrt() + BigInt::one();
    BigInt::from(2) * (BigInt::one() << n) * root * f[n].abs()
}

fn recombine(f: &ZPoly, mut lifted: Vec<ZPoly>, m: &BigInt) -> Vec<ZPoly> {
    let mut f = f.clone();
    let mut out = Vec::new();
    let mut k = 1;
    while 2 * k <= lifted.len() {
        let mut found = false;
        for subset in super::matrix::combinations(lifted.len(), k) {
            let lc = f.last().unwrap().clone();
            let mut g = vec![lc];
            for &i in &subset {
                g = mul_mod(&g, &lifted[i], m);
            }
            let g = to_int(&primitive_integer(&from_int(&symmetric(&g, m))));
            if let Some(q) = divide_exact_z(&f, &g) {
                out.push(g);
                f = q;
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
                found = true;
                break;
            }
        }
        if !found {
            k += 1;
        }
    }
    if f.len() > 1 {
        out.push(to_int(&primitive_integer(&from_int(&f))));
    }
    out
}

fn divide_exact_z(f: &ZPoly, g: &ZPoly) -> Option<ZPoly> {
    let (q, r) = from_int(f).divrem(&from_int(g));
    if !r.is_zero() || q.coeffs().iter().any(|c| !c.is_integer()) {
        return None;
    }
    Some(to_int(&q))
}

fn symmetric(g: &ZPoly, m: &BigInt) -> ZPoly {
    let half = m / 2;
    g.iter()
        .map(|c| {
            let c = c.mod_floor(m);
            if c > half {
                c - m
            } else {
                c
            }
        })
        .collect()
}

// Integer polynomials modulo m (coefficients kept in [0, m)).

fn trim_z(mut a: ZPoly) -> ZPoly {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

fn reduce_z(a: &ZPoly, m: &BigInt) -> ZPoly {
    trim_z(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn add_mod(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    reduce_z(&(0..n).map(|i| a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z)).collect(), m)
}

fn sub_mod(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    reduce_z(&(0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect(), m)
}

fn mul_mod(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    reduce_z(&out, m)
}

fn inv_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    assert!(e.gcd.is_one(), "not invertible");
    e.x.mod_floor(m)
}

// Division by a polynomial with invertible leading coefficient.
fn divrem_mod(a: &ZPoly, b: &ZPoly, m: &BigInt) -> (ZPoly, ZPoly) {
    let db = b.len() - 1;
    let inv = inv_mod(&b[db], m);
    let mut r = reduce_z(a, m);
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    while r.len() > db {
        let k = r.len() - 1 - db;
        let c = (r.last().unwrap() * &inv).mod_floor(m);
        for (i, bc) in b.iter().enumerate() {
            r[i + k] = (&r[i + k] - &c * bc).mod_floor(m);
        }
        q[k] = c;
        r = trim_z(r);
    }
    (trim_z(q), r)
}

// One quadratic Hensel step: from f = g h, s g + t h = 1 modulo m, with h
// monic, to the same identities modulo m^2.
fn hensel_step(f: &ZPoly, g: &ZPoly, h: &ZPoly, s: &ZPoly, t: &ZPoly, m: &BigInt) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let m2 = m * m;
    let e = sub_mod(f, &mul_mod(g, h, &m2), &m2);
    let (q, r) = divrem_mod(&mul_mod(s, &e, &m2), h, &m2);
    let g2 = add_mod(&add_mod(g, &mul_mod(t, &e, &m2), &m2), &mul_mod(&q, g, &m2), &m2);
    let h2 = add_mod(h, &r, &m2);
    let b = sub_mod(&add_mod(&mul_mod(s, &g2, &m2), &mul_mod(t, &h2, &m2), &m2), &vec![BigInt::one()], &m2);
    let (c, d) = divrem_mod(&mul_mod(s, &b, &m2), &h2, &m2);
    let s2 = sub_mod(s, &d, &m2);
    let t2 = sub_mod(&sub_mod(t, &mul_mod(t, &b, &m2), &m2), &mul_mod(&c, &g2, &m2), &m2);
    (g2, h2, s2, t2)
}

// Lifts monic factors of f modulo p to monic factors modulo `modulus`.
fn multifactor_lift(f: &ZPoly, factors: &[Vec<u64>], p: u64, modulus: &BigInt) -> Vec<ZPoly> {
    let pb = BigInt::from(p);
    if factors.len() == 1 {
        let lc_inv = inv_mod(f.last().unwrap(), modulus);
        return vec![reduce_z(&f.iter().map(|c| c * &lc_inv).collect(), modulus)];
    }
    let lc = f.last().unwrap().mod_floor(&pb).to_u64().unwrap();
    let g0 = scale_p(&factors[0], lc, p);
    let h0 = factors[1..].iter().fold(vec![1u64], |acc, x| mul_p(&acc, x, p));
    let (s0, t0) = bezout_p(&g0, &h0, p);
    let z = |v: &Vec<u64>| -> ZPoly { v.iter().map(|&c| BigInt::from(c)).collect() };
    let (mut g, mut h, mut s, mut t) = (z(&g0), z(&h0), z(&s0), z(&t0));
    let mut m = pb;
    while &m < modulus {
        (g, h, s, t) = hensel_step(f, &g, &h, &s, &t, &m);
        m = &m * &m;
    }
    let lc_inv = inv_mod(&g.last().unwrap().clone(), &m);
    let first = reduce_z(&g.iter().map(|c| c * &lc_inv).collect(), &m);
    let mut out = vec![reduce_z(&first, modulus)];
    out.extend(multifactor_lift(&reduce_z(&h, modulus), &factors[1..], p, modulus));
    out
}

// Polynomials over F_p with u64 coefficients, low degree first.

fn reduce(f: &ZPoly, p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    trim_p(f.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect())
}

fn trim_p(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn pow_p(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_p(a: u64, p: u64) -> u64 {
    pow_p(a, p - 2, p)
}

fn scale_p(a: &[u64], c: u64, p: u64) -> Vec<u64> {
    trim_p(a.iter().map(|x| x * c % p).collect())
}

fn monic_p(a: &[u64], p: u64) -> Vec<u64> {
    scale_p(a, inv_p(*a.last().unwrap(), p), p)
}

fn sub_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    trim_p((0..n).map(|i| (a.get(i).unwrap_or(&0) + p - b.get(i).unwrap_or(&0)) % p).collect())
}

fn mul_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim_p(out)
}

fn divrem_p(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let db = b.len() - 1;
    let inv = inv_p(b[db], p);
    let mut r = a.to_vec();
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![0u64; r.len() - db];
    while r.len() > db {
        let k = r.len() - 1 - db;
        let c = r.last().unwrap() * inv % p;
        for (i, bc) in b.iter().enumerate() {
            r[i + k] = (r[i + k] + p - c * bc % p) % p;
        }
        q[k] = c;
        r = trim_p(r);
    }
    (trim_p(q), r)
}

fn gcd_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    while !b.is_empty() {
        let r = divrem_p(&a, &b, p).1;
        a = b;
        b = r;
    }
    if a.is_empty() {
        a
    } else {
        monic_p(&a, p)
    }
}

fn deriv_p(a: &[u64], p: u64) -> Vec<u64> {
    trim_p(a.iter().enumerate().skip(1).map(|(i, c)| (i as u64 % p) * c % p).collect())
}

// s, t with s g + t h = 1 modulo p, for coprime g and h.
fn bezout_p(g: &[u64], h: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let (mut r0, mut r1) = (g.to_vec(), h.to_vec());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = divrem_p(&r0, &r1, p);
        let s = sub_p(&s0, &mul_p(&q, &s1, p), p);
        let t = sub_p(&t0, &mul_p(&q, &t1, p), p);
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, s);
        (t0, t1) = (t1, t);
    }
    let inv = inv_p(r0[0], p);
    (scale_p(&s0, inv, p), scale_p(&t0, inv, p))
}

fn powmod_p(base: &[u64], e: &BigUint, m: &[u64], p: u64) -> Vec<u64> {
    let mut r = vec![1u64];
    let b = divrem_p(base, m, p).1;
    for i in (0..e.bits()).rev() {
        r = divrem_p(&mul_p(&r, &r, p), m, p).1;
        if e.bit(i) {
            r = divrem_p(&mul_p(&r, &b, p), m, p).1;
        }
    }
    r
}

// Distinct-degree then equal-degree (Cantor-Zassenhaus) factorization of a
// monic square-free polynomial modulo an odd prime.
fn factor_mod_p(f: &[u64], p: u64) -> Vec<Vec<u64>> {
    let x = vec![0u64, 1];
    let mut rest = f.to_vec();
    let mut h = x.clone();
    let mut d = 1;
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(p);
    while rest.len() > 2 * d {
        h = powmod_p(&h, &BigUint::from(p), &rest, p);
        let g = gcd_p(&rest, &sub_p(&h, &x, p), p);
        if g.len() > 1 {
            rest = divrem_p(&rest, &g, p).0;
            h = divrem_p(&h, &rest, p).1;
            split_equal_degree(&g, d, p, &mut rng, &mut out);
        }
        d += 1;
    }
    if rest.len() > 1 {
        out.push(rest);
    }
    out.sort();
    out
}

fn split_equal_degree(g: &[u64], d: usize, p: u64, rng: &mut ChaCha8Rng, out: &mut Vec<Vec<u64>>) {
    if g.len() - 1 == d {
        out.push(g.to_vec());
        return;
    }
    let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let a: Vec<u64> = trim_p((0..g.len() - 1).map(|_| rng.gen_range(0..p)).collect());
        if a.len() < 2 {
            continue;
        }
        let b = sub_p(&powmod_p(&a, &e, g, p), &[1], p);
        let c = gcd_p(g, &b, p);
        if c.len() > 1 && c.len() < g.len() {
            split_equal_degree(&c, d, p, rng, out);
            split_equal_degree(&divrem_p(g, &c, p).0, d, p, rng, out);
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn up(v: &[i64]) -> UniPoly<Rational> {
        UniPoly::new(v.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn splits_products() {
        // (x^2 + 1)(x - 3)^2 (2x + 5)(x^3 - x - 1)
        let f = up(&[1, 0, 1]).mul(&up(&[-3, 1])).mul(&up(&[-3, 1])).mul(&up(&[5, 2])).mul(&up(&[-1, -1, 0, 1]));
        let fs = factor_rational(&f.scale(&int(-7)));
        assert_eq!(fs, vec![(up(&[-3, 1]), 2), (up(&[5, 2]), 1), (up(&[1, 0, 1]), 1), (up(&[-1, -1, 0, 1]), 1)]);
    }

    #[test]
    fn irreducible_stays_whole() {
        // x^4 + 1 splits modulo every prime but not over Q.
        assert_eq!(factor_rational(&up(&[1, 0, 0, 0, 1])), vec![(up(&[1, 0, 0, 0, 1]), 1)]);
        assert_eq!(factor_rational(&up(&[-2, 0, 1])), vec![(up(&[-2, 0, 1]), 1)]);
    }

    #[test]
    fn swinnerton_dyer_like_product() {
        // (x^2 - 2)(x^2 - 3)(x^2 - 5)
        let f = up(&[-2, 0, 1]).mul(&up(&[-3, 0, 1])).mul(&up(&[-5, 0, 1]));
        let fs: Vec<_> = factor_rational(&f).into_iter().map(|(g, _)| g).collect();
        assert_eq!(fs, vec![up(&[-5, 0, 1]), up(&[-3, 0, 1]), up(&[-2, 0, 1])]);
    }
}
