use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::ideal::{leading_monomial, Ideal};
use super::order::TermOrder;
use crate::error::{Error, Result};

/// Hilbert function of `S/I` for a homogeneous ideal, with its eventual
/// behaviour when the projective scheme is finite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    /// `values[d] = dim (S/I)_d`.
    pub values: Vec<u64>,
    /// Krull dimension of `S/I`.
    pub krull_dim: usize,
    /// Constant eventual value when `krull_dim <= 1`.
    pub stable_value: Option<u64>,
    /// First degree from which the value is `stable_value`.
    pub stable_from: Option<u32>,
    /// Numerator of the Hilbert series over `(1 - t)^krull_dim`.
    pub numerator: Vec<i64>,
}

impl HilbertData {
    /// Projective dimension; `-1` for the empty scheme.
    pub fn projective_dim(&self) -> i64 {
        self.krull_dim as i64 - 1
    }
}

/// Hilbert series numerator of `S / (monomials)` over `(1 - t)^n`.
fn numerator(mut gens: Vec<Vec<u32>>, n: usize) -> Vec<BigInt> {
    minimalize(&mut gens);
    // Pure powers only: the quotient is a tensor product.
    let pivot = gens.iter().find(|g| g.iter().filter(|&&e| e > 0).count() > 1).cloned();
    let Some(g) = pivot else {
        let mut out = vec![BigInt::one()];
        for g in &gens {
            let d = g.iter().sum::<u32>() as usize;
            let mut next = vec![BigInt::zero(); out.len() + d];
            for (i, c) in out.iter().enumerate() {
                next[i] += c;
                next[i + d] -= c;
            }
            out = next;
        }
        return out;
    };
    // Pivot on the most frequent variable of a mixed generator.
    let v = (0..n).filter(|&v| g[v] > 0).max_by_key(|&v| gens.iter().filter(|h| h[v] > 0).count()).unwrap();
    let mut with_var = gens.clone();
    let mut unit = vec![0; n];
    unit[v] = 1;
    with_var.push(unit);
    let colon: Vec<Vec<u32>> = gens
        .iter()
        .map(|h| {
            let mut h = h.clone();
            h[v] = h[v].saturating_sub(1);
            h
        })
        .collect();
    let a = numerator(with_var, n);
    let b = numerator(colon, n);
    let mut out = vec![BigInt::zero(); a.len().max(b.len() + 1)];
    for (i, c) in a.into_iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.into_iter().enumerate() {
        out[i + 1] += c;
    }
    trim(&mut out);
    out
}

fn minimalize(gens: &mut Vec<Vec<u32>>) {
    gens.sort_by_key(|g| g.iter().sum::<u32>());
    let mut keep: Vec<Vec<u32>> = Vec::with_capacity(gens.len());
    for g in gens.drain(..) {
        if !keep.iter().any(|k| k.iter().zip(&g).all(|(a, b)| a <= b)) {
            keep.push(g);
        }
    }
    *gens = keep;
}

fn trim(p: &mut Vec<BigInt>) {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < k {
        return BigInt::zero();
    }
    let mut out = BigInt::one();
    for i in 0..k {
        out = out * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    out
}

/// Hilbert function of a homogeneous ideal for degrees `0..=up_to`, extended
/// far enough to show where it stabilizes.
pub fn hilbert_function(ideal: &Ideal, up_to: u32) -> Result<HilbertData> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let n = ideal.ring().nvars();
    let ord = TermOrder::grevlex(n);
    let leads: Vec<Vec<u32>> =
        ideal.groebner(&ord).iter().filter_map(|g| leading_monomial(g, &ord)).map(|m| m.0).collect();
    let mut num = numerator(leads, n);
    // Divide out (1 - t) while it is a factor.
    let mut dim = n;
    let unit = num.iter().all(Zero::is_zero);
    if unit {
        dim = 0;
    }
    while !unit && dim > 0 && num.iter().fold(BigInt::zero(), |s, c| s + c).is_zero() {
        let mut q = vec![BigInt::zero(); num.len() - 1];
        let mut acc = BigInt::zero();
        for (i, c) in num.iter().take(num.len() - 1).enumerate() {
            acc += c;
            q[i] = acc.clone();
        }
        num = q;
        trim(&mut num);
        dim -= 1;
    }
    let value = |d: u32| -> BigInt {
        if dim == 0 {
            return num.get(d as usize).cloned().unwrap_or_default();
        }
        num.iter().enumerate().map(|(i, c)| c * binomial(d as i64 - i as i64 + dim as i64 - 1, dim as i64 - 1)).sum()
    };
    let (stable_value, stable_from) = if dim <= 1 {
        let limit: BigInt = if dim == 0 { BigInt::zero() } else { num.iter().sum() };
        let mut from = num.len() as u32;
        while from > 0 && value(from - 1) == limit {
            from -= 1;
        }
        (limit.to_u64(), Some(from))
    } else {
        (None, None)
    };
    let top = up_to.max(stable_from.unwrap_or(0));
    let values = (0..=top)
        .map(|d| {
            let v = value(d);
            if v.is_negative() {
                0
            } else {
                v.to_u64().unwrap_or(u64::MAX)
            }
        })
        .collect();
    Ok(HilbertData {
        values,
        krull_dim: dim,
        stable_value,
        stable_from,
        numerator: num.iter().map(|c| c.to_i64().unwrap_or(i64::MAX)).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, PolyRing, RingRef};

    fn ideal(r: &RingRef, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|g| parse_poly(g, r).unwrap()).collect()).unwrap()
    }

    #[test]
    fn fat_point() {
        let r = PolyRing::of(&["x", "y", "z"]);
        let h = hilbert_function(&ideal(&r, &["x^2", "x*y", "y^2"]), 4).unwrap();
        assert_eq!(h.values, vec![1, 3, 3, 3, 3]);
        assert_eq!(h.stable_value, Some(3));
        assert_eq!(h.stable_from, Some(1));
        assert_eq!(h.krull_dim, 1);
    }

    #[test]
    fn plane_curve_and_empty() {
        let r = PolyRing::of(&["x", "y", "z"]);
        let h = hilbert_function(&ideal(&r, &["x^3 + y^3 + z^3"]), 5).unwrap();
        assert_eq!(h.values, vec![1, 3, 6, 9, 12, 15]);
        assert_eq!(h.stable_value, None);
        assert_eq!(h.krull_dim, 2);
        let e = hilbert_function(&ideal(&r, &["x^2", "y", "z^3"]), 2).unwrap();
        assert_eq!(e.krull_dim, 0);
        assert_eq!(e.stable_value, Some(0));
        assert_eq!(e.stable_from, Some(4));
        assert_eq!(e.values, vec![1, 2, 2, 1, 0]);
        let zero = hilbert_function(&Ideal::zero(&r), 2).unwrap();
        assert_eq!(zero.values, vec![1, 3, 6]);
    }

    #[test]
    fn three_points() {
        let r = PolyRing::of(&["x", "y", "z"]);
        // (1:0:0), (0:1:0), (0:0:1)
        let h = hilbert_function(&ideal(&r, &["x*y", "y*z", "x*z"]), 3).unwrap();
        assert_eq!(h.values, vec![1, 3, 3, 3]);
        assert!(hilbert_function(&ideal(&r, &["x - 1"]), 1).is_err());
    }
}
