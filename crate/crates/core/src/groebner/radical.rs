use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::hilbert::hilbert_function;
use super::ideal::{normal_form, saturate, saturate_principal, Ideal};
use super::order::TermOrder;
use crate::arith::{Field, Rational};
use crate::error::{Error, Result};
use crate::poly::matrix::{identity, inverse, nullspace};
use crate::poly::{Monomial, Poly, UniPoly};

const ATTEMPTS: usize = 5;

/// Radical of a homogeneous ideal whose projective scheme is finite,
/// returned saturated. The unit ideal stands for the empty scheme.
///
/// A random linear form missing the support is moved to a coordinate, the
/// ideal is dehomogenized there, square-free minimal polynomials of the
/// remaining coordinates are adjoined, and the result is homogenized back.
pub fn zero_dim_radical(ideal: &Ideal, seed: u64) -> Result<Ideal> {
    let ring = ideal.ring().clone();
    let n = ring.nvars();
    let sat = saturate(ideal, &Ideal::irrelevant(&ring))?;
    let h = hilbert_function(&sat, 0)?;
    match h.krull_dim {
        0 => return Ok(Ideal::unit(&ring)),
        1 => {}
        _ => return Err(Error::PositiveDimensional),
    }
    let length = h.stable_value.ok_or(Error::PositiveDimensional)? as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ATTEMPTS {
        let coeffs: Vec<Rational> = (0..n).map(|_| Rational::from_integer(rng.gen_range(-9i64..=9).into())).collect();
        let Some(k) = coeffs.iter().position(|c| !Field::is_zero(c)) else {
            continue;
        };
        let ell = Poly::from_terms(&ring, coeffs.iter().enumerate().map(|(i, c)| (Monomial::var(n, i, 1), c.clone())));
        let moved_sat = saturate_principal(&sat, &ell)?;
        if hilbert_function(&moved_sat, 0)?.stable_value != Some(length as u64) {
            continue;
        }
        let mut a: Vec<Vec<Rational>> = identity(n);
        a[k] = coeffs;
        let a_inv = inverse(&a)?;
        // In the new coordinates the form is variable k; set it to 1.
        let mut images: Vec<Poly<Rational>> = (0..n).map(|i| Poly::var(&ring, i)).collect();
        images[k] = Poly::one(&ring);
        let affine = Ideal::new(
            &ring,
            sat.linear_change(&a_inv)?.gens().iter().map(|g| g.substitute(&images)).collect::<Result<Vec<_>>>()?,
        )?;
        let ord = TermOrder::grevlex(n);
        let gb = affine.groebner(&ord);
        let mut gens = gb.clone();
        for v in (0..n).filter(|&v| v != k) {
            let m = minimal_polynomial(v, &gb, &ord, length)?;
            gens.push(m.squarefree_part()?.to_poly(&ring, v));
        }
        let radical = Ideal::new(&ring, gens)?;
        let homogeneous: Vec<Poly<Rational>> = radical.groebner(&ord).iter().map(|g| g.homogenize(k)).collect();
        let back = Ideal::new(&ring, homogeneous.iter().map(|g| g.linear_change(&a)).collect::<Result<Vec<_>>>()?)?;
        return Ok(back.reduced());
    }
    Err(Error::RetriesExhausted(ATTEMPTS))
}

/// Minimal polynomial of variable `v` modulo a zero-dimensional affine
/// ideal with reduced basis `gb`, by linear dependence of normal forms.
fn minimal_polynomial(v: usize, gb: &[Poly<Rational>], ord: &TermOrder, bound: usize) -> Result<UniPoly<Rational>> {
    let ring = gb.first().map(|g| g.ring().clone()).ok_or(Error::PositiveDimensional)?;
    let x = Poly::var(&ring, v);
    let mut power = Poly::one(&ring);
    let mut forms: Vec<Poly<Rational>> = Vec::new();
    for deg in 0..=bound {
        forms.push(normal_form(&power, gb, ord));
        let mut monos: Vec<Monomial> = forms.iter().flat_map(|f| f.terms().map(|(m, _)| m.clone())).collect();
        monos.sort();
        monos.dedup();
        let rows: Vec<Vec<Rational>> = monos.iter().map(|m| forms.iter().map(|f| f.coefficient(m)).collect()).collect();
        if let Some(rel) = nullspace(&rows, deg + 1).into_iter().next() {
            return Ok(UniPoly::new(rel));
        }
        power = &power * &x;
    }
    Err(Error::PositiveDimensional)
}
