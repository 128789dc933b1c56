//! Intersection multiplicities at the origin of the affine plane: the fast
//! substitution path for graph curves and an independent oracle through
//! truncated local algebras.

use serde::{Deserialize, Serialize};

use crate::arith::Field;
use crate::error::{Error, Result};
use crate::poly::{order_at_zero, Monomial, Order, Poly, RingRef};

/// The graph `y = c1 x + c2 x^2 + ... + ct x^t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GraphCurve<F> {
    coeffs: Vec<F>,
}

impl<F: Field> GraphCurve<F> {
    /// `coeffs[k]` is the coefficient of `x^(k+1)`.
    pub fn new(coeffs: Vec<F>) -> Self {
        GraphCurve { coeffs }
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `sum c_k x^k` as a polynomial in variable `x` of `ring`.
    pub fn as_poly(&self, ring: &RingRef, x: usize) -> Poly<F> {
        Poly::from_terms(
            ring,
            self.coeffs.iter().enumerate().map(|(k, c)| (Monomial::var(ring.nvars(), x, k as u32 + 1), c.clone())),
        )
    }

    /// The implicit equation `y - g(x)` in a two-variable ring.
    pub fn equation(&self, ring: &RingRef) -> Poly<F> {
        &Poly::var(ring, 1) - &self.as_poly(ring, 0)
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> GraphCurve<G> {
        GraphCurve { coeffs: self.coeffs.iter().map(f).collect() }
    }
}

fn check_plane<F: Field>(f: &Poly<F>) -> Result<()> {
    if f.ring().nvars() != 2 {
        return Err(Error::InvalidArgument(format!("expected a polynomial in two variables, got ring {}", f.ring())));
    }
    if !f.eval(&[F::zero(), F::zero()]).is_zero() {
        return Err(Error::NotVanishing);
    }
    Ok(())
}

/// `i(f, y - g(x), O)`: the order at zero of `f(x, g(x))`.
pub fn graph_intersection_multiplicity<F: Field>(f: &Poly<F>, g: &GraphCurve<F>) -> Result<Order> {
    check_plane(f)?;
    let ring = f.ring();
    let r = f.substitute(&[Poly::var(ring, 0), g.as_poly(ring, 0)])?;
    order_at_zero(&r)
}

/// Result of [`truncated_local_multiplicity`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalMultiplicity {
    pub value: Order,
    pub cap_reached: bool,
}

/// `dim K[x,y] / ((f, g) + (x, y)^n)`.
pub fn truncated_quotient_dim<F: Field>(f: &Poly<F>, g: &Poly<F>, n: u32) -> usize {
    let monomials: Vec<Monomial> = (0..n).flat_map(|d| (0..=d).rev().map(move |a| Monomial(vec![a, d - a]))).collect();
    let index = |m: &Monomial| -> Option<usize> {
        let d = m.degree();
        (d < n).then(|| (d * (d + 1) / 2 + (d - m.0[0])) as usize)
    };
    let mut rows = Vec::new();
    for m in &monomials {
        for h in [f, g] {
            let mut row = vec![F::zero(); monomials.len()];
            let mut any = false;
            for (k, c) in h.terms() {
                if let Some(i) = index(&k.mul(m)) {
                    row[i] = c.clone();
                    any = true;
                }
            }
            if any {
                rows.push(row);
            }
        }
    }
    monomials.len() - bareiss_rank(rows)
}

/// Stabilized value of [`truncated_quotient_dim`] as `n` grows, which is
/// the local intersection multiplicity of `f` and `g` at the origin. The
/// default cap is `2 deg f deg g + 4`; running past it yields infinity.
pub fn truncated_local_multiplicity<F: Field>(f: &Poly<F>, g: &Poly<F>, cap: Option<u32>) -> Result<LocalMultiplicity> {
    check_plane(f)?;
    check_plane(g)?;
    if f.ring() != g.ring() {
        return Err(Error::RingMismatch);
    }
    let cap = cap.unwrap_or_else(|| 2 * f.total_degree().unwrap_or(0) * g.total_degree().unwrap_or(0) + 4);
    let mut prev = truncated_quotient_dim(f, g, 2);
    for n in 3..=cap.max(3) {
        let d = truncated_quotient_dim(f, g, n);
        if d == prev {
            return Ok(LocalMultiplicity { value: Order::Finite(d as u32), cap_reached: false });
        }
        prev = d;
    }
    Ok(LocalMultiplicity { value: Order::Infinite, cap_reached: true })
}

/// Rank by fraction-free (Bareiss) elimination.
pub fn bareiss_rank<F: Field>(mut rows: Vec<Vec<F>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = F::one();
    for c in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(p, rank);
        let pivot = rows[rank][c].clone();
        let prev_inv = prev.inv().unwrap();
        let (top, bottom) = rows.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in bottom.iter_mut() {
            let a = row[c].clone();
            for j in c..ncols {
                row[j] = pivot.mul(&row[j]).sub(&a.mul(&prow[j])).mul(&prev_inv);
            }
        }
        prev = pivot;
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// `i(D1, D2, O)` for two graph curves: the lowest degree at which their
/// coefficients differ.
pub fn branch_separation<F: Field>(g1: &GraphCurve<F>, g2: &GraphCurve<F>) -> Order {
    let n = g1.len().max(g2.len());
    let zero = F::zero();
    (0..n)
        .find(|&k| g1.coeffs.get(k).unwrap_or(&zero) != g2.coeffs.get(k).unwrap_or(&zero))
        .map_or(Order::Infinite, |k| Order::Finite(k as u32 + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, QuadExt, Rational};
    use crate::poly::{parse_poly, PolyRing};

    fn p(s: &str, r: &RingRef) -> Poly<Rational> {
        parse_poly(s, r).unwrap()
    }

    #[test]
    fn graph_path_examples() {
        let r = PolyRing::of(&["x", "y"]);
        let f = p("y^2 - x^5", &r);
        assert_eq!(graph_intersection_multiplicity(&f, &GraphCurve::new(vec![int(0)])).unwrap(), Order::Finite(5));
        let f = p("y*(y - x^2)", &r);
        let g = GraphCurve::new(vec![int(0), int(1)]);
        assert_eq!(graph_intersection_multiplicity(&f, &g).unwrap(), Order::Infinite);
        assert_eq!(graph_intersection_multiplicity(&p("y - 1", &r), &g), Err(Error::NotVanishing));
    }

    #[test]
    fn oscnode_cubics_over_gaussian_rationals() {
        let r = PolyRing::of(&["x", "y"]);
        let f: Poly<QuadExt> = parse_poly("y^2 - 2*x^2*y + x^4 + x^2*y^2", &r).unwrap();
        let i = QuadExt::sqrt_of(&int(-1)).unwrap();
        let q = |v: i64| QuadExt::rational(int(v));
        let d1 = GraphCurve::new(vec![q(0), q(1), i.neg()]);
        let d2 = GraphCurve::new(vec![q(0), q(1), i.clone()]);
        assert_eq!(graph_intersection_multiplicity(&f, &d1).unwrap(), Order::Finite(7));
        assert_eq!(graph_intersection_multiplicity(&f, &d2).unwrap(), Order::Finite(7));
        assert_eq!(branch_separation(&d1, &d2), Order::Finite(3));
        let oracle = truncated_local_multiplicity(&f, &d1.equation(&r), None).unwrap();
        assert_eq!(oracle.value, Order::Finite(7));
    }

    #[test]
    fn oracle_examples() {
        let r = PolyRing::of(&["x", "y"]);
        let m = |a: &str, b: &str| truncated_local_multiplicity(&p(a, &r), &p(b, &r), None).unwrap();
        assert_eq!(m("y^2 - x^3", "y").value, Order::Finite(3));
        assert_eq!(m("x", "y").value, Order::Finite(1));
        assert_eq!(m("y^2 - 2*x^2*y + x^4 + x^2*y^2", "y - x^2").value, Order::Finite(6));
        let common = m("y*(y - x^2)", "y - x^2");
        assert_eq!(common, LocalMultiplicity { value: Order::Infinite, cap_reached: true });
    }

    #[test]
    fn separation_of_opposite_monomials() {
        for r in 1..8 {
            let mut a = vec![int(0); r];
            let mut b = vec![int(0); r];
            a[r - 1] = int(1);
            b[r - 1] = int(-1);
            assert_eq!(branch_separation(&GraphCurve::new(a.clone()), &GraphCurve::new(b)), Order::Finite(r as u32));
            assert_eq!(branch_separation(&GraphCurve::new(a.clone()), &GraphCurve::new(a)), Order::Infinite);
        }
    }
}
