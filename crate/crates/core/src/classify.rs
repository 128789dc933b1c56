//! Classification of a point of a reduced plane curve as smooth, of
//! multiplicity at least three, or an `A_s` double point, by probing the
//! curve with osculating graphs `y = l1 x + ... + lr x^r`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{Field, QuadExt, Rational};
use crate::error::{Error, Result};
use crate::local::{graph_intersection_multiplicity, GraphCurve};
use crate::poly::matrix::inverse;
use crate::poly::{poly_gcd, Monomial, Order, Poly, PolyRing, RingRef};

/// A curve moved so that the query point sits at the origin of the chart
/// `x2 != 0`, with a nonzero `y^2` coefficient when the point is double.
#[derive(Clone, Debug, PartialEq)]
pub struct NormalizedCurve<F: Field> {
    /// The input form, with coefficients in the field of the point.
    pub original: Poly<F>,
    /// `original` composed with `transform` and dehomogenized gives
    /// `affine`; the third column of `transform` is the query point.
    pub transform: Vec<Vec<F>>,
    /// `f(x, y)` with `f(0, 0) = 0`, in the ring `QQ[x, y]`.
    pub affine: Poly<F>,
    /// Whether a swap or shear was needed to make the `y^2` coefficient
    /// nonzero.
    pub a02_fixed: bool,
}

/// Branch taken at one step of the classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Branch {
    /// Nonzero discriminant: two distinct osculating graphs.
    #[serde(rename = "r-a")]
    Distinct,
    /// Zero discriminant and multiplicity exactly `2r + 1`.
    #[serde(rename = "r-b1")]
    UniqueStop,
    /// Zero discriminant and multiplicity at least `2r + 2`.
    #[serde(rename = "r-b2")]
    UniqueContinue,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Distinct => "r-a",
            Branch::UniqueStop => "r-b1",
            Branch::UniqueContinue => "r-b2",
        })
    }
}

/// Data of step `r`: the coefficient of `x^(2r)` after substituting the
/// graph with symbolic last coefficient is `a l^2 + b l + c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub r: u32,
    pub quadratic: [QuadExt; 3],
    pub discriminant: QuadExt,
    pub branch: Branch,
    pub lambda: Option<QuadExt>,
    /// Multiplicity of the unique osculating graph; absent on branch `r-a`.
    pub multiplicity: Option<Order>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct StepTrace {
    pub steps: Vec<Step>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    /// Simple point with tangent `a10 x + a01 y` in normalized coordinates.
    Smooth {
        tangent: Poly<QuadExt>,
        tangent_original: Option<Poly<QuadExt>>,
    },
    MultiplicityAtLeast3 {
        multiplicity: u32,
    },
    /// `A_s`. For odd `s` there are two witnesses (absent when their
    /// coefficients would need a second square root), for even `s` one.
    DoublePoint {
        s: u32,
        witnesses: Vec<GraphCurve<QuadExt>>,
        witnesses_original: Vec<Poly<QuadExt>>,
    },
}

impl Verdict {
    pub fn s(&self) -> Option<u32> {
        match self {
            Verdict::DoublePoint { s, .. } => Some(*s),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Classification<F: Field> {
    pub normalized: NormalizedCurve<F>,
    pub verdict: Verdict,
    pub trace: StepTrace,
}

fn affine_ring() -> RingRef {
    PolyRing::of(&["x", "y"])
}

/// Moves `point` to `[0,0,1]`, takes the affine chart and, at a double
/// point, makes the `y^2` coefficient nonzero by swapping `x` and `y` or by
/// substituting `x -> x + y`.
pub fn normalize_at_point<F: Field>(form: &Poly<F>, point: &[F]) -> Result<NormalizedCurve<F>> {
    let ring = form.ring();
    if ring.nvars() != 3 || point.len() != 3 {
        return Err(Error::InvalidArgument("expected a ternary form and a point of P^2".into()));
    }
    if form.is_zero() {
        return Err(Error::NonReduced("0".into()));
    }
    if !form.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let Some(k) = point.iter().position(|c| !c.is_zero()) else {
        return Err(Error::InvalidArgument("[0,0,0] is not a projective point".into()));
    };
    if !form.eval(point).is_zero() {
        return Err(Error::NotVanishing);
    }
    let others: Vec<usize> = (0..3).filter(|&i| i != k).collect();
    let mut m = vec![vec![F::zero(); 3]; 3];
    for (col, &i) in others.iter().enumerate() {
        m[i][col] = F::one();
    }
    for (i, c) in point.iter().enumerate() {
        m[i][2] = c.clone();
    }
    let mut affine = dehomogenize(&form.linear_change(&m)?);
    let mut a02_fixed = false;
    if affine.lowest_degree() == Some(2) {
        let a = |i, j| affine.coefficient(&Monomial(vec![i, j]));
        if a(0, 2).is_zero() {
            // Columns of the 2x2 change applied to (x, y).
            let s: [[F; 2]; 2] = if !a(2, 0).is_zero() {
                [[F::zero(), F::one()], [F::one(), F::zero()]]
            } else {
                [[F::one(), F::one()], [F::zero(), F::one()]]
            };
            let ar = affine.ring().clone();
            let images: Vec<Poly<F>> =
                s.iter().map(|row| &Poly::var(&ar, 0).scale(&row[0]) + &Poly::var(&ar, 1).scale(&row[1])).collect();
            affine = affine.substitute(&images)?;
            let old = m.clone();
            for (i, row) in m.iter_mut().enumerate() {
                for j in 0..2 {
                    row[j] = old[i][0].mul(&s[0][j]).add(&old[i][1].mul(&s[1][j]));
                }
            }
            a02_fixed = true;
        }
    }
    Ok(NormalizedCurve { original: form.clone(), transform: m, affine, a02_fixed })
}

fn dehomogenize<F: Field>(g: &Poly<F>) -> Poly<F> {
    let ar = affine_ring();
    Poly::from_terms(&ar, g.terms().map(|(m, c)| (Monomial(vec![m.0[0], m.0[1]]), c.clone())))
}

/// Multiplicity of the affine curve at the origin.
pub fn multiplicity_at_origin<F: Field>(f: &Poly<F>) -> Result<u32> {
    if f.is_zero() {
        return Err(Error::NonReduced("0".into()));
    }
    if !f.eval(&vec![F::zero(); f.ring().nvars()]).is_zero() {
        return Err(Error::NotVanishing);
    }
    Ok(f.lowest_degree().unwrap())
}

/// Rejects forms with a repeated factor: the gcd of the form and all its
/// partial derivatives must be constant.
pub fn check_reduced(form: &Poly<Rational>) -> Result<()> {
    if crate::poly::gcd::certified_squarefree(form) {
        return Ok(());
    }
    let mut g = form.clone();
    for v in 0..form.ring().nvars() {
        g = poly_gcd(&g, &form.derivative(v));
        if g.is_constant() {
            return Ok(());
        }
    }
    Err(Error::NonReduced(g.to_string()))
}

/// Runs the classification of `point` on the curve `form = 0`. The point
/// may have coordinates in a quadratic extension. `cap` bounds the number
/// of steps and defaults to `n^2 + 2`.
pub fn classify_double_point<F: Field>(
    form: &Poly<Rational>,
    point: &[F],
    cap: Option<u32>,
) -> Result<Classification<F>> {
    check_reduced(form)?;
    let lifted = form.map_coeffs(|c| F::from_rational(c.clone()));
    let normalized = normalize_at_point(&lifted, point)?;
    let n = form.total_degree().unwrap_or(0);
    let cap = cap.unwrap_or(n * n + 2);
    let (verdict, trace) = run_steps(&normalized.affine, cap)?;
    let verdict = witnesses_in_original_coordinates(verdict, &normalized)?;
    Ok(Classification { normalized, verdict, trace })
}

fn run_steps<F: Field>(f: &Poly<F>, cap: u32) -> Result<(Verdict, StepTrace)> {
    let mut trace = StepTrace::default();
    match multiplicity_at_origin(f)? {
        1 => {
            let a10 = f.coefficient(&Monomial(vec![1, 0])).to_quad();
            let a01 = f.coefficient(&Monomial(vec![0, 1])).to_quad();
            let qr = affine_ring();
            let tangent = &Poly::var(&qr, 0).scale(&a10) + &Poly::var(&qr, 1).scale(&a01);
            return Ok((Verdict::Smooth { tangent, tangent_original: None }, trace));
        }
        2 => {}
        m => return Ok((Verdict::MultiplicityAtLeast3 { multiplicity: m }, trace)),
    }
    let a02 = f.coefficient(&Monomial(vec![0, 2]));
    assert!(!a02.is_zero(), "normalization guarantees a nonzero y^2 coefficient");
    let sub_ring = PolyRing::of(&["x", "l"]);
    let mut lambdas: Vec<F> = Vec::new();
    for r in 1..=cap {
        let mut y = Poly::monomial(&sub_ring, Monomial(vec![r, 1]), F::one());
        for (k, c) in lambdas.iter().enumerate() {
            y = &y + &Poly::monomial(&sub_ring, Monomial(vec![k as u32 + 1, 0]), c.clone());
        }
        let rr = f.substitute(&[Poly::var(&sub_ring, 0), y])?;
        let by_x = rr.coeffs_in(0);
        let coeff = |k: usize| by_x.get(k).cloned().unwrap_or_else(|| Poly::zero(&sub_ring));
        debug_assert!((0..2 * r as usize).all(|k| coeff(k).is_zero()));
        let lead = coeff(2 * r as usize);
        let q = |e: u32| lead.coefficient(&Monomial(vec![0, e]));
        let (a, b, c) = (q(2), q(1), q(0));
        debug_assert!(lead.degree_in(1).unwrap_or(0) <= 2 && a == a02);
        let delta = b.mul(&b).sub(&F::from_int(4).mul(&a).mul(&c));
        let quadratic = [a.to_quad(), b.to_quad(), c.to_quad()];
        if !delta.is_zero() {
            let witnesses = distinct_roots(&a, &b, &delta)
                .map(|roots| {
                    roots
                        .into_iter()
                        .map(|root| {
                            let mut cs: Vec<QuadExt> = lambdas.iter().map(F::to_quad).collect();
                            cs.push(root);
                            GraphCurve::new(cs)
                        })
                        .collect()
                })
                .unwrap_or_default();
            trace.steps.push(Step {
                r,
                quadratic,
                discriminant: delta.to_quad(),
                branch: Branch::Distinct,
                lambda: None,
                multiplicity: None,
            });
            return Ok((Verdict::DoublePoint { s: 2 * r - 1, witnesses, witnesses_original: Vec::new() }, trace));
        }
        let lambda = b.neg().div(&F::from_int(2).mul(&a)).unwrap();
        lambdas.push(lambda.clone());
        let graph = GraphCurve::new(lambdas.clone());
        let i = graph_intersection_multiplicity(f, &graph)?;
        let stop = i == Order::Finite(2 * r + 1);
        trace.steps.push(Step {
            r,
            quadratic,
            discriminant: delta.to_quad(),
            branch: if stop { Branch::UniqueStop } else { Branch::UniqueContinue },
            lambda: Some(lambda.to_quad()),
            multiplicity: Some(i),
        });
        if stop {
            let witness = graph.map(F::to_quad);
            return Ok((
                Verdict::DoublePoint { s: 2 * r, witnesses: vec![witness], witnesses_original: Vec::new() },
                trace,
            ));
        }
    }
    Err(Error::StepCapExceeded { cap: cap as usize, trace: Box::new(trace) })
}

// Roots (-b +- sqrt(delta)) / 2a, first with the minus sign; None when the
// square root leaves the supported extensions.
fn distinct_roots<F: Field>(a: &F, b: &F, delta: &F) -> Option<Vec<QuadExt>> {
    let root = delta.to_quad().sqrt().ok()?;
    let two_a = F::from_int(2).mul(a).to_quad();
    let mb = b.neg().to_quad();
    let r1 = mb.checked_sub(&root).ok()?.checked_div(&two_a).ok()?;
    let r2 = mb.checked_add(&root).ok()?.checked_div(&two_a).ok()?;
    Some(vec![r1, r2])
}

/// Homogeneous equation `y z^(t-1) - sum c_k x^k z^(t-k)` of a graph in the
/// coordinates `(x, y, z)` of `ring`.
pub fn graph_form(g: &GraphCurve<QuadExt>, ring: &RingRef) -> Poly<QuadExt> {
    let t = g.len().max(1) as u32;
    let mut out = Poly::monomial(ring, Monomial(vec![0, 1, t - 1]), QuadExt::one());
    for (k, c) in g.coeffs().iter().enumerate() {
        let k = k as u32 + 1;
        out = &out - &Poly::monomial(ring, Monomial(vec![k, 0, t - k]), c.clone());
    }
    out
}

/// Fills in the witnesses (and the tangent of a simple point) as plane
/// curves in the coordinates of the original form.
pub fn witnesses_in_original_coordinates<F: Field>(v: Verdict, n: &NormalizedCurve<F>) -> Result<Verdict> {
    let ring = n.original.ring().clone();
    let inv: Vec<Vec<QuadExt>> =
        inverse(&n.transform)?.iter().map(|row| row.iter().map(F::to_quad).collect()).collect();
    let back = |p: Poly<QuadExt>| -> Result<Poly<QuadExt>> { p.linear_change(&inv) };
    Ok(match v {
        Verdict::Smooth { tangent, .. } => {
            let lin =
                Poly::from_terms(&ring, tangent.terms().map(|(m, c)| (Monomial(vec![m.0[0], m.0[1], 0]), c.clone())));
            Verdict::Smooth { tangent, tangent_original: Some(back(lin)?) }
        }
        Verdict::DoublePoint { s, witnesses, .. } => {
            let witnesses_original =
                witnesses.iter().map(|g| back(graph_form(g, &ring))).collect::<Result<Vec<_>>>()?;
            Verdict::DoublePoint { s, witnesses, witnesses_original }
        }
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::poly::parse_poly;

    fn xyz() -> RingRef {
        PolyRing::of(&["x", "y", "z"])
    }

    fn form(s: &str) -> Poly<Rational> {
        parse_poly(s, &xyz()).unwrap()
    }

    fn classify(s: &str, p: [i64; 3]) -> Classification<Rational> {
        classify_double_point(&form(s), &p.map(int), None).unwrap()
    }

    #[test]
    fn normal_forms() {
        for s in 1..=12u32 {
            let text = format!("y^2*z^{} - x^{}", s - 1, s + 1);
            let c = classify(&text, [0, 0, 1]);
            assert_eq!(c.verdict.s(), Some(s), "{text}");
            assert_eq!(c.trace.steps.len() as u32, s.div_ceil(2), "{text}");
        }
    }

    #[test]
    fn tacnode_has_infinite_branch() {
        let c = classify("y*(y*z - x^2)", [0, 0, 1]);
        assert_eq!(c.verdict.s(), Some(3));
        assert_eq!(c.trace.steps[0].multiplicity, Some(Order::Infinite));
        assert_eq!(c.trace.steps[0].branch, Branch::UniqueContinue);
        assert_eq!(c.trace.steps[1].branch, Branch::Distinct);
    }

    #[test]
    fn oscnode_quartic() {
        let c = classify("y^2*z^2 - 2*x^2*y*z + x^4 + x^2*y^2", [0, 0, 1]);
        let Verdict::DoublePoint { s, witnesses, witnesses_original } = &c.verdict else {
            panic!("expected a double point");
        };
        assert_eq!(*s, 5);
        let i = QuadExt::sqrt_of(&int(-1)).unwrap();
        let q = |v: i64| QuadExt::rational(int(v));
        assert_eq!(witnesses[0], GraphCurve::new(vec![q(0), q(1), i.neg()]));
        assert_eq!(witnesses[1], GraphCurve::new(vec![q(0), q(1), i.clone()]));
        assert_eq!(witnesses_original[1].to_string(), "-sqrt(-1)*x^3 - x^2*z + y*z^2");
        assert_eq!(c.trace.steps[0].lambda, Some(q(0)));
        assert_eq!(c.trace.steps[1].lambda, Some(q(1)));
    }

    #[test]
    fn swap_and_shear() {
        let n = normalize_at_point(&form("x^2*z - y^3"), &[int(0), int(0), int(1)]).unwrap();
        assert!(n.a02_fixed);
        assert_eq!(n.affine.coefficient(&Monomial(vec![0, 2])), int(1));
        let n = normalize_at_point(&form("x*y*z + x^3 + y^3"), &[int(0), int(0), int(1)]).unwrap();
        assert_eq!(n.affine.coefficient(&Monomial(vec![0, 2])), int(1));
        let c = classify("x*y*z + x^3 + y^3", [0, 0, 1]);
        assert_eq!(c.verdict.s(), Some(1));
    }

    #[test]
    fn point_at_infinity_uses_permutation() {
        let n = normalize_at_point(&form("y^2*x - z^3"), &[int(1), int(0), int(0)]).unwrap();
        assert!(n.affine.eval(&[int(0), int(0)]) == int(0));
        let c = classify("y^2*x - z^3", [1, 0, 0]);
        assert_eq!(c.verdict.s(), Some(2));
    }

    #[test]
    fn smooth_and_triple_points() {
        let c = classify("y*z - x^2", [0, 0, 1]);
        assert!(matches!(c.verdict, Verdict::Smooth { .. }));
        let c = classify("x^3 - y^2*x", [0, 0, 1]);
        assert!(matches!(c.verdict, Verdict::MultiplicityAtLeast3 { multiplicity: 3 }));
    }

    #[test]
    fn refuses_non_reduced_and_bad_points() {
        let e = classify_double_point(&form("(y*z - x^2)^2"), &[int(0), int(0), int(1)], None);
        assert!(matches!(e, Err(Error::NonReduced(_))));
        let e = classify_double_point(&form("y*z - x^2"), &[int(1), int(1), int(0)], None);
        assert_eq!(e.unwrap_err(), Error::NotVanishing);
        let e = classify_double_point(&form("y*z - x^3"), &[int(0), int(0), int(1)], None);
        assert_eq!(e.unwrap_err(), Error::NotHomogeneous);
    }
}
