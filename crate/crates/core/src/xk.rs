//! The schemes `X_k` of a plane parameterization and the census of its
//! singular points read off `X_2`.

use serde::{Deserialize, Serialize};

use crate::arith::{int, Field, QuadExt, Rational};
use crate::classify::{classify_double_point, Verdict};
use crate::error::{Error, Result};
use crate::geometry::{implicitize, PlaneParameterization};
use crate::groebner::{hilbert_function, ideal_combine, saturate, saturate_principal, CombineOp, Ideal, TermOrder};
use crate::poly::matrix::{determinant, inverse};
use crate::poly::{factor_rational, parse_poly, Monomial, Poly, PolyMatrix, PolyRing, RingRef, UniPoly};

const SHAPE_ATTEMPTS: usize = 8;
const SEED: u64 = 0x5eed;

/// `M_k`: `n-k+1` shifted bands of `x_0..x_k` over the three coefficient
/// rows of the parameterization.
#[derive(Clone, Debug, PartialEq)]
pub struct MkMatrix {
    pub k: usize,
    pub n: usize,
    pub matrix: PolyMatrix<Rational>,
}

/// `QQ[x,y,z]` for `k = 2`, `QQ[x0..xk]` otherwise.
pub fn xk_ring(k: usize) -> RingRef {
    if k == 2 {
        PolyRing::of(&["x", "y", "z"])
    } else {
        let names: Vec<String> = (0..=k).map(|i| format!("x{i}")).collect();
        PolyRing::new(&names).expect("valid names")
    }
}

pub fn build_mk(p: &PlaneParameterization, k: usize) -> Result<MkMatrix> {
    let n = p.degree();
    if n < 3 || k < 2 || k > n - 1 {
        return Err(Error::InvalidArgument(format!("need 2 <= k <= n-1 with n >= 3, got k={k}, n={n}")));
    }
    let ring = xk_ring(k);
    let mut rows = Vec::with_capacity(n - k + 4);
    for i in 0..=n - k {
        rows.push(
            (0..=n).map(|c| if c >= i && c - i <= k { Poly::var(&ring, c - i) } else { Poly::zero(&ring) }).collect(),
        );
    }
    for row in p.coefficient_rows() {
        rows.push(row.into_iter().map(|a| Poly::constant(&ring, a)).collect());
    }
    Ok(MkMatrix { k, n, matrix: PolyMatrix::from_rows(&ring, rows)? })
}

/// Ideal of the `(n-k+3)`-minors of `M_k`.
pub fn xk_ideal(p: &PlaneParameterization, k: usize) -> Result<Ideal> {
    let m = build_mk(p, k)?;
    let ring = m.matrix.ring().clone();
    let mut gens: Vec<Poly<Rational>> = Vec::new();
    for g in m.matrix.minors(m.n - k + 3)? {
        if !g.is_zero() && !gens.contains(&g) {
            gens.push(g);
        }
    }
    Ideal::new(&ring, gens)
}

/// Whether `X_k` is empty.
pub fn xk_is_empty(p: &PlaneParameterization, k: usize) -> Result<bool> {
    let i = xk_ideal(p, k)?;
    Ok(saturate(&i, &Ideal::irrelevant(i.ring()))?.is_unit())
}

/// A zero-dimensional projective scheme is curvilinear when its Zariski
/// tangent space has dimension at most one at every point, i.e. when the
/// ideal plus the `(k-1)`-minors of the Jacobian has empty zero set.
pub fn is_curvilinear(scheme: &Ideal) -> Result<bool> {
    let ring = scheme.ring().clone();
    let k = ring.nvars() - 1;
    let h = hilbert_function(scheme, 0)?;
    if h.krull_dim > 1 {
        return Err(Error::PositiveDimensional);
    }
    if k <= 1 || h.krull_dim == 0 {
        return Ok(true);
    }
    let rows: Vec<Vec<Poly<Rational>>> =
        scheme.gens().iter().map(|g| (0..=k).map(|v| g.derivative(v)).collect()).collect();
    let jac = PolyMatrix::from_rows(&ring, rows)?;
    let mut gens = scheme.gens().to_vec();
    if jac.nrows() >= k - 1 {
        gens.extend(jac.minors(k - 1)?.into_iter().filter(|m| !m.is_zero()));
    }
    let singular = saturate(&Ideal::new(&ring, gens)?, &Ideal::irrelevant(&ring))?;
    Ok(singular.is_unit())
}

/// How a census label was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LabelSource {
    /// The classifier ran on the implicit equation at the image point.
    Classifier,
    /// `s = 2 delta - 1` for two branches, `2 delta` for one, at points not
    /// individually accessible.
    Inferred,
}

/// One point of `Supp(X_2)`, or one Galois orbit of such points when their
/// coordinates need a field of degree above two.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CensusPoint {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coords: Option<Vec<QuadExt>>,
    /// Form in `x, y, z` vanishing on the orbit's lines through the chart
    /// vertex; one per orbit.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cluster_eliminant: Option<String>,
    /// Number of points this entry stands for.
    pub cluster_size: usize,
    /// Length of `X_2` at each point of the entry.
    pub delta: u64,
    pub cusp: bool,
    /// The singular point of the curve.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub image: Option<Vec<QuadExt>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label_source: Option<LabelSource>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unclassified: Option<String>,
}

impl CensusPoint {
    /// `delta = ceil(s/2)` for an `A_s` label.
    pub fn delta_consistent(&self) -> Option<bool> {
        self.s.map(|s| u64::from(s.div_ceil(2)) == self.delta)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SingularityCensus {
    pub n: usize,
    pub x2_length: u64,
    /// Number of points of `Supp(X_2)`.
    pub support_size: u64,
    pub points: Vec<CensusPoint>,
    /// Sum of the point lengths is `C(n-1, 2)`.
    pub length_law: bool,
}

impl SingularityCensus {
    pub fn total_delta(&self) -> u64 {
        self.points.iter().map(|p| p.delta * p.cluster_size as u64).sum()
    }

    pub fn cusp_count(&self) -> usize {
        self.points.iter().filter(|p| p.cusp).map(|p| p.cluster_size).sum()
    }
}

struct Orbit {
    eliminant: Poly<Rational>,
    degree: usize,
    points: Option<Vec<Vec<QuadExt>>>,
}

fn random_matrix(rng: &mut u64) -> Vec<Vec<Rational>> {
    // Small deterministic LCG entries in -4..=4.
    let mut next = || {
        *rng = rng.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        int(((*rng >> 33) % 9) as i64 - 4)
    };
    (0..3).map(|_| (0..3).map(|_| next()).collect()).collect()
}

fn linear_form(ring: &RingRef, row: &[Rational]) -> Poly<Rational> {
    Poly::from_terms(ring, row.iter().enumerate().map(|(i, c)| (Monomial::var(3, i, 1), c.clone())))
}

fn eval_uni<F: Field>(u: &UniPoly<Rational>, x: &F) -> F {
    u.coeffs().iter().rev().fold(F::zero(), |acc, c| acc.mul(x).add(&F::from_rational(c.clone())))
}

/// Splits the points of a reduced finite scheme in the plane into Galois
/// orbits through a generic projection to a line.
fn support_orbits(radical: &Ideal, count: usize) -> Result<Vec<Orbit>> {
    let ring = radical.ring().clone();
    let mut state = SEED;
    for _ in 0..SHAPE_ATTEMPTS {
        let a = random_matrix(&mut state);
        if Field::is_zero(&determinant(&a)) {
            continue;
        }
        let a_inv = inverse(&a)?;
        let chart = vec![Poly::var(&ring, 0), Poly::var(&ring, 1), Poly::one(&ring)];
        let moved: Vec<Poly<Rational>> =
            radical.linear_change(&a_inv)?.gens().iter().map(|g| g.substitute(&chart)).collect::<Result<_>>()?;
        let gb = Ideal::new(&ring, moved)?.groebner(&TermOrder::lex_by(vec![1, 0, 2])?);
        // Shape position: {p(X0), X1 - g(X0)} with deg p = count.
        if gb.len() != 2 {
            continue;
        }
        let (pg, lin) = (&gb[0], &gb[1]);
        if pg.degree_in(1).unwrap_or(0) != 0 || pg.degree_in(0) != Some(count as u32) {
            continue;
        }
        if lin.degree_in(1) != Some(1) || lin.terms().filter(|(m, _)| m.0[1] > 0).count() != 1 {
            continue;
        }
        let lead = lin.coefficient(&Monomial::var(3, 1, 1));
        let g_part = &Poly::var(&ring, 1).scale(&lead) - lin;
        let g = UniPoly::from_poly(&g_part.scale(&lead.inv().expect("nonzero")), 0)?;
        let p = UniPoly::from_poly(pg, 0)?;
        let l0 = linear_form(&ring, &a[0]);
        let l2 = linear_form(&ring, &a[2]);
        let mut orbits = Vec::new();
        for (factor, _) in factor_rational(&p) {
            let d = factor.degree().unwrap_or(0);
            let c = factor.coeffs();
            let eliminant = (0..=d)
                .fold(Poly::zero(&ring), |acc, i| &acc + &(&l0.pow(i as u32) * &l2.pow((d - i) as u32)).scale(&c[i]));
            let roots: Option<Vec<QuadExt>> = match d {
                1 => Some(vec![QuadExt::rational(-(&c[0] / &c[1]))]),
                2 => {
                    let disc = &c[1] * &c[1] - int(4) * &c[2] * &c[0];
                    let sq = QuadExt::sqrt_of(&disc)?;
                    let two_a = QuadExt::rational(int(2) * &c[2]);
                    let mb = QuadExt::rational(-c[1].clone());
                    Some(vec![mb.sub(&sq).div(&two_a).expect("nonzero"), mb.add(&sq).div(&two_a).expect("nonzero")])
                }
                _ => None,
            };
            let points = roots.map(|rs| {
                rs.iter()
                    .map(|r| {
                        let new = [r.clone(), eval_uni(&g, r), QuadExt::one()];
                        (0..3)
                            .map(|i| {
                                (0..3).fold(QuadExt::zero(), |acc, j| {
                                    acc.add(&QuadExt::from_rational(a_inv[i][j].clone()).mul(&new[j]))
                                })
                            })
                            .collect::<Vec<_>>()
                    })
                    .map(normalize_projective)
                    .collect()
            });
            orbits.push(Orbit { eliminant: primitive_form(&eliminant), degree: d, points });
        }
        return Ok(orbits);
    }
    Err(Error::RetriesExhausted(SHAPE_ATTEMPTS))
}

fn primitive_form(p: &Poly<Rational>) -> Poly<Rational> {
    crate::poly::primitive(p)
}

/// Scales so that the last nonzero coordinate is 1.
pub fn normalize_projective<F: Field>(v: Vec<F>) -> Vec<F> {
    match v.iter().rev().find(|c| !c.is_zero()).and_then(|c| c.inv()) {
        Some(inv) => v.iter().map(|c| c.mul(&inv)).collect(),
        None => v,
    }
}

/// The plane point `f(s1:t1) = f(s2:t2)` for the parameter pair cut out
/// by `q = x s^2 + y s t + z t^2`.
pub fn image_point<F: Field>(p: &PlaneParameterization, q: &[F]) -> Result<Vec<F>> {
    if q.len() != 3 {
        return Err(Error::InvalidArgument("X_2 points have three coordinates".into()));
    }
    let (x, y, z) = (&q[0], &q[1], &q[2]);
    if x.is_zero() && z.is_zero() {
        if y.is_zero() {
            return Err(Error::InvalidArgument("zero point".into()));
        }
        return Ok(normalize_projective(p.eval(&F::one(), &F::zero()).to_vec()));
    }
    // Reduce f_j(u) modulo the quadratic in the affine parameter u, where
    // u = s/t when x != 0 and u = t/s otherwise.
    let swap = x.is_zero();
    let (c2, c1, c0) = if swap { (z, y, x) } else { (x, y, z) };
    let n = p.degree();
    let rows = p.coefficient_rows();
    let mut alpha = Vec::with_capacity(3);
    let mut beta = Vec::with_capacity(3);
    for row in &rows {
        // Coefficient of u^e, where u = s (t = 1) or u = t (s = 1).
        let coeffs: Vec<F> =
            (0..=n).map(|e| F::from_rational(if swap { row[e].clone() } else { row[n - e].clone() })).collect();
        let (a, b) = reduce_mod_quadratic(&coeffs, c2, c1, c0);
        alpha.push(a);
        beta.push(b);
    }
    let disc = c1.mul(c1).sub(&F::from_int(4).mul(c2).mul(c0));
    let v = if disc.is_zero() {
        let root = c1.neg().div(&F::from_int(2).mul(c2)).expect("nonzero leading coefficient");
        alpha.iter().zip(&beta).map(|(a, b)| a.mul(&root).add(b)).collect()
    } else if alpha.iter().any(|a| !a.is_zero()) {
        alpha
    } else {
        beta
    };
    Ok(normalize_projective(v))
}

/// `sum coeffs[e] u^e mod (c2 u^2 + c1 u + c0)` as `(a, b)` for `a u + b`.
fn reduce_mod_quadratic<F: Field>(coeffs: &[F], c2: &F, c1: &F, c0: &F) -> (F, F) {
    let mut c: Vec<F> = coeffs.to_vec();
    let inv = c2.inv().expect("nonzero leading coefficient");
    for e in (2..c.len()).rev() {
        let k = c[e].mul(&inv);
        if k.is_zero() {
            continue;
        }
        c[e - 1] = c[e - 1].sub(&k.mul(c1));
        c[e - 2] = c[e - 2].sub(&k.mul(c0));
        c[e] = F::zero();
    }
    (c.get(1).cloned().unwrap_or_else(F::zero), c[0].clone())
}

fn binom2(m: usize) -> u64 {
    (m * m.saturating_sub(1) / 2) as u64
}

/// Support, per-point lengths and cusp flags of `X_2`.
pub fn x2_census(p: &PlaneParameterization) -> Result<SingularityCensus> {
    let n = p.degree();
    let ix2 = xk_ideal(p, 2)?;
    let ring = ix2.ring().clone();
    let h = hilbert_function(&ix2, 0)?;
    if h.krull_dim > 1 {
        return Err(Error::PositiveDimensional);
    }
    let total = h.stable_value.unwrap_or(0);
    let radical = crate::groebner::zero_dim_radical(&ix2, SEED)?;
    let count = hilbert_function(&radical, 0)?.stable_value.unwrap_or(0);
    let conic = parse_poly("y^2 - 4*x*z", &ring)?;
    let mut points = Vec::new();
    let mut assigned = 0;
    if count > 0 {
        for orbit in support_orbits(&radical, count as usize)? {
            let away = saturate_principal(&ix2, &orbit.eliminant)?;
            let remaining = hilbert_function(&away, 0)?.stable_value.unwrap_or(0);
            let length = total - remaining;
            assigned += length;
            let on_orbit = ideal_combine(&radical, &Ideal::new(&ring, vec![orbit.eliminant.clone()])?, CombineOp::Sum)?;
            let prime = saturate(&on_orbit, &Ideal::irrelevant(&ring))?;
            let cusp = prime.contains(&conic);
            let delta = length / orbit.degree as u64;
            match orbit.points {
                Some(pts) => {
                    for pt in pts {
                        points.push(CensusPoint {
                            image: Some(image_point(p, &pt)?),
                            coords: Some(pt),
                            cluster_eliminant: None,
                            cluster_size: 1,
                            delta,
                            cusp,
                            s: None,
                            label_source: None,
                            unclassified: None,
                        });
                    }
                }
                None => points.push(CensusPoint {
                    coords: None,
                    cluster_eliminant: Some(orbit.eliminant.to_string()),
                    cluster_size: orbit.degree,
                    delta,
                    cusp,
                    image: None,
                    s: None,
                    label_source: None,
                    unclassified: None,
                }),
            }
        }
    }
    Ok(SingularityCensus {
        n,
        x2_length: total,
        support_size: count,
        points,
        length_law: total == binom2(n.saturating_sub(1)) && assigned == total,
    })
}

/// The census with an `A_s` label per point: points over at most a
/// quadratic field are classified on the implicit equation, larger orbits
/// get the label forced by their length and cusp flag.
pub fn classify_all_singularities(p: &PlaneParameterization) -> Result<SingularityCensus> {
    let mut census = x2_census(p)?;
    let equation = implicitize(p)?.equation;
    for point in &mut census.points {
        let Some(image) = point.image.clone() else {
            point.s = Some(if point.cusp { 2 * point.delta as u32 } else { 2 * point.delta as u32 - 1 });
            point.label_source = Some(LabelSource::Inferred);
            continue;
        };
        match classify_double_point::<QuadExt>(&equation, &image, None) {
            Ok(c) => match c.verdict {
                Verdict::DoublePoint { s, .. } => {
                    point.s = Some(s);
                    point.label_source = Some(LabelSource::Classifier);
                }
                Verdict::MultiplicityAtLeast3 { multiplicity } => {
                    point.unclassified = Some(format!("multiplicity {multiplicity}"));
                }
                Verdict::Smooth { .. } => point.unclassified = Some("smooth image point".into()),
            },
            Err(e) => point.unclassified = Some(e.to_string()),
        }
    }
    Ok(census)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sextic() -> PlaneParameterization {
        PlaneParameterization::parse("s^6 + t^6; -s^5*t + 3*s*t^5 - s^3*t^3; 9*s^2*t^4 + s^4*t^2 - s^3*t^3").unwrap()
    }

    #[test]
    fn mk_shape_and_rows() {
        let m = build_mk(&sextic(), 2).unwrap();
        assert_eq!((m.matrix.nrows(), m.matrix.ncols()), (8, 7));
        let row = |i: usize| (0..7).map(|j| m.matrix.get(i, j).to_string()).collect::<Vec<_>>().join(",");
        assert_eq!(row(0), "x,y,z,0,0,0,0");
        assert_eq!(row(4), "0,0,0,0,x,y,z");
        assert_eq!(row(5), "1,0,0,0,0,0,1");
        assert_eq!(row(6), "0,-1,0,-1,0,3,0");
        assert_eq!(row(7), "0,0,1,-1,9,0,0");
        let cubic = PlaneParameterization::parse("s^3; s*t^2; s^2*t - t^3").unwrap();
        let m3 = build_mk(&cubic, 2).unwrap();
        assert_eq!((m3.matrix.nrows(), m3.matrix.ncols()), (5, 4));
        assert!(build_mk(&cubic, 3).is_err());
        assert!(build_mk(&PlaneParameterization::parse("s^2; s*t; t^2").unwrap(), 2).is_err());
    }

    #[test]
    fn cubic_census() {
        // Nodal cubic y^2 z = x^2 (x + z).
        let nodal = PlaneParameterization::parse("s^2*t - t^3; s^3 - s*t^2; t^3").unwrap();
        let c = classify_all_singularities(&nodal).unwrap();
        assert_eq!(c.x2_length, 1);
        assert_eq!(c.points.len(), 1);
        assert!(!c.points[0].cusp);
        assert_eq!(c.points[0].s, Some(1));
        let cusp = PlaneParameterization::parse("s^2*t; s^3; t^3").unwrap();
        let c = classify_all_singularities(&cusp).unwrap();
        assert_eq!(c.x2_length, 1);
        assert!(c.points[0].cusp);
        assert_eq!(c.points[0].s, Some(2));
        assert!(c.length_law);
    }

    #[test]
    fn image_of_parameter_pairs() {
        let p = sextic();
        // q = s t pairs (1:0) and (0:1).
        let img = image_point(&p, &[int(0), int(1), int(0)]).unwrap();
        assert_eq!(img, vec![int(1), int(0), int(0)]);
        // q = (s - t)^2 is the double parameter (1:1).
        let img = image_point(&p, &[int(1), int(-2), int(1)]).unwrap();
        assert_eq!(img, normalize_projective(vec![int(2), int(1), int(9)]));
    }

    #[test]
    fn curvilinear_test() {
        let r = PolyRing::of(&["u", "v", "w"]);
        let id = |g: &[&str]| Ideal::new(&r, g.iter().map(|s| parse_poly(s, &r).unwrap()).collect()).unwrap();
        assert!(is_curvilinear(&id(&["w^2", "v*w", "v^2 - u*w"])).unwrap());
        assert!(!is_curvilinear(&id(&["v^2", "v*w", "w^2"])).unwrap());
        assert!(is_curvilinear(&id(&["v", "w"])).unwrap());
    }
}
