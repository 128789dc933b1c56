//! Rational normal curves, linear projections to the plane, plane
//! parameterizations and their implicit equations.

use serde::{Deserialize, Serialize};

use crate::arith::{Field, Rational};
use crate::error::{Error, Result};
use crate::groebner::{eliminate, hilbert_function, saturate, Ideal};
use crate::poly::gcd::monomial_content;
use crate::poly::matrix::{nullspace, rank};
use crate::poly::{
    parse_poly, poly_gcd, primitive, squarefree_multivariate, sylvester_resultant, Monomial, Poly, PolyRing, RingRef,
};

/// The rational normal curve of degree `n` in `P^n`, image of
/// `(s:t) -> (s^n : s^(n-1) t : ... : t^n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalNormalCurve {
    n: usize,
    ring: RingRef,
}

impl RationalNormalCurve {
    /// Coordinates named `z0..zn`.
    pub fn new(n: usize) -> Result<Self> {
        let names: Vec<String> = (0..=n).map(|i| format!("z{i}")).collect();
        Self::with_vars(n, &names)
    }

    /// Coordinates named `a, b, c, ...`.
    pub fn with_letters(n: usize) -> Result<Self> {
        if n >= 26 {
            return Err(Error::InvalidArgument("too many coordinates for letter names".into()));
        }
        let names: Vec<String> = (0..=n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
        Self::with_vars(n, &names)
    }

    pub fn with_vars<S: AsRef<str>>(n: usize, names: &[S]) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!("rational normal curve needs n >= 2, got {n}")));
        }
        if names.len() != n + 1 {
            return Err(Error::InvalidArgument(format!("expected {} coordinate names", n + 1)));
        }
        Ok(RationalNormalCurve { n, ring: PolyRing::new(names)? })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    /// 2x2 minors of `[[z0 .. z(n-1)], [z1 .. zn]]`.
    pub fn ideal(&self) -> Ideal {
        let z = |i: usize| Poly::var(&self.ring, i);
        let mut gens = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                gens.push(&(&z(i) * &z(j + 1)) - &(&z(i + 1) * &z(j)));
            }
        }
        Ideal::new(&self.ring, gens).expect("generators live in the curve ring")
    }

    pub fn point<F: Field>(&self, s: &F, t: &F) -> Vec<F> {
        (0..=self.n).map(|i| pow(s, self.n - i).mul(&pow(t, i))).collect()
    }

    /// Ideal of the point with parameter `(s:t)`.
    pub fn point_ideal(&self, s: &Rational, t: &Rational) -> Result<Ideal> {
        osculating_space_ideal(self, (s, t), 0)
    }

    /// Ideal of the union of `L^m` and the curve, where `L` is the line
    /// through the points with parameters `(1:0)` and `(0:1)`: the
    /// curvilinear scheme `m A + m B` on the curve.
    pub fn fat_endpoints(&self, m: u32) -> Result<Ideal> {
        let line = Ideal::new(&self.ring, (1..self.n).map(|i| Poly::var(&self.ring, i)).collect())?;
        let power = crate::groebner::ideal_power(&line, m)?;
        crate::groebner::ideal_combine(&power, &self.ideal(), crate::groebner::CombineOp::Sum)
    }
}

fn pow<F: Field>(x: &F, e: usize) -> F {
    (0..e).fold(F::one(), |acc, _| acc.mul(x))
}

/// Ideal of all rational normal curve points in `z0..zn`.
pub fn rnc_ideal(n: usize) -> Result<Ideal> {
    Ok(RationalNormalCurve::new(n)?.ideal())
}

fn falling(m: usize, a: usize) -> i64 {
    if a > m {
        return 0;
    }
    (0..a).map(|i| (m - i) as i64).product()
}

/// Linear forms cutting out the span of the curvilinear scheme `(r+1) Q`,
/// the `r`-th osculating space at the point with parameter `q`.
pub fn osculating_space_ideal(curve: &RationalNormalCurve, q: (&Rational, &Rational), r: usize) -> Result<Ideal> {
    let n = curve.n;
    if r >= n {
        return Err(Error::InvalidArgument(format!("osculating order {r} must be below {n}")));
    }
    if Field::is_zero(q.0) && Field::is_zero(q.1) {
        return Err(Error::InvalidArgument("parameter (0:0)".into()));
    }
    // All order-r partials of the moment map span the osculating space.
    let rows: Vec<Vec<Rational>> = (0..=r)
        .map(|a| {
            let b = r - a;
            (0..=n)
                .map(|i| {
                    let c = falling(n - i, a) * falling(i, b);
                    if c == 0 {
                        return <Rational as Field>::zero();
                    }
                    Rational::from_integer(c.into()).mul(&pow(q.0, n - i - a)).mul(&pow(q.1, i - b))
                })
                .collect()
        })
        .collect();
    let forms = nullspace(&rows, n + 1)
        .into_iter()
        .map(|v| Poly::from_terms(&curve.ring, v.into_iter().enumerate().map(|(i, c)| (Monomial::var(n + 1, i, 1), c))))
        .collect();
    Ok(Ideal::new(&curve.ring, forms)?.reduced())
}

/// Linearly independent linear forms defining a projection center.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearCenter {
    forms: Vec<Poly<Rational>>,
}

impl LinearCenter {
    pub fn new(forms: Vec<Poly<Rational>>) -> Result<Self> {
        let Some(ring) = forms.first().map(|f| f.ring().clone()) else {
            return Err(Error::InvalidArgument("empty center".into()));
        };
        if forms.iter().any(|f| f.ring() != &ring) {
            return Err(Error::RingMismatch);
        }
        if forms.iter().any(|f| !f.is_homogeneous() || f.total_degree() != Some(1)) {
            return Err(Error::InvalidArgument("center forms must be linear".into()));
        }
        let rows = coefficient_matrix(&forms);
        if rank(&rows) != forms.len() {
            return Err(Error::InvalidArgument("center forms are linearly dependent".into()));
        }
        Ok(LinearCenter { forms })
    }

    /// Forms separated by `;`.
    pub fn parse(text: &str, ring: &RingRef) -> Result<Self> {
        Self::new(text.split(';').map(|f| parse_poly(f.trim(), ring)).collect::<Result<Vec<_>>>()?)
    }

    pub fn forms(&self) -> &[Poly<Rational>] {
        &self.forms
    }

    pub fn ring(&self) -> &RingRef {
        self.forms[0].ring()
    }

    pub fn codim(&self) -> usize {
        self.forms.len()
    }

    pub fn ideal(&self) -> Ideal {
        Ideal::new(self.ring(), self.forms.clone()).expect("forms share a ring")
    }
}

fn coefficient_matrix(forms: &[Poly<Rational>]) -> Vec<Vec<Rational>> {
    forms
        .iter()
        .map(|f| {
            let n = f.ring().nvars();
            (0..n).map(|i| f.coefficient(&Monomial::var(n, i, 1))).collect()
        })
        .collect()
}

/// Three binary forms of equal degree in `s, t` without common zeros.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlaneParameterization {
    #[serde(with = "poly_strings")]
    forms: [Poly<Rational>; 3],
    pub proper: Option<bool>,
}

mod poly_strings {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::arith::Rational;
    use crate::poly::{parse_poly, Poly, PolyRing};

    pub fn serialize<S: Serializer>(forms: &[Poly<Rational>; 3], s: S) -> Result<S::Ok, S::Error> {
        forms.iter().map(|f| f.to_string()).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<[Poly<Rational>; 3], D::Error> {
        let texts = <[String; 3]>::deserialize(d)?;
        let ring = PolyRing::of(&["s", "t"]);
        let parse = |t: &str| parse_poly(t, &ring).map_err(serde::de::Error::custom);
        Ok([parse(&texts[0])?, parse(&texts[1])?, parse(&texts[2])?])
    }
}

impl PlaneParameterization {
    /// Forms in `QQ[s,t]`.
    pub fn new(f0: Poly<Rational>, f1: Poly<Rational>, f2: Poly<Rational>) -> Result<Self> {
        let ring = PolyRing::of(&["s", "t"]);
        let forms = [f0.to_ring(&ring)?, f1.to_ring(&ring)?, f2.to_ring(&ring)?];
        let degrees: Vec<Option<u32>> = forms.iter().filter(|f| !f.is_zero()).map(|f| f.total_degree()).collect();
        if degrees.is_empty() || forms.iter().any(|f| !f.is_homogeneous()) {
            return Err(Error::NotHomogeneous);
        }
        if degrees.iter().any(|d| *d != degrees[0]) || degrees[0] == Some(0) {
            return Err(Error::InvalidArgument("forms must share a positive degree".into()));
        }
        let g = poly_gcd(&poly_gcd(&forms[0], &forms[1]), &forms[2]);
        if !g.is_constant() {
            return Err(Error::BasePoints);
        }
        Ok(PlaneParameterization { forms, proper: None })
    }

    /// Three forms in `s, t` separated by `;`.
    pub fn parse(text: &str) -> Result<Self> {
        let ring = PolyRing::of(&["s", "t"]);
        let parts: Vec<&str> = text.split(';').collect();
        if parts.len() != 3 {
            return Err(Error::Parse { pos: 0, msg: format!("expected three forms, got {}", parts.len()) });
        }
        let p = |i: usize| parse_poly(parts[i].trim(), &ring);
        Self::new(p(0)?, p(1)?, p(2)?)
    }

    pub fn forms(&self) -> &[Poly<Rational>; 3] {
        &self.forms
    }

    pub fn degree(&self) -> usize {
        self.forms.iter().filter_map(|f| f.total_degree()).max().unwrap_or(0) as usize
    }

    /// `rows[j][i]` is the coefficient of `s^(n-i) t^i` in `f_j`.
    pub fn coefficient_rows(&self) -> [Vec<Rational>; 3] {
        let n = self.degree();
        let row =
            |f: &Poly<Rational>| (0..=n).map(|i| f.coefficient(&Monomial(vec![(n - i) as u32, i as u32]))).collect();
        [row(&self.forms[0]), row(&self.forms[1]), row(&self.forms[2])]
    }

    pub fn eval<F: Field>(&self, s: &F, t: &F) -> [F; 3] {
        let rows = self.coefficient_rows();
        let n = self.degree();
        let ev = |row: &Vec<Rational>| {
            row.iter().enumerate().fold(F::zero(), |acc, (i, c)| {
                acc.add(&F::from_rational(c.clone()).mul(&pow(s, n - i)).mul(&pow(t, i)))
            })
        };
        [ev(&rows[0]), ev(&rows[1]), ev(&rows[2])]
    }

    /// The center on `curve` whose projection gives this parameterization.
    pub fn center(&self, curve: &RationalNormalCurve) -> Result<LinearCenter> {
        if curve.n() != self.degree() {
            return Err(Error::InvalidArgument("curve degree differs from parameterization degree".into()));
        }
        let forms = self
            .coefficient_rows()
            .iter()
            .map(|row| {
                Poly::from_terms(
                    curve.ring(),
                    row.iter().enumerate().map(|(i, c)| (Monomial::var(curve.n() + 1, i, 1), c.clone())),
                )
            })
            .collect();
        LinearCenter::new(forms)
    }
}

impl std::fmt::Display for PlaneParameterization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}; {}; {}", self.forms[0], self.forms[1], self.forms[2])
    }
}

/// `f_j = l_j(s^n, s^(n-1) t, ..., t^n)`.
pub fn parameterization_from_center(
    curve: &RationalNormalCurve,
    center: &LinearCenter,
) -> Result<PlaneParameterization> {
    if center.ring() != curve.ring() {
        return Err(Error::RingMismatch);
    }
    if center.codim() != 3 {
        return Err(Error::InvalidArgument("plane projection needs three center forms".into()));
    }
    let st = PolyRing::of(&["s", "t"]);
    let n = curve.n() as u32;
    let images: Vec<Poly<Rational>> =
        (0..=n).map(|i| Poly::monomial(&st, Monomial(vec![n - i, i]), <Rational as Field>::one())).collect();
    let f = center.forms().iter().map(|l| l.substitute(&images)).collect::<Result<Vec<_>>>()?;
    match PlaneParameterization::new(f[0].clone(), f[1].clone(), f[2].clone()) {
        Err(Error::BasePoints) | Err(Error::NotHomogeneous) => Err(Error::CenterMeetsCurve),
        other => other,
    }
}

/// Image of a scheme under the projection from `center`, as an ideal in
/// the fresh `targets` variables (`u_i = l_i`).
pub fn project_scheme(scheme: &Ideal, center: &LinearCenter, targets: &[&str]) -> Result<Ideal> {
    let ring = scheme.ring();
    if center.ring() != ring {
        return Err(Error::RingMismatch);
    }
    if targets.len() != center.codim() {
        return Err(Error::InvalidArgument("one target variable per center form".into()));
    }
    let irrelevant = Ideal::irrelevant(ring);
    let sat = saturate(scheme, &irrelevant)?;
    let target_ring = PolyRing::new(targets)?;
    if sat.is_unit() {
        return Ok(Ideal::unit(&target_ring));
    }
    let meet = Ideal::new(ring, sat.gens().iter().chain(center.forms()).cloned().collect())?;
    if !saturate(&meet, &irrelevant)?.is_unit() {
        return Err(Error::CenterMeetsScheme);
    }
    let big = ring.extend(targets)?;
    let mut gens = sat.gens().iter().map(|g| g.to_ring(&big)).collect::<Result<Vec<_>>>()?;
    for (name, l) in targets.iter().zip(center.forms()) {
        gens.push(&Poly::var_named(&big, name)? - &l.to_ring(&big)?);
    }
    let ambient: Vec<&str> = ring.vars().iter().map(String::as_str).collect();
    let image = eliminate(&Ideal::new(&big, gens)?, &ambient)?;
    if image.is_unit() {
        return Err(Error::CenterMeetsScheme);
    }
    Ok(image.reduced())
}

/// Implicit equation of the image of a parameterization.
#[derive(Clone, Debug, PartialEq)]
pub struct ImplicitCurve {
    pub equation: Poly<Rational>,
    /// Degree of the map onto its image.
    pub map_degree: u32,
    /// Set when the stripped resultant is not a power of the returned
    /// equation.
    pub possibly_non_minimal: bool,
}

/// Implicit equation in `x, y, z`.
pub fn implicitize(p: &PlaneParameterization) -> Result<ImplicitCurve> {
    implicitize_with(p, ["x", "y", "z"])
}

/// Implicit equation with chosen coordinate names, from
/// `Res_t(y f0 - x f1, z f0 - x f2)` at `s = 1`.
pub fn implicitize_with(p: &PlaneParameterization, names: [&str; 3]) -> Result<ImplicitCurve> {
    let plane = PolyRing::new(&names)?;
    let tname = plane.fresh_name("t");
    let big = plane.extend(&[tname.as_str()])?;
    let st = p.forms[0].ring().clone();
    let dehom = vec![Poly::one(&big), Poly::var(&big, 3)];
    let f: Vec<Poly<Rational>> = p.forms.iter().map(|g| g.substitute(&dehom)).collect::<Result<_>>()?;
    let n = p.degree() as u32;
    for perm in [[0usize, 1, 2], [1, 0, 2], [2, 1, 0]] {
        let x = |i: usize| Poly::var(&big, perm[i]);
        let a = &(&x(1) * &f[perm[0]]) - &(&x(0) * &f[perm[1]]);
        let b = &(&x(2) * &f[perm[0]]) - &(&x(0) * &f[perm[2]]);
        if a.degree_in(3).unwrap_or(0) == 0 || b.degree_in(3).unwrap_or(0) == 0 {
            continue;
        }
        let res = sylvester_resultant(&a, &b, 3)?;
        if res.is_zero() {
            continue;
        }
        let res = res.to_ring(&plane)?;
        let (_, stripped) = monomial_content(&res);
        let eq = primitive(&squarefree_multivariate(&stripped)?);
        let d = eq.total_degree().unwrap_or(0);
        if d == 0 {
            continue;
        }
        let image: Vec<Poly<Rational>> = p.forms.iter().map(|g| g.to_ring(&st)).collect::<Result<_>>()?;
        if !eq.substitute(&image)?.is_zero() {
            return Err(Error::NotVanishing);
        }
        let map_degree = n / d;
        let power = eq.pow(map_degree);
        let possibly_non_minimal = !n.is_multiple_of(d) || primitive(&stripped) != primitive(&power);
        return Ok(ImplicitCurve { equation: eq, map_degree, possibly_non_minimal });
    }
    Err(Error::DegenerateResultant)
}

/// Outcome of intersecting the rational normal curve with the cone over
/// the center with a given vertex in the plane.
#[derive(Clone, Debug, PartialEq)]
pub struct FiberTest {
    pub point: Vec<Rational>,
    pub ideal: Ideal,
    pub length: u64,
    pub single_reduced_point: bool,
}

/// Fiber of the projection from `center` over the plane point `point`:
/// the curve intersected with the span of the center and that point,
/// saturated.
pub fn fiber_test(curve: &RationalNormalCurve, center: &LinearCenter, point: &[Rational]) -> Result<FiberTest> {
    if point.len() != center.codim() || point.iter().all(Field::is_zero) {
        return Err(Error::InvalidArgument("fiber point must be a nonzero vector with one entry per form".into()));
    }
    let l = center.forms();
    let mut gens = curve.ideal().gens().to_vec();
    for i in 0..l.len() {
        for j in i + 1..l.len() {
            let g = &l[j].scale(&point[i]) - &l[i].scale(&point[j]);
            if !g.is_zero() {
                gens.push(g);
            }
        }
    }
    let ideal = saturate(&Ideal::new(curve.ring(), gens)?, &Ideal::irrelevant(curve.ring()))?;
    let h = hilbert_function(&ideal, 0)?;
    if h.krull_dim > 1 {
        return Err(Error::PositiveDimensional);
    }
    let length = h.stable_value.unwrap_or(0);
    Ok(FiberTest { point: point.to_vec(), single_reduced_point: length == 1 && h.krull_dim == 1, length, ideal })
}

#[derive(Clone, Debug, PartialEq)]
pub struct Properness {
    pub proper: bool,
    pub map_degree: u32,
    pub fiber: Option<FiberTest>,
}

/// Map degree from the implicit equation; with `fiber_point`, also the
/// fiber over that plane point.
pub fn properness_check(p: &PlaneParameterization, fiber_point: Option<&[Rational]>) -> Result<Properness> {
    let imp = implicitize(p)?;
    let fiber = match fiber_point {
        Some(pt) => {
            let curve = RationalNormalCurve::new(p.degree())?;
            Some(fiber_test(&curve, &p.center(&curve)?, pt)?)
        }
        None => None,
    };
    Ok(Properness { proper: imp.map_degree == 1, map_degree: imp.map_degree, fiber })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn paper_center(c: &RationalNormalCurve) -> LinearCenter {
        LinearCenter::parse("a+g; 3*f-b-d; 9*e+c-d", c.ring()).unwrap()
    }

    #[test]
    fn rnc_generators_vanish_on_moment_map() {
        assert_eq!(rnc_ideal(2).unwrap().gens()[0].to_string(), "z0*z2 - z1^2");
        let c = RationalNormalCurve::with_letters(6).unwrap();
        let i = c.ideal();
        assert_eq!(i.gens().len(), 15);
        for g in ["a*c - b^2", "e*g - f^2"] {
            assert!(i.contains(&parse_poly(g, c.ring()).unwrap()));
        }
        let pt = c.point(&int(3), &int(-2));
        assert!(i.gens().iter().all(|g| Field::is_zero(&g.eval(&pt))));
        assert!(rnc_ideal(1).is_err());
    }

    #[test]
    fn osculating_planes_at_endpoints() {
        let c = RationalNormalCurve::with_letters(6).unwrap();
        let one = int(1);
        let zero = int(0);
        let b = osculating_space_ideal(&c, (&zero, &one), 2).unwrap();
        let a = osculating_space_ideal(&c, (&one, &zero), 2).unwrap();
        let lin =
            |s: &str| Ideal::new(c.ring(), s.split(',').map(|g| parse_poly(g, c.ring()).unwrap()).collect()).unwrap();
        assert!(b.same_ideal(&lin("a,b,c,d")));
        assert!(a.same_ideal(&lin("d,e,f,g")));
        let p = c.point_ideal(&one, &one).unwrap();
        assert!(p.same_ideal(&lin("a-g,b-g,c-g,d-g,e-g,f-g")));
        assert!(osculating_space_ideal(&c, (&one, &one), 6).is_err());
    }

    #[test]
    fn sextic_from_center() {
        let c = RationalNormalCurve::with_letters(6).unwrap();
        let p = parameterization_from_center(&c, &paper_center(&c)).unwrap();
        assert_eq!(p.to_string(), "s^6 + t^6; -s^5*t - s^3*t^3 + 3*s*t^5; s^4*t^2 - s^3*t^3 + 9*s^2*t^4");
        let conic = RationalNormalCurve::new(2).unwrap();
        let q =
            parameterization_from_center(&conic, &LinearCenter::parse("z0; z1; z2", conic.ring()).unwrap()).unwrap();
        assert_eq!(q.to_string(), "s^2; s*t; t^2");
        // All three forms vanish at (1:1).
        let bad = LinearCenter::parse("a-b; b-c; c-d", c.ring()).unwrap();
        assert_eq!(parameterization_from_center(&c, &bad).unwrap_err(), Error::CenterMeetsCurve);
    }

    #[test]
    fn implicit_equations() {
        let conic = PlaneParameterization::parse("s^2; s*t; t^2").unwrap();
        let f = implicitize(&conic).unwrap();
        assert_eq!(f.equation, parse_poly("x*z - y^2", f.equation.ring()).unwrap());
        assert_eq!(f.map_degree, 1);
        let cusp = implicitize(&PlaneParameterization::parse("s^3; s^2*t; t^3").unwrap()).unwrap();
        let r = cusp.equation.ring().clone();
        assert_eq!(primitive(&cusp.equation), primitive(&parse_poly("y^3 - x^2*z", &r).unwrap()));
        let double = PlaneParameterization::parse("s^4; s^2*t^2; t^4").unwrap();
        let pr = properness_check(&double, None).unwrap();
        assert!(!pr.proper);
        assert_eq!(pr.map_degree, 2);
        assert!(PlaneParameterization::parse("s^2; s*t; s^2 - s*t").is_err());
    }

    #[test]
    fn projection_of_a_point_matches_evaluation() {
        let c = RationalNormalCurve::with_letters(6).unwrap();
        let center = paper_center(&c);
        let img = project_scheme(&c.point_ideal(&int(1), &int(1)).unwrap(), &center, &["u", "v", "w"]).unwrap();
        let uvw = PolyRing::of(&["u", "v", "w"]);
        let expect =
            Ideal::new(&uvw, vec![parse_poly("v - 1/9*w", &uvw).unwrap(), parse_poly("u - 2/9*w", &uvw).unwrap()])
                .unwrap();
        assert_eq!(img.gens(), expect.reduced().gens());
        let p = parameterization_from_center(&c, &center).unwrap();
        let v = p.eval(&int(1), &int(1));
        assert_eq!(v, [int(2), int(1), int(9)]);
    }
}
