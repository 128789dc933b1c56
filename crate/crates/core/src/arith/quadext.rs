use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{parse_rational, sqrt_rational, squarefree_normalize, ArithOp};
use super::Rational;
use crate::error::{Error, Result};

/// Element `a + b*sqrt(d)` of a quadratic extension of the rationals.
///
/// `d` is a square-free integer other than 1 and is only present while
/// `b != 0`; elements with `b == 0` are plain rationals and combine with any
/// extension.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
    d: Option<Rational>,
}

impl QuadExt {
    pub fn rational(a: Rational) -> Self {
        QuadExt { a, b: Rational::zero(), d: None }
    }

    /// Builds `a + b*sqrt(d)`. `d` is normalized to its square-free integer
    /// representative; a rational square `d` yields a rational element.
    pub fn new(a: Rational, b: Rational, d: &Rational) -> Result<Self> {
        if d.is_zero() {
            return Ok(Self::rational(a));
        }
        let (k, m) = squarefree_normalize(d);
        if m.is_one() {
            return Ok(Self::rational(a + b * k));
        }
        Ok(Self::with_tag(a, b * k, Some(Rational::from_integer(m))))
    }

    /// `sqrt(d)` itself.
    pub fn sqrt_of(d: &Rational) -> Result<Self> {
        Self::new(Rational::zero(), Rational::one(), d)
    }

    fn with_tag(a: Rational, b: Rational, d: Option<Rational>) -> Self {
        if b.is_zero() {
            QuadExt { a, b, d: None }
        } else {
            QuadExt { a, b, d }
        }
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    /// Extension tag; `None` for rational elements.
    pub fn d(&self) -> Option<&Rational> {
        self.d.as_ref()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn tag(&self, rhs: &Self) -> Result<Option<Rational>> {
        match (&self.d, &rhs.d) {
            (Some(x), Some(y)) if x != y => Err(Error::ExtensionMismatch(Box::new([x.clone(), y.clone()]))),
            (Some(x), _) | (None, Some(x)) => Ok(Some(x.clone())),
            (None, None) => Ok(None),
        }
    }

    /// Field norm `a^2 - d*b^2`.
    pub fn norm(&self) -> Rational {
        match &self.d {
            Some(d) => &self.a * &self.a - d * &self.b * &self.b,
            None => &self.a * &self.a,
        }
    }

    pub fn conjugate(&self) -> Self {
        Self::with_tag(self.a.clone(), -&self.b, self.d.clone())
    }

    pub fn checked_op(&self, rhs: &Self, op: ArithOp) -> Result<Self> {
        let d = self.tag(rhs)?;
        Ok(match op {
            ArithOp::Add => Self::with_tag(&self.a + &rhs.a, &self.b + &rhs.b, d),
            ArithOp::Sub => Self::with_tag(&self.a - &rhs.a, &self.b - &rhs.b, d),
            ArithOp::Mul => {
                let dd = d.clone().unwrap_or_else(Rational::zero);
                let a = &self.a * &rhs.a + dd * &self.b * &rhs.b;
                let b = &self.a * &rhs.b + &self.b * &rhs.a;
                Self::with_tag(a, b, d)
            }
            ArithOp::Div => {
                let n = rhs.norm();
                if n.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                let num = self.checked_op(&rhs.conjugate(), ArithOp::Mul)?;
                Self::with_tag(&num.a / &n, &num.b / &n, num.d.or(d))
            }
        })
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.checked_op(rhs, ArithOp::Add)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.checked_op(rhs, ArithOp::Sub)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.checked_op(rhs, ArithOp::Mul)
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        self.checked_op(rhs, ArithOp::Div)
    }

    /// Square root in this element's field, or in a fresh quadratic
    /// extension when the element is a non-square rational. Needing a second
    /// extension on top of an existing one is refused.
    pub fn sqrt(&self) -> Result<Self> {
        if self.is_rational() {
            if let Some(r) = sqrt_rational(&self.a) {
                return Ok(Self::rational(r));
            }
            let (k, m) = squarefree_normalize(&self.a);
            let m = Rational::from_integer(m);
            return match &self.d {
                Some(d) if *d != m => Err(self.nested()),
                _ => Ok(Self::with_tag(Rational::zero(), k, Some(m))),
            };
        }
        let d = self.d.clone().expect("irrational element carries a tag");
        // (x + y*sqrt(d))^2 = x^2 + d*y^2 + 2xy*sqrt(d)
        let root_norm = sqrt_rational(&self.norm()).ok_or_else(|| self.nested())?;
        let two = Rational::from_integer(BigInt::from(2));
        for cand in [(&self.a + &root_norm) / &two, (&self.a - &root_norm) / &two] {
            if let Some(x) = sqrt_rational(&cand).filter(|x| !x.is_zero()) {
                let y = &self.b / (&two * &x);
                return Ok(Self::with_tag(x, y, Some(d)));
            }
        }
        Err(self.nested())
    }

    fn nested(&self) -> Error {
        Error::ExtensionUnsupported(format!("square root of {self} needs a nested radical"))
    }

    /// Parses `a`, `a + b*sqrt(d)`, `a - sqrt(d)`, `b*sqrt(d)` and `sqrt(d)`.
    pub fn parse(text: &str) -> Result<Self> {
        let s = text.trim();
        let Some(pos) = s.find("sqrt(") else {
            return Ok(Self::rational(parse_rational(s)?));
        };
        let close = s[pos..].find(')').map(|c| pos + c).ok_or(Error::Parse { pos, msg: "unclosed sqrt(".into() })?;
        if !s[close + 1..].trim().is_empty() {
            return Err(Error::Parse { pos: close + 1, msg: "trailing input".into() });
        }
        let d = parse_rational(&s[pos + 5..close])?;
        let head = s[..pos].trim_end();
        let head = head.strip_suffix('*').unwrap_or(head).trim_end();
        // head = "[a] (+|-) [b]" or "[b]"
        let split = head
            .char_indices()
            .rev()
            .find(|&(i, c)| (c == '+' || c == '-') && i > 0 && !head[..i].trim().is_empty())
            .map(|(i, _)| i);
        let (a_text, b_text) = match split {
            Some(i) => (head[..i].trim(), head[i..].trim()),
            None => ("", head),
        };
        let a = if a_text.is_empty() { Rational::zero() } else { parse_rational(a_text)? };
        let b_compact: String = b_text.chars().filter(|c| !c.is_whitespace()).collect();
        let b = match b_compact.as_str() {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            other => parse_rational(other.strip_prefix('+').unwrap_or(other))?,
        };
        Self::new(a, b, &d)
    }
}

impl serde::Serialize for QuadExt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for QuadExt {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        QuadExt::parse(&text).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(d) = &self.d else {
            return write!(f, "{}", self.a);
        };
        let radical = format!("sqrt({d})");
        let b_abs = self.b.abs();
        let b_part = if b_abs.is_one() { radical } else { format!("{b_abs}*{radical}") };
        if self.a.is_zero() {
            if self.b.is_negative() {
                write!(f, "-{b_part}")
            } else {
                write!(f, "{b_part}")
            }
        } else {
            let sign = if self.b.is_negative() { '-' } else { '+' };
            write!(f, "{} {sign} {b_part}", self.a)
        }
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadExt({self})")
    }
}

impl super::Field for QuadExt {
    fn zero() -> Self {
        Self::rational(<Rational as Zero>::zero())
    }
    fn one() -> Self {
        Self::rational(<Rational as One>::one())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.a) && Zero::is_zero(&self.b)
    }
    fn add(&self, rhs: &Self) -> Self {
        self.checked_add(rhs).expect("quadratic extension tags differ")
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.checked_sub(rhs).expect("quadratic extension tags differ")
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.checked_mul(rhs).expect("quadratic extension tags differ")
    }
    fn neg(&self) -> Self {
        Self::with_tag(-&self.a, -&self.b, self.d.clone())
    }
    fn inv(&self) -> Option<Self> {
        Self::rational(<Rational as One>::one()).checked_div(self).ok()
    }
    fn from_rational(r: Rational) -> Self {
        Self::rational(r)
    }
    fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.a.clone())
    }
    fn to_quad(&self) -> QuadExt {
        self.clone()
    }
    fn is_compound(&self) -> bool {
        !self.is_rational() && !Zero::is_zero(&self.a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Field;
    use crate::arith::{int, rat};

    fn q(a: i64, b: i64, d: i64) -> QuadExt {
        QuadExt::new(int(a), int(b), &int(d)).unwrap()
    }

    #[test]
    fn gaussian_products() {
        assert_eq!(q(1, 1, -1).mul(&q(1, -1, -1)), QuadExt::from_int(2));
        let i = q(0, 1, -1);
        assert_eq!(i.mul(&i), QuadExt::from_int(-1));
    }

    #[test]
    fn inverse_of_one_plus_sqrt2() {
        let x = q(1, 1, 2);
        let inv = x.inv().unwrap();
        assert_eq!(inv, q(-1, 1, 2));
        assert_eq!(inv.mul(&x), QuadExt::one());
    }

    #[test]
    fn mismatched_tags_refuse() {
        let e = q(0, 1, 2).checked_add(&q(0, 1, 3));
        assert!(matches!(e, Err(Error::ExtensionMismatch(_))));
        assert_eq!(q(0, 0, 2).checked_add(&q(0, 1, 3)).unwrap(), q(0, 1, 3));
    }

    #[test]
    fn zero_norm_division() {
        assert_eq!(QuadExt::one().checked_div(&QuadExt::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn tag_is_normalized() {
        // sqrt(-4) = 2*sqrt(-1), sqrt(1/2) = (1/2)*sqrt(2)
        assert_eq!(QuadExt::sqrt_of(&int(-4)).unwrap(), q(0, 2, -1));
        assert_eq!(QuadExt::sqrt_of(&rat(1, 2)).unwrap(), QuadExt::new(int(0), rat(1, 2), &int(2)).unwrap());
        assert_eq!(QuadExt::sqrt_of(&int(9)).unwrap(), QuadExt::from_int(3));
    }

    #[test]
    fn square_roots() {
        assert_eq!(QuadExt::from_int(-1).sqrt().unwrap(), q(0, 1, -1));
        // (1 + sqrt 2)^2 = 3 + 2 sqrt 2
        let r = q(3, 2, 2).sqrt().unwrap();
        assert_eq!(r.mul(&r), q(3, 2, 2));
        // sqrt(2*sqrt(2)) needs a fourth root of 2
        assert!(matches!(q(0, 2, 2).sqrt(), Err(Error::ExtensionUnsupported(_))));
        // sqrt(3) inside Q(sqrt 2)
        assert!(q(3, 0, 2).sqrt().unwrap().d().is_some());
        let in_two = q(1, 1, 2);
        assert!(in_two.checked_mul(&QuadExt::from_int(3).sqrt().unwrap()).is_err());
    }

    #[test]
    fn square_root_that_is_pure_radical_multiple() {
        // (sqrt 2)^2 = 2 is rational; (1/2 + (1/2)sqrt(-3))^2 = -1/2 + (1/2)sqrt(-3)
        let w = QuadExt::new(rat(1, 2), rat(1, 2), &int(-3)).unwrap();
        let sq = w.mul(&w);
        let r = sq.sqrt().unwrap();
        assert_eq!(r.mul(&r), sq);
    }

    #[test]
    fn display_and_parse() {
        for (x, s) in [
            (q(1, 1, -1), "1 + sqrt(-1)"),
            (q(1, -1, -1), "1 - sqrt(-1)"),
            (q(0, -3, 2), "-3*sqrt(2)"),
            (q(-1, 2, 5), "-1 + 2*sqrt(5)"),
            (QuadExt::from_int(7), "7"),
        ] {
            assert_eq!(x.to_string(), s);
            assert_eq!(QuadExt::parse(s).unwrap(), x);
        }
        assert_eq!(
            QuadExt::parse("1/2 + 3/4*sqrt(-1)").unwrap(),
            QuadExt::new(rat(1, 2), rat(3, 4), &int(-1)).unwrap()
        );
    }
}
