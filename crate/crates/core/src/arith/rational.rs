use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Shorthand for an integer-valued rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num / den`. Panics when `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn rational_op(lhs: &Rational, rhs: &Rational, op: ArithOp) -> Result<Rational> {
    Ok(match op {
        ArithOp::Add => lhs + rhs,
        ArithOp::Sub => lhs - rhs,
        ArithOp::Mul => lhs * rhs,
        ArithOp::Div => {
            if rhs.is_zero() {
                return Err(Error::DivisionByZero);
            }
            lhs / rhs
        }
    })
}

/// Parses `p`, `-p`, `p/q`. Whitespace around the tokens is ignored.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let trimmed = text.trim();
    let offset = text.len() - text.trim_start().len();
    let err = |pos: usize, msg: &str| Error::Parse { pos: offset + pos, msg: msg.to_string() };
    let (num, den) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), Some((n.len() + 1, d.trim()))),
        None => (trimmed, None),
    };
    let num: BigInt = num.parse().map_err(|_| err(0, &format!("malformed integer '{num}'")))?;
    let den: BigInt = match den {
        Some((pos, d)) => d.parse().map_err(|_| err(pos, &format!("malformed integer '{d}'")))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}

/// Exact square root of a rational, if it has one.
pub fn sqrt_rational(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &n * &n == *r.numer() && &d * &d == *r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

// Trial division stops here; larger cofactors are only tested for being a
// perfect square.
const TRIAL_BOUND: u64 = 100_000;

/// Writes `d = k^2 * m` with `m` a square-free integer (up to the trial
/// division bound) and returns `(k, m)`. `d` must be nonzero.
pub fn squarefree_normalize(d: &Rational) -> (Rational, BigInt) {
    assert!(!d.is_zero(), "cannot normalize zero discriminant");
    // p/q = (1/q)^2 * (p*q)
    let mut m = d.numer() * d.denom();
    let mut k = Rational::new(BigInt::one(), d.denom().clone());
    let mut i: u64 = 2;
    loop {
        let ib = BigInt::from(i);
        let sq = &ib * &ib;
        if &sq * &ib > m.abs() || i > TRIAL_BOUND {
            break;
        }
        while (&m % &sq).is_zero() {
            m /= &sq;
            k *= Rational::from_integer(ib.clone());
        }
        i += if i == 2 { 1 } else { 2 };
    }
    let abs = m.abs();
    let root = abs.sqrt();
    if &root * &root == abs && !root.is_one() {
        k *= Rational::from_integer(root);
        m = if m.is_negative() { -BigInt::one() } else { BigInt::one() };
    }
    (k, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adds_and_normalizes() {
        assert_eq!(rational_op(&rat(1, 2), &rat(1, 3), ArithOp::Add).unwrap(), rat(5, 6));
        let half = rat(2, 4);
        assert_eq!(half.numer(), &BigInt::from(1));
        assert_eq!(half.denom(), &BigInt::from(2));
        assert_eq!(rat(0, 7).denom(), &BigInt::from(1));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(rational_op(&int(1), &int(0), ArithOp::Div), Err(Error::DivisionByZero));
        assert_eq!(parse_rational("3/0"), Err(Error::DivisionByZero));
    }

    #[test]
    fn parses_forms() {
        assert_eq!(parse_rational("-3/6").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational(" 42 ").unwrap(), int(42));
        assert!(matches!(parse_rational("4x"), Err(Error::Parse { .. })));
    }

    #[test]
    fn squarefree_parts() {
        assert_eq!(squarefree_normalize(&int(12)), (int(2), BigInt::from(3)));
        assert_eq!(squarefree_normalize(&int(-4)), (int(2), BigInt::from(-1)));
        assert_eq!(squarefree_normalize(&rat(1, 2)), (rat(1, 2), BigInt::from(2)));
        assert_eq!(squarefree_normalize(&int(49)), (int(7), BigInt::from(1)));
        // 1000003 is prime: 1000003^2 * 5 is beyond the trial bound
        let big = int(1_000_003) * int(1_000_003) * int(5);
        let (k, m) = squarefree_normalize(&big);
        assert_eq!(&k * &k * Rational::from_integer(m), big);
    }

    #[test]
    fn square_roots() {
        assert_eq!(sqrt_rational(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(sqrt_rational(&int(2)), None);
        assert_eq!(sqrt_rational(&int(-1)), None);
    }
}
