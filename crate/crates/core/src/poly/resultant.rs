use super::matrix::PolyMatrix;
use super::polynomial::Poly;
use crate::arith::Field;
use crate::error::{Error, Result};

/// Determinant of the Sylvester matrix of `a` and `b` with respect to the
/// variable `var`.
pub fn sylvester_resultant<F: Field>(a: &Poly<F>, b: &Poly<F>, var: usize) -> Result<Poly<F>> {
    if a.ring() != b.ring() {
        return Err(Error::RingMismatch);
    }
    let m = a.degree_in(var).unwrap_or(0) as usize;
    let n = b.degree_in(var).unwrap_or(0) as usize;
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument("resultant needs positive degree in the variable".into()));
    }
    let ring = a.ring();
    let ca = a.coeffs_in(var);
    let cb = b.coeffs_in(var);
    let size = m + n;
    let mut entries = vec![Poly::zero(ring); size * size];
    for i in 0..n {
        for (k, c) in ca.iter().enumerate() {
            entries[i * size + i + m - k] = c.clone();
        }
    }
    for i in 0..m {
        for (k, c) in cb.iter().enumerate() {
            entries[(n + i) * size + i + n - k] = c.clone();
        }
    }
    PolyMatrix::new(ring, size, size, entries)?.determinant()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;
    use crate::poly::{parse_poly, PolyRing};

    #[test]
    fn small_resultants() {
        let r = PolyRing::of(&["x", "y"]);
        let p = |s: &str| -> Poly<Rational> { parse_poly(s, &r).unwrap() };
        let res = sylvester_resultant(&p("y - x"), &p("y + x"), 1).unwrap();
        assert_eq!(res, p("2*x"));
        assert!(sylvester_resultant(&p("y^2 - x"), &p("y^2 - x"), 1).unwrap().is_zero());
        assert!(sylvester_resultant(&p("x"), &p("y"), 1).is_err());
        let r2 = PolyRing::of(&["s", "t"]);
        let q = |s: &str| -> Poly<Rational> { parse_poly(s, &r2).unwrap() };
        assert_eq!(sylvester_resultant(&q("s*t - 1"), &q("t^2"), 1).unwrap(), Poly::one(&r2));
    }
}
