use std::fmt;
use std::hash::Hash;

use num_traits::{One, Zero};

use super::{QuadExt, Rational};
use crate::poly::univariate::{euclid_gcd, primitive_prs_gcd, UniPoly};

/// Coefficient field of every polynomial in the crate.
///
/// Only two implementations exist: [`Rational`] and [`QuadExt`]. Arithmetic
/// on [`QuadExt`] panics when the operands carry different extension tags;
/// use the `checked_*` methods on [`QuadExt`] for a fallible variant.
pub trait Field: Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul(&r))
    }
    fn from_rational(r: Rational) -> Self;
    fn from_int(n: i64) -> Self {
        Self::from_rational(super::int(n))
    }
    /// The value as a rational, when it lies in the base field.
    fn to_rational(&self) -> Option<Rational>;
    fn to_quad(&self) -> QuadExt;
    /// Whether the printed form needs parentheses when used as a factor.
    fn is_compound(&self) -> bool {
        false
    }
    /// Monic univariate gcd; fields pick the algorithm that suits them.
    fn uni_gcd(a: &UniPoly<Self>, b: &UniPoly<Self>) -> UniPoly<Self> {
        euclid_gcd(a, b)
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn to_quad(&self) -> QuadExt {
        QuadExt::rational(self.clone())
    }
    fn uni_gcd(a: &UniPoly<Self>, b: &UniPoly<Self>) -> UniPoly<Self> {
        primitive_prs_gcd(a, b)
    }
}
