use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Ordered list of variable names. Polynomials hold an `Arc` to their ring;
/// rings compare by their variable lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    vars: Vec<String>,
}

pub type RingRef = Arc<PolyRing>;

impl PolyRing {
    pub fn new<S: AsRef<str>>(vars: &[S]) -> Result<RingRef> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            let mut chars = v.chars();
            let valid =
                chars.next().is_some_and(|c| c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_alphanumeric());
            if !valid {
                return Err(Error::InvalidArgument(format!("bad variable name '{v}'")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidArgument(format!("duplicate variable '{v}'")));
            }
        }
        Ok(Arc::new(PolyRing { vars }))
    }

    /// Panicking constructor for literal variable lists.
    pub fn of(vars: &[&str]) -> RingRef {
        Self::new(vars).expect("valid variable list")
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.index_of(name).ok_or_else(|| Error::InvalidArgument(format!("unknown variable '{name}'")))
    }

    /// This ring with extra variables appended.
    pub fn extend<S: AsRef<str>>(&self, extra: &[S]) -> Result<RingRef> {
        let mut vars = self.vars.clone();
        vars.extend(extra.iter().map(|s| s.as_ref().to_string()));
        Self::new(&vars)
    }

    /// A variable name not yet used in this ring, derived from `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        if self.index_of(base).is_none() {
            return base.to_string();
        }
        (0..).map(|i| format!("{base}{i}")).find(|n| self.index_of(n).is_none()).expect("unbounded search")
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QQ[{}]", self.vars.join(","))
    }
}

/// Exponent vector, ordered graded-lexicographically (total degree first,
/// then lexicographic with the first variable largest).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize, e: u32) -> Self {
        let mut m = vec![0; nvars];
        m[i] = e;
        Monomial(m)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_names() {
        assert!(PolyRing::new(&["x", "x"]).is_err());
        assert!(PolyRing::new(&["1x"]).is_err());
        assert!(PolyRing::new(&["x0", "y_"]).is_err());
    }

    #[test]
    fn graded_lex() {
        let a = Monomial(vec![0, 3]);
        let b = Monomial(vec![1, 1]);
        let c = Monomial(vec![2, 0]);
        assert!(a > b); // degree wins
        assert!(c > b);
        assert!(Monomial(vec![1, 2]) > Monomial(vec![0, 3]));
    }
}
