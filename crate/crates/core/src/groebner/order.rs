use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderKind {
    Grevlex,
    Lex,
    /// The first `block` variables (in significance order) are eliminated;
    /// grevlex inside each block.
    Elimination {
        block: usize,
    },
}

/// A monomial order on a ring: a kind plus the significance order of the
/// ring's variables (`perm[0]` is the most significant).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TermOrder {
    pub kind: OrderKind,
    pub perm: Vec<usize>,
}

impl TermOrder {
    pub fn grevlex(nvars: usize) -> Self {
        TermOrder { kind: OrderKind::Grevlex, perm: (0..nvars).collect() }
    }

    pub fn lex(nvars: usize) -> Self {
        TermOrder { kind: OrderKind::Lex, perm: (0..nvars).collect() }
    }

    /// Lex with an explicit significance order.
    pub fn lex_by(perm: Vec<usize>) -> Result<Self> {
        check_perm(&perm)?;
        Ok(TermOrder { kind: OrderKind::Lex, perm })
    }

    /// Grevlex in which variable `last` is the least significant.
    pub fn grevlex_with_last(nvars: usize, last: usize) -> Self {
        let mut perm: Vec<usize> = (0..nvars).filter(|&i| i != last).collect();
        perm.push(last);
        TermOrder { kind: OrderKind::Grevlex, perm }
    }

    /// Block order eliminating the variables in `drop`.
    pub fn elimination(nvars: usize, drop: &[usize]) -> Result<Self> {
        if drop.iter().any(|&i| i >= nvars) {
            return Err(Error::InvalidArgument("variable index out of range".into()));
        }
        let mut perm: Vec<usize> = (0..nvars).filter(|i| drop.contains(i)).collect();
        let block = perm.len();
        perm.extend((0..nvars).filter(|i| !drop.contains(i)));
        Ok(TermOrder { kind: OrderKind::Elimination { block }, perm })
    }

    pub fn nvars(&self) -> usize {
        self.perm.len()
    }

    /// Compares exponent vectors already written in significance order.
    pub(crate) fn cmp_sig(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self.kind {
            OrderKind::Lex => a.cmp(b),
            OrderKind::Grevlex => grevlex(a, b),
            OrderKind::Elimination { block } => {
                grevlex(&a[..block], &b[..block]).then_with(|| grevlex(&a[block..], &b[block..]))
            }
        }
    }

    /// Compares exponent vectors in ring order.
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        self.cmp_sig(&self.to_sig(a), &self.to_sig(b))
    }

    pub(crate) fn to_sig(&self, e: &[u32]) -> Vec<u32> {
        self.perm.iter().map(|&i| e[i]).collect()
    }

    pub(crate) fn unsig(&self, e: &[u32]) -> Vec<u32> {
        let mut out = vec![0; e.len()];
        for (k, &i) in self.perm.iter().enumerate() {
            out[i] = e[k];
        }
        out
    }
}

fn check_perm(perm: &[usize]) -> Result<()> {
    let mut seen = vec![false; perm.len()];
    for &i in perm {
        if i >= perm.len() || std::mem::replace(&mut seen[i], true) {
            return Err(Error::InvalidArgument("not a permutation of the variables".into()));
        }
    }
    Ok(())
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_prefers_fewer_last_variables() {
        let o = TermOrder::grevlex(3);
        // x*z < y^2 in grevlex with x > y > z
        assert_eq!(o.cmp(&[1, 0, 1], &[0, 2, 0]), Ordering::Less);
        assert_eq!(o.cmp(&[2, 0, 0], &[1, 1, 0]), Ordering::Greater);
        let l = TermOrder::lex(3);
        assert_eq!(l.cmp(&[1, 0, 0], &[0, 5, 5]), Ordering::Greater);
    }

    #[test]
    fn elimination_block_dominates() {
        let o = TermOrder::elimination(3, &[1]).unwrap();
        assert_eq!(o.cmp(&[0, 1, 0], &[5, 0, 5]), Ordering::Greater);
        assert_eq!(o.cmp(&[2, 0, 0], &[1, 0, 1]), Ordering::Greater);
        let h = TermOrder::grevlex_with_last(3, 0);
        assert_eq!(h.perm, vec![1, 2, 0]);
    }
}
