use std::collections::HashMap;

use super::polynomial::Poly;
use super::ring::RingRef;
use crate::arith::Field;
use crate::error::{Error, Result};

/// Determinant of a square scalar matrix by Gaussian elimination.
pub fn determinant<F: Field>(m: &[Vec<F>]) -> F {
    let n = m.len();
    let mut a: Vec<Vec<F>> = m.to_vec();
    let mut det = F::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return F::zero();
        };
        if p != col {
            a.swap(p, col);
            det = det.neg();
        }
        let pivot = a[col][col].clone();
        det = det.mul(&pivot);
        let inv = pivot.inv().unwrap();
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].mul(&inv);
            let (top, rest) = a.split_at_mut(r);
            for (x, p) in rest[0][col..n].iter_mut().zip(&top[col][col..n]) {
                *x = x.sub(&factor.mul(p));
            }
        }
    }
    det
}

/// Reduced row echelon form; returns the nonzero rows and their pivot
/// columns.
pub fn rref<F: Field>(rows: &[Vec<F>]) -> (Vec<Vec<F>>, Vec<usize>) {
    let mut a: Vec<Vec<F>> = rows.to_vec();
    let ncols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let inv = a[r][c].inv().unwrap();
        let pivot_row: Vec<F> = a[r].iter().map(|x| x.mul(&inv)).collect();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x = x.sub(&f.mul(p));
            }
        }
        a[r] = pivot_row;
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

pub fn rank<F: Field>(rows: &[Vec<F>]) -> usize {
    rref(rows).1.len()
}

/// Basis of `{ v : M v = 0 }`.
pub fn nullspace<F: Field>(rows: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let (r, pivots) = rref(rows);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero(); ncols];
            v[f] = F::one();
            for (row, &p) in r.iter().zip(&pivots) {
                v[p] = row[f].neg();
            }
            v
        })
        .collect()
}

pub fn inverse<F: Field>(m: &[Vec<F>]) -> Result<Vec<Vec<F>>> {
    let n = m.len();
    let aug: Vec<Vec<F>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
            r
        })
        .collect();
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return Err(Error::SingularMatrix);
    }
    Ok(r.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn mat_mul<F: Field>(a: &[Vec<F>], b: &[Vec<F>]) -> Vec<Vec<F>> {
    a.iter()
        .map(|row| {
            (0..b[0].len())
                .map(|j| row.iter().zip(b).fold(F::zero(), |acc, (x, brow)| acc.add(&x.mul(&brow[j]))))
                .collect()
        })
        .collect()
}

pub fn identity<F: Field>(n: usize) -> Vec<Vec<F>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { F::one() } else { F::zero() }).collect()).collect()
}

/// Matrix of polynomials over one ring, stored row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix<F: Field> {
    ring: RingRef,
    rows: usize,
    cols: usize,
    entries: Vec<Poly<F>>,
}

// Beyond this size Laplace expansion with memoization is replaced by
// fraction-free elimination.
const LAPLACE_MAX: usize = 16;

impl<F: Field> PolyMatrix<F> {
    pub fn new(ring: &RingRef, rows: usize, cols: usize, entries: Vec<Poly<F>>) -> Result<Self> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::InvalidArgument(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        if entries.iter().any(|e| e.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        Ok(PolyMatrix { ring: ring.clone(), rows, cols, entries })
    }

    pub fn from_rows(ring: &RingRef, rows: Vec<Vec<Poly<F>>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidArgument("ragged rows".into()));
        }
        Self::new(ring, r, c, rows.into_iter().flatten().collect())
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly<F> {
        &self.entries[i * self.cols + j]
    }

    pub fn determinant(&self) -> Result<Poly<F>> {
        if self.rows != self.cols {
            return Err(Error::InvalidArgument("determinant of a non-square matrix".into()));
        }
        if self.rows <= LAPLACE_MAX {
            let rows: Vec<usize> = (0..self.rows).collect();
            let mut cache = HashMap::new();
            Ok(self.laplace(&rows, (1u64 << self.cols) - 1, &mut cache))
        } else {
            Ok(self.bareiss())
        }
    }

    /// All `size`-minors, row subsets in lexicographic order, and for each
    /// row subset the column subsets in lexicographic order.
    pub fn minors(&self, size: usize) -> Result<Vec<Poly<F>>> {
        if size == 0 || size > self.rows.min(self.cols) {
            return Err(Error::InvalidArgument(format!(
                "minor size {size} out of range for a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        if self.cols > 64 || self.rows > 64 {
            return Err(Error::InvalidArgument("matrix too large for minors".into()));
        }
        let row_sets = combinations(self.rows, size);
        let col_sets = combinations(self.cols, size);
        let mut cache = HashMap::new();
        let mut out = Vec::with_capacity(row_sets.len() * col_sets.len());
        for rs in &row_sets {
            for cs in &col_sets {
                let mask = cs.iter().fold(0u64, |m, &c| m | (1 << c));
                out.push(self.laplace(rs, mask, &mut cache));
            }
        }
        Ok(out)
    }

    // Expansion along the first remaining row; sub-determinants are shared
    // through the (row set, column set) cache.
    fn laplace(&self, rows: &[usize], cols: u64, cache: &mut HashMap<(u64, u64), Poly<F>>) -> Poly<F> {
        let Some((&r, rest)) = rows.split_first() else {
            return Poly::one(&self.ring);
        };
        let key = (rows.iter().fold(0u64, |m, &i| m | (1 << i)), cols);
        if let Some(v) = cache.get(&key) {
            return v.clone();
        }
        let mut acc = Poly::zero(&self.ring);
        let mut position = 0;
        for c in 0..self.cols {
            if cols & (1 << c) == 0 {
                continue;
            }
            let entry = self.get(r, c);
            if !entry.is_zero() {
                let sub = self.laplace(rest, cols & !(1 << c), cache);
                if !sub.is_zero() {
                    let term = entry * &sub;
                    acc = if position % 2 == 0 { &acc + &term } else { &acc - &term };
                }
            }
            position += 1;
        }
        cache.insert(key, acc.clone());
        acc
    }

    fn bareiss(&self) -> Poly<F> {
        let n = self.rows;
        let mut a: Vec<Vec<Poly<F>>> = (0..n).map(|i| (0..n).map(|j| self.get(i, j).clone()).collect()).collect();
        let mut sign = false;
        let mut prev = Poly::one(&self.ring);
        for k in 0..n - 1 {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return Poly::zero(&self.ring);
            };
            if p != k {
                a.swap(p, k);
                sign = !sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
                }
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        if sign {
            -det
        } else {
            det
        }
    }
}

/// `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, Rational};
    use crate::poly::{parse_poly, PolyRing};

    fn p(s: &str, r: &RingRef) -> Poly<Rational> {
        parse_poly(s, r).unwrap()
    }

    #[test]
    fn two_by_two_minor() {
        let r = PolyRing::of(&["x", "y", "z", "w"]);
        let m = PolyMatrix::from_rows(&r, vec![vec![p("x", &r), p("y", &r)], vec![p("z", &r), p("w", &r)]]).unwrap();
        assert_eq!(m.minors(2).unwrap(), vec![p("x*w - y*z", &r)]);
        let ones = m.minors(1).unwrap();
        assert_eq!(ones, vec![p("x", &r), p("y", &r), p("z", &r), p("w", &r)]);
        assert!(m.minors(3).is_err());
    }

    #[test]
    fn laplace_agrees_with_bareiss() {
        let r = PolyRing::of(&["x", "y"]);
        let texts = ["x", "y+1", "2", "x*y", "0", "x^2", "y", "3", "1", "x-y", "x+1", "0", "y^2", "7", "x", "y-2"];
        let m = PolyMatrix::new(&r, 4, 4, texts.iter().map(|t| p(t, &r)).collect()).unwrap();
        let rows: Vec<usize> = (0..4).collect();
        let lap = m.laplace(&rows, 0b1111, &mut HashMap::new());
        assert_eq!(lap, m.bareiss());
    }

    #[test]
    fn scalar_helpers() {
        let m = vec![vec![int(2), int(1)], vec![int(4), int(3)]];
        assert_eq!(determinant(&m), int(2));
        let inv = inverse(&m).unwrap();
        assert_eq!(mat_mul(&m, &inv), identity(2));
        assert_eq!(inverse(&[vec![int(1), int(2)], vec![int(2), int(4)]]), Err(Error::SingularMatrix));
        let ns = nullspace(&[vec![int(1), int(2), int(3)]], 3);
        assert_eq!(ns.len(), 2);
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
    }
}
