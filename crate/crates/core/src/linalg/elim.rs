//! Exact Gaussian elimination: rank, kernel, and linear solves.
//!
//! Rows are processed in index order and pivots taken at the leftmost
//! surviving column, so every result is a function of the input alone.

use super::rational::{one, Rational};
use super::sparse::{SparseMatrix, SparseVec};
use crate::error::{Error, Result};
use num::{One, Zero};
use std::collections::BTreeMap;

/// Incremental row-echelon basis of a subspace of `Q^ncols`.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<SparseVec>,
    pivot_row: BTreeMap<usize, usize>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
            pivot_row: BTreeMap::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Eliminates every pivot column from `v`.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        let mut from = 0usize;
        loop {
            let hit = v
                .iter()
                .find(|(c, _)| *c >= from && self.pivot_row.contains_key(c))
                .map(|(c, x)| (*c, x.clone()));
            match hit {
                None => return v,
                Some((c, x)) => {
                    let r = &self.rows[self.pivot_row[&c]];
                    v = v.axpy(&-x, r);
                    from = c + 1;
                }
            }
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span; returns false when it was already there.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce(v);
        match r.lead() {
            None => false,
            Some((c, x)) => {
                let c = *c;
                let inv = one() / x;
                let r = r.scale(&inv);
                self.pivot_row.insert(c, self.rows.len());
                self.rows.push(r);
                true
            }
        }
    }

    /// Reduced row-echelon form of the span.
    pub fn into_rref(self) -> Rref {
        let mut order: Vec<(usize, usize)> = self.pivot_row.iter().map(|(c, r)| (*c, *r)).collect();
        order.sort();
        let rows: Vec<SparseVec> = order
            .iter()
            .map(|(c, r)| {
                let row = &self.rows[*r];
                let lead = SparseVec::unit(*c);
                let rest = SparseVec::from_pairs(row.iter().filter(|(j, _)| j != c).cloned());
                lead.add(&self.reduce(&rest))
            })
            .collect();
        Rref {
            ncols: self.ncols,
            pivots: order.iter().map(|(c, _)| *c).collect(),
            rows,
        }
    }
}

/// Reduced row-echelon form: `rows[i]` has a leading 1 at `pivots[i]` and
/// zeros in every other pivot column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub ncols: usize,
    pub pivots: Vec<usize>,
    pub rows: Vec<SparseVec>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Kernel basis of the matrix this is the RREF of, one vector per free
    /// column, in ascending free-column order.
    pub fn kernel(&self) -> Vec<SparseVec> {
        let mut is_pivot = vec![false; self.ncols];
        for p in &self.pivots {
            is_pivot[*p] = true;
        }
        let mut by_col: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.ncols];
        for (p, row) in self.pivots.iter().zip(&self.rows) {
            for (c, v) in row.iter() {
                if c != p {
                    by_col[*c].push((*p, -v.clone()));
                }
            }
        }
        (0..self.ncols)
            .filter(|c| !is_pivot[*c])
            .map(|f| {
                let mut pairs = std::mem::take(&mut by_col[f]);
                pairs.push((f, one()));
                SparseVec::from_pairs(pairs)
            })
            .collect()
    }
}

fn rref_sparse(m: &SparseMatrix) -> Rref {
    let mut e = Echelon::new(m.ncols());
    for row in m.rows() {
        e.insert(row);
    }
    e.into_rref()
}

fn rref_dense(m: &SparseMatrix) -> Rref {
    let mut a = m.to_dense();
    let (nr, nc) = (m.nrows(), m.ncols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..nc {
        if r == nr {
            break;
        }
        let Some(p) = (r..nr).find(|i| !a[*i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = one() / &a[r][c];
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Rref {
        ncols: nc,
        rows: a[..pivots.len()].iter().map(|v| SparseVec::from_dense(v)).collect(),
        pivots,
    }
}

/// RREF, switching to a dense elimination when more than half of the
/// entries are nonzero. Both paths return the identical (unique) RREF.
pub fn rref(m: &SparseMatrix) -> Rref {
    if m.nrows() > 0 && m.ncols() > 0 && m.is_dense() {
        rref_dense(m)
    } else {
        rref_sparse(m)
    }
}

pub fn rref_forced(m: &SparseMatrix, dense: bool) -> Rref {
    if dense {
        rref_dense(m)
    } else {
        rref_sparse(m)
    }
}

pub fn rank(m: &SparseMatrix) -> usize {
    rref(m).rank()
}

/// `ncols - rank` independent vectors annihilated by `m`.
pub fn kernel_basis(m: &SparseMatrix) -> Vec<SparseVec> {
    rref(m).kernel()
}

/// Some `x` with `m x = b`, or `None` when the system is inconsistent.
pub fn solve(m: &SparseMatrix, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
    if b.len() != m.nrows() {
        return Err(Error::Precondition(format!(
            "right-hand side has length {} but matrix has {} rows",
            b.len(),
            m.nrows()
        )));
    }
    Ok(solve_sparse(m, &SparseVec::from_dense(b)).map(|x| x.to_dense(m.ncols())))
}

pub fn solve_sparse(m: &SparseMatrix, b: &SparseVec) -> Option<SparseVec> {
    let nc = m.ncols();
    let aug: Vec<SparseVec> = m
        .rows()
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let bi = b.get(i);
            if bi.is_zero() {
                row.clone()
            } else {
                row.add(&SparseVec::from_pairs([(nc, bi)]))
            }
        })
        .collect();
    let r = rref(&SparseMatrix::from_rows(nc + 1, aug));
    if r.pivots.last() == Some(&nc) {
        return None;
    }
    Some(SparseVec::from_pairs(
        r.pivots.iter().zip(&r.rows).map(|(p, row)| (*p, row.get(nc))),
    ))
}

/// Inverse of a square matrix, if it is invertible.
pub fn inverse(m: &SparseMatrix) -> Option<SparseMatrix> {
    let n = m.nrows();
    if n != m.ncols() {
        return None;
    }
    let aug: Vec<SparseVec> = m
        .rows()
        .iter()
        .enumerate()
        .map(|(i, row)| row.add(&SparseVec::unit(n + i)))
        .collect();
    let r = rref(&SparseMatrix::from_rows(2 * n, aug));
    if r.rank() < n || r.pivots[n - 1] >= n {
        return if n == 0 { Some(SparseMatrix::zeros(0, 0)) } else { None };
    }
    let rows = r.rows.iter().map(|row| row.remap(|c| c.checked_sub(n))).collect();
    Some(SparseMatrix::from_rows(n, rows))
}

/// Basis of the column space, as RREF rows of the transpose.
pub fn column_space(m: &SparseMatrix) -> Vec<SparseVec> {
    rref(&m.transpose()).rows
}

/// Characteristic polynomial `det(xI - m)` by Faddeev–LeVerrier, coefficients
/// listed from the constant term up; the leading coefficient is 1.
pub fn char_poly(m: &SparseMatrix) -> Vec<Rational> {
    let n = m.nrows();
    assert_eq!(n, m.ncols());
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut mk = SparseMatrix::zeros(n, n);
    for k in 1..=n {
        let prev = coeffs[n - k + 1].clone();
        mk = m.mul(&mk).axpy(&prev, &SparseMatrix::identity(n));
        let am = m.mul(&mk);
        coeffs[n - k] = -am.trace() / Rational::from_integer((k as i64).into());
    }
    coeffs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::int;

    fn mat(rows: &[&[i64]]) -> SparseMatrix {
        SparseMatrix::from_dense(
            &rows.iter().map(|r| r.iter().map(|x| int(*x)).collect()).collect::<Vec<_>>(),
        )
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&SparseMatrix::zeros(0, 0)), 0);
        assert_eq!(rank(&SparseMatrix::identity(3)), 3);
        assert_eq!(rank(&mat(&[&[1, 2], &[2, 4]])), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&SparseMatrix::identity(4)).is_empty());
        let k = kernel_basis(&SparseMatrix::zeros(2, 2));
        assert_eq!(k, vec![SparseVec::unit(0), SparseVec::unit(1)]);
        let k = kernel_basis(&mat(&[&[1, 1]]));
        assert_eq!(k, vec![SparseVec::from_pairs([(0, int(-1)), (1, int(1))])]);
    }

    #[test]
    fn solve_examples() {
        let b = vec![int(3), int(-2)];
        assert_eq!(solve(&SparseMatrix::identity(2), &b).unwrap(), Some(b));
        let x = solve(&mat(&[&[1, 1]]), &[int(2)]).unwrap().unwrap();
        assert_eq!(&x[0] + &x[1], int(2));
        assert_eq!(solve(&mat(&[&[0]]), &[int(1)]).unwrap(), None);
        assert!(solve(&mat(&[&[1, 1]]), &[int(1), int(2)]).is_err());
    }

    #[test]
    fn dense_and_sparse_agree() {
        let m = mat(&[&[2, 4, 1, 0], &[1, 2, 0, 3], &[3, 6, 1, 3], &[0, 0, 5, 1]]);
        assert_eq!(rref_forced(&m, true), rref_forced(&m, false));
    }

    #[test]
    fn inverse_and_char_poly() {
        let m = mat(&[&[2, 1], &[1, 1]]);
        let inv = inverse(&m).unwrap();
        assert_eq!(m.mul(&inv), SparseMatrix::identity(2));
        assert!(inverse(&mat(&[&[1, 2], &[2, 4]])).is_none());
        // x^2 - 3x + 1
        assert_eq!(char_poly(&m), vec![int(1), int(-3), int(1)]);
    }
}
