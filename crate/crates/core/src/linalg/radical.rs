//! Jacobson radical of a finite-dimensional associative algebra over Q.

use super::elim::kernel_basis;
use super::rational::Rational;
use super::sparse::{SparseMatrix, SparseVec};
use crate::error::{Error, Result};
use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Structure constants `e_i * e_j = sum_k c[i][j][k] e_k`.
#[derive(Clone, Debug)]
pub struct MultTable {
    dim: usize,
    products: Vec<Vec<SparseVec>>,
}

/// Default dimension bound for radical computations.
pub const DEFAULT_MAX_DIM: usize = 512;

impl MultTable {
    pub fn new(products: Vec<Vec<SparseVec>>) -> Result<Self> {
        let dim = products.len();
        if products.iter().any(|r| r.len() != dim) {
            return Err(Error::InvalidAlgebra("multiplication table is not square".into()));
        }
        Ok(MultTable { dim, products })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn product_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.products[i][j]
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                acc = acc.axpy(&(x * y), &self.products[*i][*j]);
            }
        }
        acc
    }

    /// Matrix of left multiplication by `a` in the basis.
    pub fn left_mul(&self, a: &SparseVec) -> SparseMatrix {
        let cols: Vec<SparseVec> = (0..self.dim).map(|j| self.mul(a, &SparseVec::unit(j))).collect();
        SparseMatrix::from_cols(self.dim, &cols)
    }

    /// Checks `(e_i e_j) e_k = e_i (e_j e_k)`: on every triple for small
    /// algebras, on a seeded sample of triples otherwise.
    pub fn check_associative(&self, seed: u64) -> Result<()> {
        let d = self.dim;
        let check = |i: usize, j: usize, k: usize| -> Result<()> {
            let l = self.mul(&self.products[i][j], &SparseVec::unit(k));
            let r = self.mul(&SparseVec::unit(i), &self.products[j][k]);
            if l != r {
                return Err(Error::InvalidAlgebra(format!("not associative on basis triple ({i},{j},{k})")));
            }
            Ok(())
        };
        if d <= 24 {
            for i in 0..d {
                for j in 0..d {
                    for k in 0..d {
                        check(i, j, k)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..4096 {
                check(rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d))?;
            }
        }
        Ok(())
    }
}

/// Basis of the Jacobson radical, computed as the kernel of the trace form
/// `(x, y) -> tr(L_{xy})` of the left regular representation (characteristic 0).
pub fn algebra_radical(table: &MultTable, max_dim: usize) -> Result<Vec<SparseVec>> {
    let d = table.dim();
    if d > max_dim {
        return Err(Error::Resource(format!("algebra dimension {d} exceeds bound {max_dim}")));
    }
    table.check_associative(0x5eed)?;
    let traces: Vec<Rational> = (0..d)
        .map(|m| (0..d).map(|k| table.products[m][k].get(k)).sum())
        .collect();
    let mut triplets = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let v: Rational = table.products[i][j].iter().map(|(m, c)| c * &traces[*m]).sum();
            if !v.is_zero() {
                triplets.push((i, j, v));
            }
        }
    }
    Ok(kernel_basis(&SparseMatrix::from_triplets(d, d, triplets)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_table() -> MultTable {
        MultTable::new(vec![vec![SparseVec::unit(0)]]).unwrap()
    }

    // basis 1, x with x^2 = 0
    fn dual_numbers() -> MultTable {
        let e = SparseVec::unit;
        MultTable::new(vec![vec![e(0), e(1)], vec![e(1), SparseVec::new()]]).unwrap()
    }

    // basis E11, E12, E21, E22
    fn matrix_algebra() -> MultTable {
        let idx = |i: usize, j: usize| 2 * i + j;
        let mut prods = vec![vec![SparseVec::new(); 4]; 4];
        for (i, j, k, l) in (0..16).map(|t| (t >> 3 & 1, t >> 2 & 1, t >> 1 & 1, t & 1)) {
            if j == k {
                prods[idx(i, j)][idx(k, l)] = SparseVec::unit(idx(i, l));
            }
        }
        MultTable::new(prods).unwrap()
    }

    #[test]
    fn radical_examples() {
        assert!(algebra_radical(&unit_table(), DEFAULT_MAX_DIM).unwrap().is_empty());
        assert_eq!(algebra_radical(&dual_numbers(), DEFAULT_MAX_DIM).unwrap(), vec![SparseVec::unit(1)]);
        assert!(algebra_radical(&matrix_algebra(), DEFAULT_MAX_DIM).unwrap().is_empty());
    }

    #[test]
    fn rejects_non_associative() {
        // e0*e0 = e1, e1*e0 = e0, everything else 0: (e0 e0) e0 = e0 but e0 (e0 e0) = 0
        let e = SparseVec::unit;
        let t = MultTable::new(vec![vec![e(1), SparseVec::new()], vec![e(0), SparseVec::new()]]).unwrap();
        assert!(matches!(algebra_radical(&t, 8), Err(Error::InvalidAlgebra(_))));
    }
}
