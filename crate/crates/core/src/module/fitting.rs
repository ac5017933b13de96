//! Splitting modules into indecomposable summands with Fitting's lemma.

use super::explicit::ExplicitModule;
use super::hom::hom_of_parity;
use super::subspace::submodule;
use crate::error::{Error, Result};
use crate::linalg::rational::int;
use crate::linalg::{algebra_radical, char_poly, kernel_basis, poly, Echelon, MultTable, SparseMatrix, SparseVec};
use crate::superalgebra::Parity;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::cmp::Ordering;

#[derive(Clone, Debug)]
pub struct FittingOptions {
    pub seed: u64,
    /// Random endomorphisms tried per module after the basis elements.
    pub attempts: usize,
    pub max_end_dim: usize,
}

impl Default for FittingOptions {
    fn default() -> Self {
        FittingOptions {
            seed: 0,
            attempts: 24,
            max_end_dim: 512,
        }
    }
}

/// A direct summand with its inclusion (columns are its basis in the parent).
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: ExplicitModule,
    pub inclusion: SparseMatrix,
}

/// Basis of the even endomorphism algebra in reduced echelon form, with the
/// pivot entries that read off coordinates.
pub struct EndAlgebra {
    pub basis: Vec<SparseMatrix>,
    pivots: Vec<usize>,
    n: usize,
}

fn flatten(m: &SparseMatrix) -> SparseVec {
    let n = m.ncols();
    SparseVec::from_pairs(m.triplets().map(|(r, c, v)| (r * n + c, v.clone())))
}

impl EndAlgebra {
    pub fn new(m: &ExplicitModule) -> Self {
        let n = m.dim();
        let mut ech = Echelon::new(n * n);
        for f in hom_of_parity(m, m, Parity::Even) {
            ech.insert(&flatten(&f.matrix));
        }
        let r = ech.into_rref();
        let basis = r
            .rows
            .iter()
            .map(|v| SparseMatrix::from_triplets(n, n, v.iter().map(|(k, c)| (k / n, k % n, c.clone()))))
            .collect();
        EndAlgebra {
            basis,
            pivots: r.pivots,
            n,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn coords(&self, f: &SparseMatrix) -> SparseVec {
        let flat = flatten(f);
        SparseVec::from_pairs(self.pivots.iter().enumerate().map(|(k, p)| (k, flat.get(*p))))
    }

    pub fn mult_table(&self) -> Result<MultTable> {
        let rows = self
            .basis
            .iter()
            .map(|a| self.basis.iter().map(|b| self.coords(&a.mul(b))).collect())
            .collect();
        MultTable::new(rows)
    }

    /// dim End / rad End.
    pub fn semisimple_dim(&self, max_dim: usize) -> Result<usize> {
        let rad = algebra_radical(&self.mult_table()?, max_dim)?;
        Ok(self.dim() - rad.len())
    }

    pub fn module_dim(&self) -> usize {
        self.n
    }
}

fn block_power_kernel_image(m: &ExplicitModule, phi: &SparseMatrix) -> (Vec<SparseVec>, Vec<SparseVec>) {
    let mut ker = Vec::new();
    let mut im = Vec::new();
    for idx in m.blocks().into_values() {
        let b = phi.select(&idx, &idx);
        let mut p = SparseMatrix::identity(idx.len());
        for _ in 0..idx.len() {
            p = p.mul(&b);
        }
        for k in kernel_basis(&p) {
            ker.push(k.remap(|i| Some(idx[i])));
        }
        for c in crate::linalg::column_space(&p) {
            im.push(c.remap(|i| Some(idx[i])));
        }
    }
    (ker, im)
}

fn span_rref(dim: usize, vecs: &[SparseVec]) -> crate::linalg::Rref {
    let mut e = Echelon::new(dim);
    for v in vecs {
        e.insert(v);
    }
    e.into_rref()
}

/// Tries to split `m` along the generalized eigenspaces of `psi`.
fn try_split(m: &ExplicitModule, psi: &SparseMatrix) -> Result<Option<(Summand, Summand)>> {
    let mut roots = Vec::new();
    for idx in m.blocks().into_values() {
        for r in poly::rational_roots(&char_poly(&psi.select(&idx, &idx))) {
            if !roots.contains(&r) {
                roots.push(r);
            }
        }
    }
    for c in roots {
        let phi = psi.axpy(&-c, &SparseMatrix::identity(m.dim()));
        let (ker, im) = block_power_kernel_image(m, &phi);
        if ker.is_empty() || im.is_empty() {
            continue;
        }
        let (a, ia) = submodule(m, &span_rref(m.dim(), &ker))?;
        let (b, ib) = submodule(m, &span_rref(m.dim(), &im))?;
        return Ok(Some((Summand { module: a, inclusion: ia }, Summand { module: b, inclusion: ib })));
    }
    Ok(None)
}

/// True when the even endomorphism algebra is local. Dimension-2
/// semisimple quotients are either Q x Q or a quadratic field; an
/// endomorphism with no rational eigenvalue rules out the former.
fn local_certificate(m: &ExplicitModule, end: &EndAlgebra, opts: &FittingOptions) -> Result<bool> {
    let ss = end.semisimple_dim(opts.max_end_dim)?;
    if ss == 1 {
        return Ok(true);
    }
    if ss == 2 {
        let irrational = end
            .basis
            .iter()
            .any(|f| poly::rational_roots(&char_poly(f)).is_empty());
        return Ok(irrational && m.dim() > 0);
    }
    Ok(false)
}

fn top_key(m: &ExplicitModule) -> (num::BigRational, crate::superalgebra::Weight) {
    let g = m.algebra();
    m.weights()
        .iter()
        .map(|w| (g.weight_height(w), w.clone()))
        .max()
        .unwrap_or((int(0), crate::superalgebra::Weight(Vec::new())))
}

fn order_summands(a: &Summand, b: &Summand) -> Ordering {
    top_key(&b.module)
        .cmp(&top_key(&a.module))
        .then_with(|| a.module.dim().cmp(&b.module.dim()))
        .then_with(|| a.inclusion.triplets().map(|t| t.0).cmp(b.inclusion.triplets().map(|t| t.0)))
}

fn decompose_into(m: &ExplicitModule, incl: SparseMatrix, opts: &FittingOptions, rng: &mut ChaCha8Rng, out: &mut Vec<Summand>) -> Result<()> {
    if m.dim() == 0 {
        return Ok(());
    }
    let end = EndAlgebra::new(m);
    if end.dim() > opts.max_end_dim {
        return Err(Error::Resource(format!("endomorphism algebra of dimension {} exceeds bound", end.dim())));
    }
    if end.dim() <= 1 {
        out.push(Summand { module: m.clone(), inclusion: incl });
        return Ok(());
    }
    let mut candidates: Vec<SparseMatrix> = end.basis.clone();
    for _ in 0..opts.attempts {
        candidates.push(
            end.basis
                .iter()
                .fold(SparseMatrix::zeros(m.dim(), m.dim()), |acc, b| acc.axpy(&int(rng.gen_range(-3..=3)), b)),
        );
    }
    for (k, psi) in candidates.iter().enumerate() {
        if k == end.dim() && local_certificate(m, &end, opts)? {
            out.push(Summand { module: m.clone(), inclusion: incl });
            return Ok(());
        }
        if let Some((a, b)) = try_split(m, psi)? {
            decompose_into(&a.module, incl.mul(&a.inclusion), opts, rng, out)?;
            decompose_into(&b.module, incl.mul(&b.inclusion), opts, rng, out)?;
            return Ok(());
        }
    }
    if local_certificate(m, &end, opts)? {
        out.push(Summand { module: m.clone(), inclusion: incl });
        return Ok(());
    }
    Err(Error::Resource(format!(
        "no splitting endomorphism found for a module of dimension {} after {} attempts",
        m.dim(),
        candidates.len()
    )))
}

/// Indecomposable summands with inclusions, ordered by top weight
/// (highest first), then dimension.
pub fn fitting_summands(m: &ExplicitModule, opts: &FittingOptions) -> Result<Vec<Summand>> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut out = Vec::new();
    decompose_into(m, SparseMatrix::identity(m.dim()), opts, &mut rng, &mut out)?;
    out.sort_by(order_summands);
    Ok(out)
}

pub fn fitting_decompose(m: &ExplicitModule, opts: &FittingOptions) -> Result<Vec<ExplicitModule>> {
    Ok(fitting_summands(m, opts)?.into_iter().map(|s| s.module).collect())
}

/// Certifies indecomposability from the endomorphism algebra.
pub fn is_indecomposable(m: &ExplicitModule, opts: &FittingOptions) -> Result<bool> {
    let end = EndAlgebra::new(m);
    if end.dim() <= 1 {
        return Ok(m.dim() > 0);
    }
    local_certificate(m, &end, opts)
}
