//! Submodules and quotients cut out by homogeneous subspaces.

use super::explicit::ExplicitModule;
use crate::error::{Error, Result};
use crate::linalg::{Echelon, Rref, SparseMatrix, SparseVec};

/// Smallest submodule containing `vecs`, as a row-echelon basis.
pub fn generate(m: &ExplicitModule, vecs: &[SparseVec]) -> Echelon {
    let mut span = Echelon::new(m.dim());
    let mut queue = Vec::new();
    for v in vecs {
        if span.insert(v) {
            queue.push(v.clone());
        }
    }
    let acting = m.acting_ids();
    while let Some(v) = queue.pop() {
        for &x in &acting {
            let w = m.act(x, &v);
            if !w.is_zero() && span.insert(&w) {
                queue.push(w);
            }
        }
    }
    span
}

fn is_homogeneous(m: &ExplicitModule, v: &SparseVec) -> bool {
    let mut it = v.iter();
    let Some((first, _)) = it.next() else {
        return true;
    };
    it.all(|(i, _)| m.weight(*i) == m.weight(*first) && m.parity(*i) == m.parity(*first))
}

fn check_homogeneous(m: &ExplicitModule, r: &Rref) -> Result<()> {
    if r.rows.iter().all(|v| is_homogeneous(m, v)) {
        Ok(())
    } else {
        Err(Error::Precondition("subspace is not spanned by homogeneous vectors".into()))
    }
}

/// The submodule on the given RREF basis, with the inclusion matrix
/// (columns are the basis vectors in `m`).
pub fn submodule(m: &ExplicitModule, span: &Rref) -> Result<(ExplicitModule, SparseMatrix)> {
    check_homogeneous(m, span)?;
    let k = span.rank();
    let weights = span.pivots.iter().map(|p| m.weight(*p).clone()).collect();
    let parities = span.pivots.iter().map(|p| m.parity(*p)).collect();
    let mut actions = Vec::with_capacity(m.actions().len());
    for a in m.actions() {
        let Some(a) = a else {
            actions.push(None);
            continue;
        };
        let mut cols = Vec::with_capacity(k);
        for row in &span.rows {
            let img = a.mul_vec(row);
            let coords = SparseVec::from_pairs(
                span.pivots
                    .iter()
                    .enumerate()
                    .map(|(j, p)| (j, img.get(*p)))
                    .filter(|(_, c)| !num::Zero::is_zero(c)),
            );
            let back = span
                .rows
                .iter()
                .zip(coords.to_dense(k))
                .fold(SparseVec::new(), |acc, (r, c)| acc.axpy(&c, r));
            if back != img {
                return Err(Error::Precondition("subspace is not a submodule".into()));
            }
            cols.push(coords);
        }
        actions.push(Some(SparseMatrix::from_cols(k, &cols)));
    }
    let mut out = ExplicitModule::new(m.algebra().clone(), weights, parities, actions)?;
    out.truncated = m.truncated;
    let incl = SparseMatrix::from_cols(m.dim(), &span.rows);
    Ok((out, incl))
}

/// `m / span` on the non-pivot coordinates, with the projection matrix.
pub fn quotient(m: &ExplicitModule, span: &Rref) -> Result<(ExplicitModule, SparseMatrix)> {
    check_homogeneous(m, span)?;
    let mut is_pivot = vec![false; m.dim()];
    for p in &span.pivots {
        is_pivot[*p] = true;
    }
    let keep: Vec<usize> = (0..m.dim()).filter(|i| !is_pivot[*i]).collect();
    let mut pos = vec![usize::MAX; m.dim()];
    for (j, &i) in keep.iter().enumerate() {
        pos[i] = j;
    }
    let mut ech = Echelon::new(m.dim());
    for r in &span.rows {
        ech.insert(r);
    }
    let project = |v: &SparseVec| ech.reduce(v).remap(|i| Some(pos[i]));
    let mut actions = Vec::with_capacity(m.actions().len());
    for a in m.actions() {
        actions.push(a.as_ref().map(|a| {
            let cols: Vec<SparseVec> = keep.iter().map(|&i| project(&a.col(i))).collect();
            SparseMatrix::from_cols(keep.len(), &cols)
        }));
    }
    let weights = keep.iter().map(|i| m.weight(*i).clone()).collect();
    let parities = keep.iter().map(|i| m.parity(*i)).collect();
    let mut out = ExplicitModule::new(m.algebra().clone(), weights, parities, actions)?;
    out.truncated = m.truncated;
    out.highest_weight = m.highest_weight.clone();
    let cols: Vec<SparseVec> = (0..m.dim()).map(|i| project(&SparseVec::unit(i))).collect();
    Ok((out, SparseMatrix::from_cols(keep.len(), &cols)))
}

/// Checks that a homogeneous span is stable under the action.
pub fn is_submodule(m: &ExplicitModule, span: &Rref) -> bool {
    let mut ech = Echelon::new(m.dim());
    for r in &span.rows {
        ech.insert(r);
    }
    m.acting_ids()
        .into_iter()
        .all(|x| span.rows.iter().all(|r| ech.contains(&m.act(x, r))))
}
