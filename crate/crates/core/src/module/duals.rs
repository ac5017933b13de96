//! Star and transpose duals, tensor products and adjoint pieces.

use super::explicit::ExplicitModule;
use crate::error::{Error, Result};
use crate::linalg::rational::{int, Rational};
use crate::linalg::{SparseMatrix, SparseVec};
use crate::superalgebra::{LieSuperAlgebra, Parity};
use std::sync::Arc;

fn require_exact(m: &ExplicitModule) -> Result<()> {
    if m.truncated {
        Err(Error::Unsupported("duals of truncated modules".into()))
    } else {
        Ok(())
    }
}

/// M* with `(x f)(m) = -(-1)^{|x||f|} f(x m)` on the dual basis.
pub fn dual_module(m: &ExplicitModule) -> Result<ExplicitModule> {
    require_exact(m)?;
    let g = m.algebra();
    let actions = m
        .actions()
        .iter()
        .enumerate()
        .map(|(x, a)| {
            a.as_ref().map(|a| {
                let px = g.parity(x);
                let trip: Vec<(usize, usize, Rational)> = a
                    .triplets()
                    .map(|(r, c, v)| (c, r, v * int(-px.sign_with(m.parity(r)))))
                    .collect();
                SparseMatrix::from_triplets(m.dim(), m.dim(), trip)
            })
        })
        .collect();
    let weights = m.weights().iter().map(|w| -w).collect();
    ExplicitModule::new(g.clone(), weights, m.parities().to_vec(), actions)
}

/// M^tau with `(x f)(m) = f(tau(x) m)`. Weights are unchanged.
pub fn tau_dual(m: &ExplicitModule) -> Result<ExplicitModule> {
    require_exact(m)?;
    let g = m.algebra();
    let actions = (0..g.dim())
        .map(|x| m.action(g.tau(x)).map(|a| a.transpose()))
        .collect();
    ExplicitModule::new(g.clone(), m.weights().to_vec(), m.parities().to_vec(), actions)
}

/// M (x) N with `x(a (x) b) = xa (x) b + (-1)^{|x||a|} a (x) xb`, acting by
/// the ids that act on both. Basis index `i * dim N + j`.
pub fn tensor(a: &ExplicitModule, b: &ExplicitModule) -> Result<ExplicitModule> {
    let g = a.algebra();
    let (da, db) = (a.dim(), b.dim());
    let mut weights = Vec::with_capacity(da * db);
    let mut parities = Vec::with_capacity(da * db);
    for i in 0..da {
        for j in 0..db {
            weights.push(a.weight(i) + b.weight(j));
            parities.push(a.parity(i) + b.parity(j));
        }
    }
    let actions = (0..g.dim())
        .map(|x| match (a.action(x), b.action(x)) {
            (Some(ax), Some(bx)) => {
                let mut trip = Vec::new();
                for (r, c, v) in ax.triplets() {
                    for j in 0..db {
                        trip.push((r * db + j, c * db + j, v.clone()));
                    }
                }
                for i in 0..da {
                    let s = int(g.parity(x).sign_with(a.parity(i)));
                    for (r, c, v) in bx.triplets() {
                        trip.push((i * db + r, i * db + c, &s * v));
                    }
                }
                Some(SparseMatrix::from_triplets(da * db, da * db, trip))
            }
            _ => None,
        })
        .collect();
    ExplicitModule::new(g.clone(), weights, parities, actions)
}

/// The span of basis elements `ids` as a module under the adjoint action of
/// `acting`, which must preserve it.
pub fn adjoint_piece(g: &Arc<LieSuperAlgebra>, ids: &[usize], acting: &[usize]) -> Result<ExplicitModule> {
    let pos = |i: usize| ids.iter().position(|&j| j == i);
    let mut actions = vec![None; g.dim()];
    for &x in acting {
        let mut cols = Vec::with_capacity(ids.len());
        for &b in ids {
            let img = g.bracket_basis(x, b);
            let mut pairs = Vec::new();
            for (k, c) in img.iter() {
                let p = pos(*k).ok_or_else(|| Error::Precondition(format!("[{}, {}] leaves the span", g.label(x), g.label(b))))?;
                pairs.push((p, c.clone()));
            }
            cols.push(SparseVec::from_pairs(pairs));
        }
        actions[x] = Some(SparseMatrix::from_cols(ids.len(), &cols));
    }
    let weights = ids.iter().map(|i| g.weight(*i).clone()).collect();
    let parities: Vec<Parity> = ids.iter().map(|i| g.parity(*i)).collect();
    ExplicitModule::new(g.clone(), weights, parities, actions)
}
