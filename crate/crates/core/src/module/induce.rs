//! Induction U(g) (x)_{U(k)} V realized on PBW monomials times a basis of V.

use super::explicit::ExplicitModule;
use crate::error::{Error, Result};
use crate::linalg::rational::Rational;
use crate::linalg::{SparseMatrix, SparseVec};
use crate::pbw::{monomials_above, PBWMonomial, Straightener};
use crate::superalgebra::{LieSuperAlgebra, Parity, Weight};
use num::Zero;
use std::collections::HashMap;
use std::sync::Arc;

/// Data for an induced module. The subalgebra k is spanned by the ids
/// acting on `sub` together with `zero`, which act on `sub` by zero; `free`
/// spans a complement of k in the acting algebra.
pub struct Induction<'a> {
    pub free: Vec<usize>,
    pub sub: &'a ExplicitModule,
    pub zero: Vec<usize>,
    /// Ids to compute actions for; all of g when `None`.
    pub acting: Option<Vec<usize>>,
    /// Keep only basis vectors whose weight has principal height at least
    /// this; actions leaving the window are dropped.
    pub min_height: Option<i64>,
    pub max_dim: usize,
}

pub const DEFAULT_MAX_DIM: usize = 4096;

fn height_i64(g: &LieSuperAlgebra, w: &Weight) -> i64 {
    let h = g.weight_height(w);
    crate::linalg::rational::as_i64(&h).unwrap_or_else(|| {
        // non-integral weights: compare on the floor
        (h.floor()).to_integer().try_into().unwrap_or(i64::MIN)
    })
}

/// Straightener whose order lists `free` first, then the rest by
/// ascending (degree, id).
pub fn straightener_free_first(g: &Arc<LieSuperAlgebra>, free: &[usize]) -> Result<Straightener> {
    let mut order = free.to_vec();
    let mut rest: Vec<usize> = (0..g.dim()).filter(|i| !free.contains(i)).collect();
    rest.sort_by_key(|&i| (g.degree(i), i));
    order.extend(rest);
    Straightener::with_order(g.clone(), order)
}

pub fn induce(ind: &Induction) -> Result<ExplicitModule> {
    let sub = ind.sub;
    let g = sub.algebra().clone();
    let sub_ids = sub.acting_ids();
    let acting: Vec<usize> = ind.acting.clone().unwrap_or_else(|| (0..g.dim()).collect());
    let mut role = vec![0u8; g.dim()];
    for &i in &ind.free {
        role[i] |= 1;
    }
    for &i in &sub_ids {
        role[i] |= 2;
    }
    for &i in &ind.zero {
        role[i] |= 4;
    }
    if let Some(&x) = acting.iter().find(|&&x| role[x].count_ones() != 1) {
        return Err(Error::Precondition(format!(
            "{} must be exactly one of free, induced-from, or zero",
            g.label(x)
        )));
    }
    let st = straightener_free_first(&g, &ind.free)?;
    let sub_heights: Vec<i64> = sub.weights().iter().map(|w| height_i64(&g, w)).collect();
    let top = sub_heights.iter().copied().max().unwrap_or(0);
    let rel_min = ind.min_height.map(|m| m - top);
    let monos = monomials_above(&g, &ind.free, rel_min)?;
    let mut basis: Vec<(usize, usize)> = Vec::new();
    let mut weights = Vec::new();
    let mut parities = Vec::new();
    for (mi, m) in monos.iter().enumerate() {
        let (mw, mp) = (m.weight(&g), m.parity(&g));
        for j in 0..sub.dim() {
            let w = &mw + sub.weight(j);
            if ind.min_height.is_some_and(|h| height_i64(&g, &w) < h) {
                continue;
            }
            basis.push((mi, j));
            weights.push(w);
            parities.push(mp + sub.parity(j));
        }
        if basis.len() > ind.max_dim {
            return Err(Error::Resource(format!("induced module exceeds dimension {}", ind.max_dim)));
        }
    }
    let index: HashMap<(usize, usize), usize> = basis.iter().enumerate().map(|(k, b)| (*b, k)).collect();
    let mono_index: HashMap<&PBWMonomial, usize> = monos.iter().enumerate().map(|(k, m)| (m, k)).collect();
    let truncated = ind.min_height.is_some();
    let mut actions: Vec<Option<SparseMatrix>> = vec![None; g.dim()];
    for &x in &acting {
        let mut trip: Vec<(usize, usize, Rational)> = Vec::new();
        for (col, &(mi, j)) in basis.iter().enumerate() {
            let e = st.left_mul_monomial(x, &monos[mi]);
            for (w, c) in &e.terms {
                let k = w.word.iter().position(|i| role[*i] & 1 == 0).unwrap_or(w.word.len());
                let (prefix, suffix) = w.word.split_at(k);
                if suffix.iter().any(|i| role[*i] & 4 != 0) {
                    continue;
                }
                let mut v = SparseVec::unit(j);
                for &s in suffix.iter().rev() {
                    v = sub.act(s, &v);
                    if v.is_zero() {
                        break;
                    }
                }
                if v.is_zero() {
                    continue;
                }
                let pm = PBWMonomial::new(prefix.to_vec());
                let Some(&pi) = mono_index.get(&pm) else {
                    if truncated {
                        continue;
                    }
                    return Err(Error::Internal(format!("monomial {} outside the basis", pm.display(&g))));
                };
                for (jj, cc) in v.iter() {
                    match index.get(&(pi, *jj)) {
                        Some(&row) => trip.push((row, col, c * cc)),
                        None if truncated => {}
                        None => return Err(Error::Internal("basis vector missing from induced module".into())),
                    }
                }
            }
        }
        actions[x] = Some(SparseMatrix::from_triplets(basis.len(), basis.len(), trip));
    }
    let mut out = ExplicitModule::new(g, weights, parities, actions)?;
    out.truncated = truncated;
    Ok(out)
}

/// One-dimensional module over the torus on which it acts by `w`, with the
/// given ids acting by zero by omission.
pub fn torus_character(g: &Arc<LieSuperAlgebra>, w: &Weight, parity: Parity) -> Result<ExplicitModule> {
    if w.len() != g.rank() {
        return Err(Error::Precondition("weight has wrong length".into()));
    }
    let mut actions = vec![None; g.dim()];
    for (k, &t) in g.torus().iter().enumerate() {
        let c = &w.coords()[k];
        actions[t] = Some(if c.is_zero() {
            SparseMatrix::zeros(1, 1)
        } else {
            SparseMatrix::from_triplets(1, 1, [(0, 0, c.clone())])
        });
    }
    Ok(ExplicitModule::new(g.clone(), vec![w.clone()], vec![parity], actions)?.with_highest_weight(w.clone()))
}
