//! Contravariant forms on highest-weight modules, computed level by level.

use super::explicit::ExplicitModule;
use crate::error::{Error, Result};
use crate::linalg::rational::Rational;
use crate::linalg::{inverse, kernel_basis, rank, Echelon, Rref, SparseMatrix, SparseVec};
use crate::superalgebra::Weight;
use num::Zero;
use std::collections::BTreeMap;

/// Block-diagonal form: one Gram matrix per weight space, on the module
/// basis vectors of that weight in ascending index order.
#[derive(Clone, Debug)]
pub struct ContravariantForm {
    pub blocks: BTreeMap<Weight, (Vec<usize>, SparseMatrix)>,
}

impl ContravariantForm {
    pub fn gram(&self, w: &Weight) -> Option<&SparseMatrix> {
        self.blocks.get(w).map(|b| &b.1)
    }

    /// `<u, v>` for vectors supported on a single weight space each.
    pub fn pair(&self, u: &SparseVec, v: &SparseVec, weight_of: impl Fn(usize) -> Weight) -> Rational {
        let (Some((a, _)), Some((b, _))) = (u.lead(), v.lead()) else {
            return Rational::zero();
        };
        let (wa, wb) = (weight_of(*a), weight_of(*b));
        if wa != wb {
            return Rational::zero();
        }
        let (idx, gram) = &self.blocks[&wa];
        let local = |x: &SparseVec| {
            SparseVec::from_pairs(x.iter().filter_map(|(i, c)| idx.binary_search(i).ok().map(|p| (p, c.clone()))))
        };
        local(u).dot(&gram.mul_vec(&local(v)))
    }

    pub fn rank_on(&self, w: &Weight) -> usize {
        self.blocks.get(w).map(|b| rank(&b.1)).unwrap_or(0)
    }

    /// Basis of the radical `{v : <u, v> = 0 for all u}` in module
    /// coordinates, weight space by weight space.
    pub fn radical(&self, dim: usize) -> Rref {
        let mut ech = Echelon::new(dim);
        for (idx, gram) in self.blocks.values() {
            for k in kernel_basis(gram) {
                ech.insert(&k.remap(|p| Some(idx[p])));
            }
        }
        ech.into_rref()
    }

    pub fn total_rank(&self) -> usize {
        self.blocks.values().map(|b| rank(&b.1)).sum()
    }
}

/// The contravariant form normalized to the identity on the highest weight
/// space. Lower weight spaces must be spanned by images of higher ones
/// under acting ids of negative height (whose transposes also act).
pub fn contravariant_form(m: &ExplicitModule) -> Result<ContravariantForm> {
    let g = m.algebra().clone();
    let top = m
        .highest_weight
        .clone()
        .ok_or_else(|| Error::Precondition("module has no highest weight".into()))?;
    let spaces: Vec<Weight> = {
        let mut ws: Vec<Weight> = m.weight_spaces().into_keys().collect();
        ws.sort_by(|a, b| g.weight_height(b).cmp(&g.weight_height(a)).then_with(|| b.cmp(a)));
        ws
    };
    if spaces.first() != Some(&top) || spaces.get(1).is_some_and(|w| g.weight_height(w) == g.weight_height(&top)) {
        return Err(Error::Precondition("highest weight is not the unique top weight".into()));
    }
    let lowering: Vec<usize> = m
        .acting_ids()
        .into_iter()
        .filter(|&x| g.height(x) < 0 && m.action(g.tau(x)).is_some())
        .collect();
    let mut form = ContravariantForm { blocks: BTreeMap::new() };
    let top_idx = m.indices_of_weight(&top);
    form.blocks.insert(top, (top_idx.clone(), SparseMatrix::identity(top_idx.len())));
    let weight_of = |i: usize| m.weight(i).clone();
    for w in spaces.iter().skip(1) {
        let idx = m.indices_of_weight(w);
        let local = |v: &SparseVec| {
            SparseVec::from_pairs(v.iter().filter_map(|(i, c)| idx.binary_search(i).ok().map(|p| (p, c.clone()))))
        };
        // spanning vectors f u with u a basis vector of a higher weight
        let mut span = Echelon::new(idx.len());
        let mut chosen: Vec<(usize, usize, SparseVec)> = Vec::new();
        'outer: for &f in &lowering {
            let src = w - g.weight(f);
            if !form.blocks.contains_key(&src) {
                continue;
            }
            for &u in &m.indices_of_weight(&src) {
                let v = m.act(f, &SparseVec::unit(u));
                let lv = local(&v);
                if span.insert(&lv) {
                    chosen.push((f, u, lv));
                    if span.rank() == idx.len() {
                        break 'outer;
                    }
                }
            }
        }
        if span.rank() < idx.len() {
            return Err(Error::Precondition(format!(
                "weight space {} is not reached from above",
                g.weight_label(w)
            )));
        }
        let k = chosen.len();
        let s = SparseMatrix::from_cols(k, &chosen.iter().map(|c| c.2.clone()).collect::<Vec<_>>());
        // q[a][b] = <f_a u_a, f_b u_b> = <u_a, tau(f_a) f_b u_b>
        let mut q = Vec::with_capacity(k);
        for (fa, ua, _) in &chosen {
            let mut row = Vec::with_capacity(k);
            for (fb, ub, _) in &chosen {
                let z = m.act(g.tau(*fa), &m.act(*fb, &SparseVec::unit(*ub)));
                row.push(form.pair(&SparseVec::unit(*ua), &z, weight_of));
            }
            q.push(row);
        }
        let q = SparseMatrix::from_dense(&q);
        let sinv = inverse(&s).ok_or_else(|| Error::Internal("spanning matrix not invertible".into()))?;
        let gram = sinv.transpose().mul(&q).mul(&sinv);
        form.blocks.insert(w.clone(), (idx, gram));
    }
    Ok(form)
}

/// Checks `<x u, v> = <u, tau(x) v>` on basis vectors for all acting x.
pub fn check_contravariance(m: &ExplicitModule, form: &ContravariantForm) -> std::result::Result<(), String> {
    let g = m.algebra();
    let weight_of = |i: usize| m.weight(i).clone();
    for x in m.acting_ids() {
        if m.action(g.tau(x)).is_none() {
            continue;
        }
        for u in 0..m.dim() {
            let xu = m.act(x, &SparseVec::unit(u));
            for v in m.indices_of_weight(&(m.weight(u) + g.weight(x))) {
                let lhs = form.pair(&xu, &SparseVec::unit(v), weight_of);
                let rhs = form.pair(&SparseVec::unit(u), &m.act(g.tau(x), &SparseVec::unit(v)), weight_of);
                if lhs != rhs {
                    return Err(format!("contravariance fails for {} on ({u}, {v})", g.label(x)));
                }
            }
        }
    }
    Ok(())
}
