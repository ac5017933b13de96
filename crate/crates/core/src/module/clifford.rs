//! Simple modules and projective covers for the Cartan subalgebra h = g_0.
//!
//! For q(n), h is spanned by e(i,i) and e'(i,i) with [e'(i,i), e'(i,i)] =
//! 2 e(i,i), so on a module of weight lambda the odd part acts through the
//! Clifford algebra with generators c_i, c_i^2 = lambda_i. Everything is
//! computed over Q: when the Clifford algebra does not split over Q the
//! simple module is larger than over C and carries more endomorphisms.

use super::explicit::ExplicitModule;
use super::fitting::{fitting_summands, FittingOptions};
use super::hom::{hom_of_parity, hom_space};
use super::induce::{induce, torus_character, Induction, DEFAULT_MAX_DIM};
use crate::error::{Error, Result};
use crate::linalg::rational::Rational;
use crate::linalg::SparseMatrix;
use crate::superalgebra::{AlgebraKind, LieSuperAlgebra, Parity, Weight};
use num::{One, Zero};
use std::sync::Arc;

fn q_rank(g: &LieSuperAlgebra) -> Result<usize> {
    match g.descriptor().kind {
        AlgebraKind::Q { n } => Ok(n),
        _ => Err(Error::Unsupported("Clifford modules are built for q(n)".into())),
    }
}

fn odd_diag(g: &LieSuperAlgebra, i: usize) -> usize {
    let n = g.rank();
    n * n + i * n + i
}

/// Left regular module of the Clifford algebra on the generators with
/// lambda_i != 0, in the basis of ordered products c_A.
fn regular_clifford(g: &Arc<LieSuperAlgebra>, lambda: &Weight) -> Result<ExplicitModule> {
    let n = q_rank(g)?;
    let live: Vec<usize> = (0..n).filter(|&i| !lambda.coords()[i].is_zero()).collect();
    let k = live.len();
    let dim = 1usize << k;
    let mut actions = vec![None; g.dim()];
    for (i, &t) in g.torus().iter().enumerate() {
        let c = &lambda.coords()[i];
        actions[t] = Some(SparseMatrix::from_triplets(
            dim,
            dim,
            (0..dim).filter(|_| !c.is_zero()).map(|a| (a, a, c.clone())),
        ));
    }
    for i in 0..n {
        actions[odd_diag(g, i)] = Some(SparseMatrix::zeros(dim, dim));
    }
    for (pos, &i) in live.iter().enumerate() {
        let bit = 1usize << pos;
        let mut trip = Vec::with_capacity(dim);
        for a in 0..dim {
            let sign = if (a & (bit - 1)).count_ones().is_multiple_of(2) {
                Rational::one()
            } else {
                -Rational::one()
            };
            if a & bit == 0 {
                trip.push((a | bit, a, sign));
            } else {
                trip.push((a & !bit, a, sign * &lambda.coords()[i]));
            }
        }
        actions[odd_diag(g, i)] = Some(SparseMatrix::from_triplets(dim, dim, trip));
    }
    let parities = (0..dim).map(|a| Parity::from_odd(a.count_ones() % 2 == 1)).collect();
    ExplicitModule::new(g.clone(), vec![lambda.clone(); dim], parities, actions)
}

/// u(lambda) together with d_E = dim End(u(lambda)) (even plus odd part).
pub fn clifford_module(g: &Arc<LieSuperAlgebra>, lambda: &Weight) -> Result<(ExplicitModule, usize)> {
    if lambda.len() != g.rank() {
        return Err(Error::Precondition("weight has wrong length".into()));
    }
    let reg = regular_clifford(g, lambda)?;
    let mut summands = fitting_summands(&reg, &FittingOptions::default())?;
    // prefer the summand whose first vector is even
    summands.sort_by_key(|s| (s.module.dim(), s.module.parity(0) == Parity::Odd));
    let u = summands
        .into_iter()
        .next()
        .ok_or_else(|| Error::Internal("empty Clifford module".into()))?
        .module
        .with_highest_weight(lambda.clone());
    let d = hom_space(&u, &u)?.dim();
    Ok((u, d))
}

/// The projective cover of a simple h-module E: E itself when h is even,
/// otherwise the summand of U(h) (x)_{U(h_0)} E_0 mapping onto E.
pub fn projective_cover_h(e: &ExplicitModule) -> Result<ExplicitModule> {
    let g = e.algebra().clone();
    let h = g.h_ids();
    let odd: Vec<usize> = h.iter().copied().filter(|&i| g.parity(i) == Parity::Odd).collect();
    if odd.is_empty() {
        return Ok(e.clone());
    }
    let w = e.weight(0).clone();
    let base = torus_character(&g, &w, e.parity(0))?;
    let ind = induce(&Induction {
        free: odd,
        sub: &base,
        zero: vec![],
        acting: Some(h),
        min_height: None,
        max_dim: DEFAULT_MAX_DIM,
    })?;
    for s in fitting_summands(&ind, &FittingOptions::default())? {
        let onto = [Parity::Even, Parity::Odd]
            .into_iter()
            .any(|p| !hom_of_parity(&s.module, e, p).is_empty());
        if onto {
            return Ok(s.module.with_highest_weight(w));
        }
    }
    Err(Error::Internal("no summand of the induced h-module maps onto E".into()))
}

/// The projective cover of u(lambda) has dual isomorphic, up to parity, to
/// the projective cover of u(-lambda). Returns whether that holds.
pub fn check_dual_cover(g: &Arc<LieSuperAlgebra>, lambda: &Weight) -> Result<bool> {
    let p = projective_cover_h(&clifford_module(g, lambda)?.0)?;
    let neg = lambda.scale(&-Rational::one());
    let q = projective_cover_h(&clifford_module(g, &neg)?.0)?;
    let d = super::duals::dual_module(&p)?;
    let opts = super::hom::IsoOptions {
        allow_parity_flip: true,
        ..Default::default()
    };
    match super::hom::is_isomorphic(&d, &q, &opts) {
        super::hom::IsoOutcome::NotFound { reason } => Err(Error::Resource(reason)),
        o => Ok(o.is_found()),
    }
}
