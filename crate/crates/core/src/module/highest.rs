//! Highest-weight constructions: simple h-modules, Kac modules, truncated
//! Verma modules, simple quotients and induced projectives.

use super::explicit::ExplicitModule;
use super::form::contravariant_form;
use super::induce::{induce, torus_character, Induction, DEFAULT_MAX_DIM};
use super::subspace::quotient;
use crate::characters::Character;
use crate::error::{Error, Result};
use crate::superalgebra::{w0_action, AlgebraKind, GradingKind, LieSuperAlgebra, Parity, Weight};
use std::sync::Arc;

fn gl_ranks(g: &LieSuperAlgebra) -> Result<(usize, usize)> {
    match g.kind {
        AlgebraKind::Gl { m, n } => Ok((m, n)),
        AlgebraKind::Q { .. } => Err(Error::Unsupported("operation is defined for gl(m|n) only".into())),
    }
}

pub fn require_compatible(g: &LieSuperAlgebra) -> Result<(usize, usize)> {
    let r = gl_ranks(g)?;
    if g.grading != GradingKind::Compatible {
        return Err(Error::Unsupported("operation needs the compatible grading".into()));
    }
    Ok(r)
}

/// The simple h-module V(lambda), h = g_0 of the installed grading, as the
/// quotient of a truncated Verma module over h by its form radical.
pub fn simple_even_module(g: &Arc<LieSuperAlgebra>, lambda: &Weight) -> Result<ExplicitModule> {
    let (m, n) = gl_ranks(g)?;
    g.ensure_graded()?;
    g.check_dominant(lambda)?;
    let h = g.h_ids();
    let torus = torus_character(g, lambda, Parity::Even)?;
    if h.len() == g.rank() {
        return Ok(torus);
    }
    let free: Vec<usize> = h.iter().copied().filter(|&i| g.height(i) < 0).collect();
    let zero: Vec<usize> = h.iter().copied().filter(|&i| g.height(i) > 0).collect();
    let lowest = w0_action(m, n, lambda);
    let min = crate::linalg::rational::as_i64(&g.weight_height(&lowest))
        .ok_or_else(|| Error::NotDominant(g.weight_label(lambda)))?;
    let verma = induce(&Induction {
        free,
        sub: &torus,
        zero,
        acting: Some(h),
        min_height: Some(min),
        max_dim: DEFAULT_MAX_DIM,
    })?
    .with_highest_weight(lambda.clone());
    let form = contravariant_form(&verma)?;
    let (mut v, _) = quotient(&verma, &form.radical(verma.dim()))?;
    v.truncated = false;
    v.highest_weight = Some(lambda.clone());
    Ok(v)
}

/// K(lambda) = U(g) (x)_{U(g_0 + g_1)} V(lambda) for the compatible grading.
pub fn kac_module(g: &Arc<LieSuperAlgebra>, lambda: &Weight) -> Result<ExplicitModule> {
    require_compatible(g)?;
    let v = simple_even_module(g, lambda)?;
    kac_from_top(g, &v, lambda)
}

fn kac_from_top(g: &Arc<LieSuperAlgebra>, v: &ExplicitModule, lambda: &Weight) -> Result<ExplicitModule> {
    Ok(induce(&Induction {
        free: g.ids_of_degree(-1),
        sub: v,
        zero: g.ids_of_degree(1),
        acting: None,
        min_height: None,
        max_dim: DEFAULT_MAX_DIM,
    })?
    .with_highest_weight(lambda.clone()))
}

/// M(lambda) for the principal grading, cut at degree >= -depth.
pub fn verma_module_truncated(g: &Arc<LieSuperAlgebra>, lambda: &Weight, depth: usize) -> Result<ExplicitModule> {
    gl_ranks(g)?;
    if g.grading != GradingKind::Principal {
        return Err(Error::Unsupported("truncated Verma modules use the principal grading".into()));
    }
    let top = torus_character(g, lambda, Parity::Even)?;
    let h = crate::linalg::rational::as_i64(&g.weight_height(lambda))
        .ok_or_else(|| Error::Precondition("highest weight has non-integral height".into()))?;
    let mut out = induce(&Induction {
        free: g.negative_ids(),
        sub: &top,
        zero: g.positive_ids(),
        acting: None,
        min_height: Some(h - depth as i64),
        max_dim: DEFAULT_MAX_DIM,
    })?
    .with_highest_weight(lambda.clone());
    out.truncated = true;
    Ok(out)
}

/// Quotient of a highest-weight module by the radical of its form.
pub fn simple_quotient(m: &ExplicitModule) -> Result<ExplicitModule> {
    let form = contravariant_form(m)?;
    Ok(quotient(m, &form.radical(m.dim()))?.0)
}

/// L(lambda) = K(lambda) / radical.
pub fn simple_module(g: &Arc<LieSuperAlgebra>, lambda: &Weight) -> Result<ExplicitModule> {
    simple_quotient(&kac_module(g, lambda)?)
}

/// Weight multiplicities of L(lambda) from the ranks of the form on K(lambda).
pub fn simple_character(g: &Arc<LieSuperAlgebra>, lambda: &Weight) -> Result<Character> {
    let k = kac_module(g, lambda)?;
    let form = contravariant_form(&k)?;
    let mut c = Character::new();
    for w in form.blocks.keys() {
        c.add_weight(w.clone(), form.rank_on(w) as u64);
    }
    Ok(c)
}

/// U(g) (x)_{U(g_0)} V(lambda): PBW over all odd root vectors.
pub fn induced_projective(g: &Arc<LieSuperAlgebra>, lambda: &Weight, max_dim: usize) -> Result<ExplicitModule> {
    let (m, n) = require_compatible(g)?;
    let v = simple_even_module(g, lambda)?;
    let predicted = (1usize << (2 * m * n)).saturating_mul(v.dim());
    if predicted > max_dim {
        return Err(Error::Resource(format!(
            "induced projective for {} has dimension {predicted} > {max_dim}",
            g.weight_label(lambda)
        )));
    }
    let mut free = g.ids_of_degree(-1);
    free.extend(g.ids_of_degree(1));
    induce(&Induction {
        free,
        sub: &v,
        zero: Vec::new(),
        acting: None,
        min_height: None,
        max_dim,
    })
}
