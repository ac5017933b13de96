//! Projective covers, tilting modules and the duality between them.

use super::context::Workbench;
use super::duals::dual_module;
use super::explicit::ExplicitModule;
use super::ext::{ext1_data, extension_module};
use super::fitting::fitting_summands;
use super::flags::{delta_flag, FlagOutcome, KacFlag};
use super::highest::{induced_projective, require_compatible, simple_module};
use super::hom::{hom_of_parity, is_isomorphic, IsoOutcome, IsoSummary};
use crate::error::{Error, Result};
use crate::superalgebra::{beta, w0_action, Parity, Weight};
use serde::Serialize;
use std::collections::BTreeSet;

pub type WeightSet = BTreeSet<Weight>;

#[derive(Clone, Debug)]
pub struct FlaggedModule {
    pub module: ExplicitModule,
    pub flag: KacFlag,
}

fn require_flag(wb: &Workbench, m: &ExplicitModule, what: &str) -> Result<KacFlag> {
    match delta_flag(wb, m)? {
        FlagOutcome::Flag(f) => Ok(f),
        FlagOutcome::Absent { certificate } => Err(Error::Internal(format!("{what} has no Kac flag: {certificate}"))),
    }
}

fn outside(wb: &Workbench, flag: &KacFlag, window: &WeightSet) -> Vec<String> {
    let mut out: Vec<String> = flag
        .weights()
        .into_iter()
        .filter(|w| !window.contains(w))
        .map(|w| wb.g.weight_label(&w))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// P(lambda): the summand of U(g) (x)_{U(g_0)} V(lambda) mapping onto
/// L(lambda). Its Kac flag must stay inside `window`.
pub fn projective_cover(wb: &Workbench, lambda: &Weight, window: &WeightSet) -> Result<FlaggedModule> {
    require_compatible(&wb.g)?;
    let q = induced_projective(&wb.g, lambda, wb.limits.max_module_dim)?;
    let l = simple_module(&wb.g, lambda)?;
    let mut covers: Vec<ExplicitModule> = fitting_summands(&q, &wb.fitting_options())?
        .into_iter()
        .map(|s| s.module)
        .filter(|s| !hom_of_parity(s, &l, Parity::Even).is_empty())
        .collect();
    if covers.len() != 1 {
        return Err(Error::Internal(format!(
            "{} summands of the induced module map onto L({})",
            covers.len(),
            wb.g.weight_label(lambda)
        )));
    }
    let mut p = covers.pop().unwrap();
    p.highest_weight = None;
    let flag = require_flag(wb, &p, "projective cover")?;
    if flag.factors.last() != Some(&(lambda.clone(), Parity::Even)) {
        return Err(Error::Internal(format!("top of the flag of P({}) is wrong", wb.g.weight_label(lambda))));
    }
    let missing = outside(wb, &flag, window);
    if !missing.is_empty() {
        return Err(Error::Window(missing));
    }
    Ok(FlaggedModule { module: p, flag })
}

/// Weights mu, with both parities, for which Ext^1(Pi^p K(mu), M) can be
/// nonzero: dominant weights of M minus a positive odd root, highest first.
pub fn ext_candidates(wb: &Workbench, m: &ExplicitModule) -> Vec<(Weight, Parity)> {
    let g = &wb.g;
    let roots: Vec<&Weight> = g.positive_odd_root_ids().into_iter().map(|i| g.weight(i)).collect();
    let mut set = BTreeSet::new();
    for w in m.weight_spaces().keys() {
        for r in &roots {
            let mu = w - *r;
            if g.is_dominant(&mu) {
                set.insert(mu);
            }
        }
    }
    let mut out: Vec<Weight> = set.into_iter().collect();
    out.sort_by(|a, b| g.weight_height(b).cmp(&g.weight_height(a)).then_with(|| b.cmp(a)));
    out.into_iter().flat_map(|w| [(w.clone(), Parity::Even), (w, Parity::Odd)]).collect()
}

#[derive(Clone, Debug)]
pub struct TiltingResult {
    pub module: ExplicitModule,
    pub flag: KacFlag,
    /// Extensions performed, as (weight, parity) of the Kac module added.
    pub steps: Vec<(Weight, Parity)>,
}

/// T(lambda) by Ringel's construction: starting from K(lambda), extend by
/// Kac modules along nonzero Ext^1 classes and keep the indecomposable
/// summand containing the weight lambda.
pub fn tilting_module(wb: &Workbench, lambda: &Weight, window: &WeightSet) -> Result<TiltingResult> {
    require_compatible(&wb.g)?;
    let mut t = (*wb.kac(lambda)?).clone();
    let mut steps = Vec::new();
    for _ in 0..wb.limits.max_iterations {
        let mut next = None;
        for (mu, p) in ext_candidates(wb, &t) {
            let data = ext1_data(wb, &mu, p, &t)?;
            if data.dim() > 0 {
                if !window.contains(&mu) {
                    return Err(Error::Window(vec![wb.g.weight_label(&mu)]));
                }
                next = Some((mu, p, data.classes[0].clone()));
                break;
            }
        }
        let Some((mu, p, phi)) = next else {
            let mut module = t;
            module.highest_weight = Some(lambda.clone());
            let flag = require_flag(wb, &module, "tilting module")?;
            return Ok(TiltingResult { module, flag, steps });
        };
        let x = extension_module(wb, &mu, p, &t, &phi)?;
        let mut keep: Vec<ExplicitModule> = fitting_summands(&x, &wb.fitting_options())?
            .into_iter()
            .map(|s| s.module)
            .filter(|s| s.weight_spaces().contains_key(lambda))
            .collect();
        if keep.len() != 1 {
            return Err(Error::Internal("weight lambda is not in exactly one summand".into()));
        }
        t = keep.pop().unwrap();
        steps.push((mu, p));
    }
    Err(Error::Resource(format!(
        "tilting construction for {} did not stop after {} extensions",
        wb.g.weight_label(lambda),
        wb.limits.max_iterations
    )))
}

#[derive(Clone, Debug, Serialize)]
pub struct DualityReport {
    pub lambda: String,
    pub partner: String,
    pub characters_agree: bool,
    pub iso: IsoSummary,
    pub holds: bool,
}

fn weights_mn(wb: &Workbench) -> Result<(usize, usize)> {
    require_compatible(&wb.g)
}

/// beta - w0 lambda.
pub fn reflect(wb: &Workbench, lambda: &Weight) -> Result<Weight> {
    let (m, n) = weights_mn(wb)?;
    Ok(&beta(m, n) - &w0_action(m, n, lambda))
}

fn compare(wb: &Workbench, lambda: &Weight, partner: &Weight, a: &ExplicitModule, b: &ExplicitModule) -> Result<DualityReport> {
    let characters_agree = a.character() == b.character();
    let outcome = if characters_agree {
        is_isomorphic(a, b, &wb.iso_options(true))
    } else {
        IsoOutcome::Absent {
            reason: "characters differ".into(),
        }
    };
    if let IsoOutcome::NotFound { reason } = &outcome {
        return Err(Error::Resource(format!("{}: {reason}", wb.g.weight_label(lambda))));
    }
    Ok(DualityReport {
        lambda: wb.g.weight_label(lambda),
        partner: wb.g.weight_label(partner),
        characters_agree,
        holds: outcome.is_found(),
        iso: outcome.summary(),
    })
}

/// K(beta - w0 lambda)* against K(lambda).
pub fn verify_kdual(wb: &Workbench, lambda: &Weight) -> Result<DualityReport> {
    let mu = reflect(wb, lambda)?;
    let d = dual_module(&*wb.kac(&mu)?)?;
    compare(wb, lambda, &mu, &d, &*wb.kac(lambda)?)
}

/// P(beta - w0 lambda)* against T(lambda), up to a global parity flip.
pub fn verify_pdual(wb: &Workbench, lambda: &Weight, window: &WeightSet) -> Result<DualityReport> {
    let mu = reflect(wb, lambda)?;
    let mut reflected: WeightSet = window.iter().map(|w| reflect(wb, w)).collect::<Result<_>>()?;
    reflected.extend(window.iter().cloned());
    let p = projective_cover(wb, &mu, &reflected)?;
    let t = tilting_module(wb, lambda, window)?;
    compare(wb, lambda, &mu, &dual_module(&p.module)?, &t.module)
}

#[derive(Clone, Debug, Serialize)]
pub struct TiltingCertificate {
    pub indecomposable: bool,
    pub ext_vanishes: bool,
    pub starts_at_lambda: bool,
    pub candidates_checked: usize,
}

impl TiltingCertificate {
    pub fn holds(&self) -> bool {
        self.indecomposable && self.ext_vanishes && self.starts_at_lambda
    }
}

/// Re-checks a tilting module: indecomposable, Ext^1(Pi^p K(mu), T) = 0 at
/// every weight where it could be nonzero, and K(lambda) at the bottom of
/// its flag.
pub fn certify_tilting(wb: &Workbench, lambda: &Weight, t: &TiltingResult) -> Result<TiltingCertificate> {
    let indecomposable = super::fitting::is_indecomposable(&t.module, &wb.fitting_options())?;
    let cands = ext_candidates(wb, &t.module);
    let mut ext_vanishes = true;
    for (mu, p) in &cands {
        if ext1_data(wb, mu, *p, &t.module)?.dim() > 0 {
            ext_vanishes = false;
            break;
        }
    }
    Ok(TiltingCertificate {
        indecomposable,
        ext_vanishes,
        starts_at_lambda: t.flag.factors.first() == Some(&(lambda.clone(), Parity::Even)),
        candidates_checked: cands.len(),
    })
}
