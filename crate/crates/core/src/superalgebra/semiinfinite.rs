//! Characters of h and the semi-infinite condition.

use super::algebra::{supertrace, LieSuperAlgebra};
use super::types::Weight;
use crate::error::{Error, Result};
use crate::linalg::rational::{self, Rational};
use crate::linalg::{SparseMatrix, SparseVec};
use num::Zero;
use serde::Serialize;
use std::collections::BTreeMap;

/// A linear functional on h, stored on the h-basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraCharacter {
    pub values: BTreeMap<usize, Rational>,
}

impl AlgebraCharacter {
    /// The functional that is `w` on the torus and zero on the other basis
    /// elements of h.
    pub fn from_weight(g: &LieSuperAlgebra, w: &Weight) -> Result<Self> {
        if w.len() != g.rank() {
            return Err(Error::Precondition(format!("weight has {} coordinates, expected {}", w.len(), g.rank())));
        }
        let mut values: BTreeMap<usize, Rational> = g.h_ids().into_iter().map(|i| (i, Rational::zero())).collect();
        for (t, c) in g.torus().iter().zip(w.coords()) {
            values.insert(*t, c.clone());
        }
        Ok(AlgebraCharacter { values })
    }

    pub fn eval(&self, v: &SparseVec) -> Option<Rational> {
        let mut acc = Rational::zero();
        for (i, c) in v.iter() {
            acc += c * self.values.get(i)?;
        }
        Some(acc)
    }

    pub fn restriction_to_torus(&self, g: &LieSuperAlgebra) -> Weight {
        Weight(g.torus().iter().map(|t| self.values.get(t).cloned().unwrap_or_default()).collect())
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Defect {
    pub kind: String,
    pub elements: Vec<String>,
    #[serde(with = "rational::serde_str")]
    pub lhs: Rational,
    #[serde(with = "rational::serde_str")]
    pub rhs: Rational,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SemiInfiniteReport {
    pub pairs_checked: usize,
    pub defects: Vec<Defect>,
}

impl SemiInfiniteReport {
    pub fn passed(&self) -> bool {
        self.defects.is_empty()
    }
}

/// Matrix of `H -> [x, [y, H]]` on the h-basis.
fn ad_composite_on_h(g: &LieSuperAlgebra, h: &[usize], x: usize, y: usize) -> Result<SparseMatrix> {
    let pos: BTreeMap<usize, usize> = h.iter().enumerate().map(|(p, i)| (*i, p)).collect();
    let mut cols = Vec::with_capacity(h.len());
    for &b in h {
        let img = g.bracket(&SparseVec::unit(x), g.bracket_basis(y, b));
        let mut pairs = Vec::new();
        for (k, c) in img.iter() {
            let p = pos
                .get(k)
                .ok_or_else(|| Error::Internal(format!("[{}, [{}, {}]] leaves h", g.label(x), g.label(y), g.label(b))))?;
            pairs.push((*p, c.clone()));
        }
        cols.push(SparseVec::from_pairs(pairs));
    }
    Ok(SparseMatrix::from_cols(h.len(), &cols))
}

/// Checks that `gamma` is a character of h and that
/// `gamma([x,y]) = str_h(ad x . ad y)` for all basis x in g_1, y in g_{-1}.
pub fn verify_semiinfinite(g: &LieSuperAlgebra, gamma: &AlgebraCharacter) -> Result<SemiInfiniteReport> {
    g.ensure_graded()?;
    let h = g.h_ids();
    if let Some(i) = h.iter().find(|i| !gamma.values.contains_key(i)) {
        return Err(Error::Precondition(format!("character undefined on {}", g.label(*i))));
    }
    let mut defects = Vec::new();
    for &i in &h {
        if g.parity(i).is_odd() && !gamma.values[&i].is_zero() {
            defects.push(Defect {
                kind: "odd_h".into(),
                elements: vec![g.label(i).into()],
                lhs: gamma.values[&i].clone(),
                rhs: Rational::zero(),
            });
        }
    }
    for &a in &h {
        for &b in &h {
            if g.parity(a).is_odd() || g.parity(b).is_odd() || a >= b {
                continue;
            }
            let v = gamma.eval(g.bracket_basis(a, b)).unwrap_or_default();
            if !v.is_zero() {
                defects.push(Defect {
                    kind: "commutator".into(),
                    elements: vec![g.label(a).into(), g.label(b).into()],
                    lhs: v,
                    rhs: Rational::zero(),
                });
            }
        }
    }
    let parities: Vec<_> = h.iter().map(|i| g.parity(*i)).collect();
    let mut pairs = 0;
    for &x in &g.ids_of_degree(1) {
        for &y in &g.ids_of_degree(-1) {
            pairs += 1;
            let lhs = gamma
                .eval(g.bracket_basis(x, y))
                .ok_or_else(|| Error::Internal("bracket of degrees 1 and -1 leaves h".into()))?;
            let rhs = supertrace(&ad_composite_on_h(g, &h, x, y)?, &parities);
            if lhs != rhs {
                defects.push(Defect {
                    kind: "semi_infinite".into(),
                    elements: vec![g.label(x).into(), g.label(y).into()],
                    lhs,
                    rhs,
                });
            }
        }
    }
    Ok(SemiInfiniteReport { pairs_checked: pairs, defects })
}

/// The semi-infinite character attached to each supported grading: 2 rho
/// for the principal grading of gl(m|n), -beta for the compatible one and
/// 0 for q(n).
pub fn standard_gamma(g: &LieSuperAlgebra) -> Result<Weight> {
    use super::types::{AlgebraKind, GradingKind};
    match (g.descriptor().kind, g.grading) {
        (AlgebraKind::Gl { m, n }, GradingKind::Principal) => Ok(super::weights::rho(m, n).scale(&Rational::from_integer(2.into()))),
        (AlgebraKind::Gl { m, n }, GradingKind::Compatible) => Ok(-&super::weights::beta(m, n)),
        (AlgebraKind::Q { n }, _) => Ok(Weight::zero(n)),
        _ => Err(Error::InvalidAlgebra("no semi-infinite character for this grading".into())),
    }
}
