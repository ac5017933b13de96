//! Finite-dimensional supermodules given by action matrices.

use crate::characters::Character;
use crate::error::{Error, Result};
use crate::linalg::rational::{self, int, Rational};
use crate::linalg::{SparseMatrix, SparseVec};
use crate::superalgebra::{LieSuperAlgebra, Parity, Weight};
use serde::Serialize;
use std::collections::BTreeMap;
use std::sync::Arc;

/// A supermodule over the algebra, or over the subalgebra spanned by the
/// ids that carry an action matrix. Basis vectors are homogeneous for
/// weight and parity.
#[derive(Clone, Debug)]
pub struct ExplicitModule {
    algebra: Arc<LieSuperAlgebra>,
    weights: Vec<Weight>,
    parities: Vec<Parity>,
    actions: Vec<Option<SparseMatrix>>,
    pub highest_weight: Option<Weight>,
    /// Set for truncations of infinite-dimensional modules, where actions
    /// leaving the window were dropped.
    pub truncated: bool,
}

impl ExplicitModule {
    pub fn new(
        algebra: Arc<LieSuperAlgebra>,
        weights: Vec<Weight>,
        parities: Vec<Parity>,
        actions: Vec<Option<SparseMatrix>>,
    ) -> Result<Self> {
        let d = weights.len();
        if parities.len() != d || actions.len() != algebra.dim() {
            return Err(Error::Internal("module data has inconsistent sizes".into()));
        }
        if actions.iter().flatten().any(|a| a.nrows() != d || a.ncols() != d) {
            return Err(Error::Internal("action matrix has wrong shape".into()));
        }
        Ok(ExplicitModule {
            algebra,
            weights,
            parities,
            actions,
            highest_weight: None,
            truncated: false,
        })
    }

    pub fn with_highest_weight(mut self, w: Weight) -> Self {
        self.highest_weight = Some(w);
        self
    }

    pub fn zero(algebra: Arc<LieSuperAlgebra>, acting: &[usize]) -> Self {
        let mut actions = vec![None; algebra.dim()];
        for &x in acting {
            actions[x] = Some(SparseMatrix::zeros(0, 0));
        }
        ExplicitModule {
            algebra,
            weights: Vec::new(),
            parities: Vec::new(),
            actions,
            highest_weight: None,
            truncated: false,
        }
    }

    pub fn algebra(&self) -> &Arc<LieSuperAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weight(&self, i: usize) -> &Weight {
        &self.weights[i]
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn action(&self, x: usize) -> Option<&SparseMatrix> {
        self.actions[x].as_ref()
    }

    pub fn actions(&self) -> &[Option<SparseMatrix>] {
        &self.actions
    }

    pub fn acting_ids(&self) -> Vec<usize> {
        (0..self.actions.len()).filter(|x| self.actions[*x].is_some()).collect()
    }

    pub fn is_g_module(&self) -> bool {
        self.actions.iter().all(|a| a.is_some())
    }

    pub fn act(&self, x: usize, v: &SparseVec) -> SparseVec {
        match &self.actions[x] {
            Some(a) => a.mul_vec(v),
            None => SparseVec::new(),
        }
    }

    /// Even and odd dimension of each weight space.
    pub fn weight_spaces(&self) -> BTreeMap<Weight, (usize, usize)> {
        let mut out: BTreeMap<Weight, (usize, usize)> = BTreeMap::new();
        for (w, p) in self.weights.iter().zip(&self.parities) {
            let e = out.entry(w.clone()).or_default();
            if p.is_odd() {
                e.1 += 1;
            } else {
                e.0 += 1;
            }
        }
        out
    }

    /// Basis indices grouped by (weight, parity).
    pub fn blocks(&self) -> BTreeMap<(Weight, Parity), Vec<usize>> {
        let mut out: BTreeMap<(Weight, Parity), Vec<usize>> = BTreeMap::new();
        for i in 0..self.dim() {
            out.entry((self.weights[i].clone(), self.parities[i])).or_default().push(i);
        }
        out
    }

    pub fn indices_of_weight(&self, w: &Weight) -> Vec<usize> {
        (0..self.dim()).filter(|i| &self.weights[*i] == w).collect()
    }

    pub fn character(&self) -> Character {
        let mut c = Character::new();
        for w in &self.weights {
            c.add_weight(w.clone(), 1);
        }
        c
    }

    /// Weights of maximal principal height; the lexicographically largest
    /// comes last.
    pub fn top_weights(&self) -> Vec<Weight> {
        let g = &self.algebra;
        let Some(best) = self.weights.iter().map(|w| g.weight_height(w)).max() else {
            return Vec::new();
        };
        let mut out: Vec<Weight> = self.weight_spaces().into_keys().filter(|w| g.weight_height(w) == best).collect();
        out.sort();
        out
    }

    /// Eigenvalue of the grading element on each basis vector.
    pub fn degrees(&self) -> Option<Vec<Rational>> {
        self.weights.iter().map(|w| self.algebra.weight_degree(w)).collect()
    }

    pub fn parity_flip(&self) -> ExplicitModule {
        let mut out = self.clone();
        out.parities = self.parities.iter().map(|p| p.flip()).collect();
        out
    }

    pub fn direct_sum(&self, other: &ExplicitModule) -> Result<ExplicitModule> {
        if !Arc::ptr_eq(&self.algebra, &other.algebra) && self.algebra.descriptor() != other.algebra.descriptor() {
            return Err(Error::Precondition("direct sum of modules over different algebras".into()));
        }
        let actions = self
            .actions
            .iter()
            .zip(&other.actions)
            .map(|(a, b)| match (a, b) {
                (Some(a), Some(b)) => Some(a.direct_sum(b)),
                _ => None,
            })
            .collect();
        let mut weights = self.weights.clone();
        weights.extend(other.weights.iter().cloned());
        let mut parities = self.parities.clone();
        parities.extend(other.parities.iter().cloned());
        ExplicitModule::new(self.algebra.clone(), weights, parities, actions)
    }

    /// Restriction to the given ids; other actions are forgotten.
    pub fn restrict(&self, ids: &[usize]) -> ExplicitModule {
        let mut out = self.clone();
        for (x, a) in out.actions.iter_mut().enumerate() {
            if !ids.contains(&x) {
                *a = None;
            }
        }
        out
    }

    /// Checks homogeneity of the actions and the bracket relation
    /// `x(y m) - (-1)^{|x||y|} y(x m) = [x,y] m` over all acting pairs.
    pub fn check_axioms(&self) -> std::result::Result<(), String> {
        let g = &self.algebra;
        let acting = self.acting_ids();
        for &x in &acting {
            let a = self.action(x).unwrap();
            for (r, c, _) in a.triplets() {
                if self.weights[r] != &self.weights[c] + g.weight(x) || self.parities[r] != self.parities[c] + g.parity(x) {
                    return Err(format!("{} maps basis {c} to {r} inhomogeneously", g.label(x)));
                }
            }
        }
        for &x in &acting {
            for &y in &acting {
                let (ax, ay) = (self.action(x).unwrap(), self.action(y).unwrap());
                let s = int(g.parity(x).sign_with(g.parity(y)));
                let lhs = ax.mul(ay).axpy(&-s, &ay.mul(ax));
                let mut rhs = SparseMatrix::zeros(self.dim(), self.dim());
                for (z, c) in g.bracket_basis(x, y).iter() {
                    match self.action(*z) {
                        Some(az) => rhs = rhs.axpy(c, az),
                        None => return Err(format!("[{}, {}] leaves the acting subalgebra", g.label(x), g.label(y))),
                    }
                }
                if lhs != rhs {
                    return Err(format!("bracket relation fails for ({}, {})", g.label(x), g.label(y)));
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> ModuleJson {
        let g = &self.algebra;
        ModuleJson {
            algebra: serde_json::to_value(g.descriptor()).unwrap_or_default(),
            dim: self.dim(),
            highest_weight: self.highest_weight.as_ref().map(|w| g.weight_label(w)),
            truncated: self.truncated,
            weights: self.weights.iter().map(|w| g.weight_label(w)).collect(),
            parities: self.parities.iter().map(|p| p.bit()).collect(),
            actions: self
                .acting_ids()
                .into_iter()
                .map(|x| ActionJson {
                    element: g.label(x).to_string(),
                    entries: self
                        .action(x)
                        .unwrap()
                        .triplets()
                        .map(|(r, c, v)| (r, c, rational::to_string(v)))
                        .collect(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ActionJson {
    pub element: String,
    /// `(row, column, value)`.
    pub entries: Vec<(usize, usize, String)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ModuleJson {
    pub algebra: serde_json::Value,
    pub dim: usize,
    pub highest_weight: Option<String>,
    pub truncated: bool,
    pub weights: Vec<String>,
    pub parities: Vec<u8>,
    pub actions: Vec<ActionJson>,
}
