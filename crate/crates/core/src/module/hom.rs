//! Spaces of module homomorphisms and isomorphism search.

use super::explicit::ExplicitModule;
use crate::error::Result;
use crate::linalg::rational::{int, Rational};
use crate::linalg::{kernel_basis, rank, SparseMatrix, SparseVec};
use crate::superalgebra::{Parity, Weight};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::HashMap;

/// A homogeneous map satisfying `f(x m) = (-1)^{|f||x|} x f(m)`.
/// `matrix` is (target dim) x (source dim).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMorphism {
    pub matrix: SparseMatrix,
    pub parity: Parity,
}

#[derive(Clone, Debug, Default)]
pub struct HomSpace {
    pub even: Vec<ModuleMorphism>,
    pub odd: Vec<ModuleMorphism>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.even.len() + self.odd.len()
    }
}

/// Basis of the parity-`p` part of Hom(M, N), intertwining every id that
/// acts on both modules.
pub fn hom_of_parity(m: &ExplicitModule, n: &ExplicitModule, p: Parity) -> Vec<ModuleMorphism> {
    let g = m.algebra();
    let mut by_key: HashMap<(&Weight, Parity), Vec<usize>> = HashMap::new();
    for b in 0..n.dim() {
        by_key.entry((n.weight(b), n.parity(b))).or_default().push(b);
    }
    let mut unknowns: Vec<(usize, usize)> = Vec::new();
    let mut by_src: Vec<Vec<(usize, usize)>> = vec![Vec::new(); m.dim()];
    let mut by_tgt: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n.dim()];
    for a in 0..m.dim() {
        if let Some(bs) = by_key.get(&(m.weight(a), m.parity(a) + p)) {
            for &b in bs {
                let k = unknowns.len();
                unknowns.push((b, a));
                by_src[a].push((b, k));
                by_tgt[b].push((a, k));
            }
        }
    }
    if unknowns.is_empty() {
        return Vec::new();
    }
    let mut rows: Vec<SparseVec> = Vec::new();
    for x in 0..g.dim() {
        let (Some(am), Some(an)) = (m.action(x), n.action(x)) else {
            continue;
        };
        let s = int(p.sign_with(g.parity(x)));
        let mut eqs: HashMap<(usize, usize), Vec<(usize, Rational)>> = HashMap::new();
        // (F A^M)[b', a] = sum_{a'} F[b', a'] A^M[a', a]
        for (a1, a, v) in am.triplets() {
            for &(b1, k) in &by_src[a1] {
                eqs.entry((b1, a)).or_default().push((k, v.clone()));
            }
        }
        // (A^N F)[b', a] = sum_b A^N[b', b] F[b, a]
        for (b1, b, v) in an.triplets() {
            for &(a, k) in &by_tgt[b] {
                eqs.entry((b1, a)).or_default().push((k, -(&s * v)));
            }
        }
        let mut keys: Vec<_> = eqs.keys().copied().collect();
        keys.sort();
        for key in keys {
            let row = SparseVec::from_pairs(eqs.remove(&key).unwrap());
            if !row.is_zero() {
                rows.push(row);
            }
        }
    }
    let sys = SparseMatrix::from_rows(unknowns.len(), rows);
    kernel_basis(&sys)
        .into_iter()
        .map(|k| {
            let trip = k.iter().map(|(i, c)| (unknowns[*i].0, unknowns[*i].1, c.clone()));
            ModuleMorphism {
                matrix: SparseMatrix::from_triplets(n.dim(), m.dim(), trip),
                parity: p,
            }
        })
        .collect()
}

pub fn hom_space(m: &ExplicitModule, n: &ExplicitModule) -> Result<HomSpace> {
    Ok(HomSpace {
        even: hom_of_parity(m, n, Parity::Even),
        odd: hom_of_parity(m, n, Parity::Odd),
    })
}

/// Checks the intertwining relation directly.
pub fn is_morphism(m: &ExplicitModule, n: &ExplicitModule, f: &ModuleMorphism) -> bool {
    let g = m.algebra();
    (0..g.dim()).all(|x| match (m.action(x), n.action(x)) {
        (Some(am), Some(an)) => {
            let s = int(f.parity.sign_with(g.parity(x)));
            f.matrix.mul(am) == an.mul(&f.matrix).scale(&s)
        }
        _ => true,
    })
}

#[derive(Clone, Debug)]
pub struct IsoOptions {
    pub seed: u64,
    /// Number of candidate combinations tried before giving up.
    pub budget: usize,
    /// Also accept an isomorphism onto the parity-shifted target.
    pub allow_parity_flip: bool,
}

impl Default for IsoOptions {
    fn default() -> Self {
        IsoOptions {
            seed: 0,
            budget: 64,
            allow_parity_flip: false,
        }
    }
}

#[derive(Clone, Debug)]
pub enum IsoOutcome {
    Found { morphism: ModuleMorphism, parity_flipped: bool },
    /// No isomorphism exists, for the stated reason.
    Absent { reason: String },
    /// The search budget ran out without deciding.
    NotFound { reason: String },
}

impl IsoOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self, IsoOutcome::Found { .. })
    }

    pub fn summary(&self) -> IsoSummary {
        match self {
            IsoOutcome::Found { parity_flipped, .. } => IsoSummary {
                status: "found".into(),
                parity_flipped: Some(*parity_flipped),
                reason: None,
            },
            IsoOutcome::Absent { reason } => IsoSummary {
                status: "absent".into(),
                parity_flipped: None,
                reason: Some(reason.clone()),
            },
            IsoOutcome::NotFound { reason } => IsoSummary {
                status: "not_found".into(),
                parity_flipped: None,
                reason: Some(reason.clone()),
            },
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct IsoSummary {
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parity_flipped: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

fn census(m: &ExplicitModule) -> Vec<((Weight, Parity), usize)> {
    m.blocks().into_iter().map(|(k, v)| (k, v.len())).collect()
}

/// Invertibility of a weight- and parity-preserving square map, block by block.
fn is_invertible(m: &ExplicitModule, n: &ExplicitModule, f: &SparseMatrix) -> bool {
    let nb = n.blocks();
    m.blocks().into_iter().all(|(key, src)| {
        let Some(tgt) = nb.get(&key) else {
            return false;
        };
        tgt.len() == src.len() && rank(&f.select(tgt, &src)) == src.len()
    })
}

fn search(m: &ExplicitModule, n: &ExplicitModule, opts: &IsoOptions, budget: &mut usize) -> std::result::Result<Option<ModuleMorphism>, String> {
    let basis = hom_of_parity(m, n, Parity::Even);
    if basis.is_empty() {
        return Err("no nonzero even homomorphism".into());
    }
    let combine = |coef: &[i64]| {
        basis
            .iter()
            .zip(coef)
            .fold(SparseMatrix::zeros(n.dim(), m.dim()), |acc, (b, c)| acc.axpy(&int(*c), &b.matrix))
    };
    let k = basis.len();
    let mut candidates: Vec<Vec<i64>> = (0..k).map(|i| (0..k).map(|j| (i == j) as i64).collect()).collect();
    candidates.push(vec![1; k]);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    while *budget > 0 {
        *budget -= 1;
        let coef = if let Some(c) = candidates.pop() { c } else { (0..k).map(|_| rng.gen_range(-5..=5)).collect() };
        let f = combine(&coef);
        if is_invertible(m, n, &f) {
            return Ok(Some(ModuleMorphism {
                matrix: f,
                parity: Parity::Even,
            }));
        }
        if k == 1 {
            return Err("the even Hom is spanned by a non-invertible map".into());
        }
    }
    Ok(None)
}

/// Looks for an even isomorphism M -> N (or onto the parity shift of N).
pub fn is_isomorphic(m: &ExplicitModule, n: &ExplicitModule, opts: &IsoOptions) -> IsoOutcome {
    if m.dim() != n.dim() {
        return IsoOutcome::Absent {
            reason: format!("dimensions differ ({} vs {})", m.dim(), n.dim()),
        };
    }
    let cm = census(m);
    let mut targets = Vec::new();
    if census(n) == cm {
        targets.push((n.clone(), false));
    }
    if opts.allow_parity_flip {
        let f = n.parity_flip();
        if census(&f) == cm {
            targets.push((f, true));
        }
    }
    if targets.is_empty() {
        return IsoOutcome::Absent {
            reason: "weight and parity multiplicities differ".into(),
        };
    }
    let mut absent = Vec::new();
    for (t, flipped) in &targets {
        let mut budget = opts.budget;
        match search(m, t, opts, &mut budget) {
            Ok(Some(morphism)) => {
                return IsoOutcome::Found {
                    morphism,
                    parity_flipped: *flipped,
                }
            }
            Ok(None) => {}
            Err(reason) => absent.push(reason),
        }
    }
    if absent.len() == targets.len() {
        return IsoOutcome::Absent { reason: absent.join("; ") };
    }
    IsoOutcome::NotFound {
        reason: format!("no invertible combination within a budget of {}", opts.budget),
    }
}
