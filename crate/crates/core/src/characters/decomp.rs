//! Decomposition numbers, Cartan matrices and tilting multiplicities over a
//! finite window of dominant weights.

use super::character::Character;
use super::kac::kac_character;
use crate::error::{Error, Result};
use crate::linalg::rational::{int, Rational};
use crate::module::{
    contravariant_form, ext1_kac_both, projective_cover, reflect, tilting_module, verma_module_truncated, Workbench,
    WeightSet,
};
use crate::superalgebra::{LieSuperAlgebra, Weight};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

/// A finite set of dominant weights with the box it was cut from.
#[derive(Clone, Debug)]
pub struct Window {
    pub weights: WeightSet,
    pub lo: Vec<Rational>,
    pub hi: Vec<Rational>,
}

impl Window {
    /// All dominant integral weights with coordinates in lo..=hi.
    pub fn from_box(g: &LieSuperAlgebra, lo: i64, hi: i64) -> Window {
        let r = g.rank();
        Window::from_bounds(g, &vec![lo; r], &vec![hi; r])
    }

    /// Dominant integral weights with lo[k] <= coordinate k <= hi[k].
    pub fn from_bounds(g: &LieSuperAlgebra, lo: &[i64], hi: &[i64]) -> Window {
        let r = g.rank();
        let mut weights = WeightSet::new();
        if (0..r).all(|k| lo[k] <= hi[k]) {
            let mut cur = lo.to_vec();
            'outer: loop {
                let w = Weight::from_ints(&cur);
                if g.is_dominant(&w) {
                    weights.insert(w);
                }
                for k in 0..r {
                    if cur[k] < hi[k] {
                        cur[k] += 1;
                        continue 'outer;
                    }
                    cur[k] = lo[k];
                }
                break;
            }
        }
        Window {
            weights,
            lo: lo.iter().map(|x| int(*x)).collect(),
            hi: hi.iter().map(|x| int(*x)).collect(),
        }
    }

    /// The box widened by `margin` on every side, with all its dominant
    /// integral weights.
    pub fn widened(&self, g: &LieSuperAlgebra, margin: i64) -> Window {
        let to_i = |r: &Rational| r.to_integer().try_into().unwrap_or(0i64);
        let lo: Vec<i64> = self.lo.iter().map(|c| to_i(&c.floor()) - margin).collect();
        let hi: Vec<i64> = self.hi.iter().map(|c| to_i(&c.ceil()) + margin).collect();
        Window::from_bounds(g, &lo, &hi)
    }

    /// An explicit list; the box is its coordinatewise hull.
    pub fn from_weights(g: &LieSuperAlgebra, list: &[Weight]) -> Result<Window> {
        let r = g.rank();
        if list.is_empty() {
            return Err(Error::Precondition("empty weight list".into()));
        }
        let mut lo = list[0].coords().to_vec();
        let mut hi = lo.clone();
        for w in list {
            g.check_dominant(w)?;
            for k in 0..r {
                if w.coords()[k] < lo[k] {
                    lo[k] = w.coords()[k].clone();
                }
                if w.coords()[k] > hi[k] {
                    hi[k] = w.coords()[k].clone();
                }
            }
        }
        Ok(Window {
            weights: list.iter().cloned().collect(),
            lo,
            hi,
        })
    }

    pub fn in_box(&self, w: &Weight) -> bool {
        w.coords().iter().zip(&self.lo).zip(&self.hi).all(|((c, l), h)| l <= c && c <= h)
    }

    pub fn list(&self) -> Vec<Weight> {
        self.weights.iter().cloned().collect()
    }
}

/// Composition multiplicities of a finite-dimensional module from its
/// character, by repeatedly removing the character of the simple module at
/// a highest remaining weight.
pub fn peel(wb: &Workbench, ch: &Character) -> Result<BTreeMap<Weight, u64>> {
    let g = &wb.g;
    let mut rest = ch.clone();
    let mut out = BTreeMap::new();
    while let Some(top) = rest
        .support()
        .max_by(|a, b| g.weight_height(a).cmp(&g.weight_height(b)).then_with(|| a.cmp(b)))
        .cloned()
    {
        let k = rest.get(&top);
        let l = wb.simple_char(&top)?;
        rest = rest
            .checked_sub(&l, k)
            .ok_or_else(|| Error::Internal(format!("L({}) does not fit", g.weight_label(&top))))?;
        out.insert(top, k);
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct OutsideFactor {
    pub kac: String,
    pub factor: String,
    pub mult: u64,
}

#[derive(Clone, Debug)]
pub struct DecompositionMatrix {
    pub weights: Vec<Weight>,
    /// entries[i][j] = [K(weights[i]) : L(weights[j])]
    pub entries: Vec<Vec<u64>>,
    /// Factors of K(mu), mu in the window, at dominant weights outside it.
    pub outside: Vec<(Weight, Weight, u64)>,
}

impl DecompositionMatrix {
    pub fn index(&self, w: &Weight) -> Option<usize> {
        self.weights.iter().position(|x| x == w)
    }

    pub fn get(&self, mu: &Weight, lambda: &Weight) -> u64 {
        match (self.index(mu), self.index(lambda)) {
            (Some(i), Some(j)) => self.entries[i][j],
            _ => 0,
        }
    }

    pub fn is_unitriangular(&self, g: &LieSuperAlgebra) -> bool {
        let n = self.weights.len();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let d = self.entries[i][j];
                if i == j {
                    d == 1
                } else {
                    d == 0 || g.dominates(&self.weights[i], &self.weights[j])
                }
            })
        })
    }

    pub fn outside_labels(&self, g: &LieSuperAlgebra) -> Vec<OutsideFactor> {
        self.outside
            .iter()
            .map(|(k, f, m)| OutsideFactor {
                kac: g.weight_label(k),
                factor: g.weight_label(f),
                mult: *m,
            })
            .collect()
    }
}

/// D[mu][lambda] = [K(mu) : L(lambda)] for mu, lambda in the window. A
/// factor outside the window but inside its box is a window error.
pub fn decomposition_matrix(wb: &Workbench, win: &Window) -> Result<DecompositionMatrix> {
    let weights = win.list();
    let n = weights.len();
    let mut entries = vec![vec![0u64; n]; n];
    let mut outside = Vec::new();
    let mut missing = BTreeSet::new();
    for (i, mu) in weights.iter().enumerate() {
        for (nu, k) in peel(wb, &kac_character(&wb.g, mu)?)? {
            match weights.iter().position(|x| *x == nu) {
                Some(j) => entries[i][j] = k,
                None => {
                    if win.in_box(&nu) {
                        missing.insert(wb.g.weight_label(&nu));
                    }
                    outside.push((mu.clone(), nu, k));
                }
            }
        }
    }
    if !missing.is_empty() {
        return Err(Error::Window(missing.into_iter().collect()));
    }
    Ok(DecompositionMatrix {
        weights,
        entries,
        outside,
    })
}

pub type IntMatrix = Vec<Vec<u64>>;

/// C = D^T D, the Cartan matrix predicted by BGG reciprocity.
pub fn cartan_matrix_via_bgg(d: &DecompositionMatrix) -> IntMatrix {
    let n = d.weights.len();
    let mut c = vec![vec![0u64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            *slot = (0..n).map(|k| d.entries[k][i] * d.entries[k][j]).sum();
        }
    }
    c
}

#[derive(Clone, Debug)]
pub struct CartanDirect {
    /// Weights whose projective cover has its whole Kac flag in the window.
    pub interior: Vec<Weight>,
    pub excluded: Vec<(Weight, Vec<String>)>,
    /// [P(lambda) : L(kappa)], rows lambda, columns kappa, over the interior.
    pub composition: IntMatrix,
    /// (P(lambda) : K(mu)), rows lambda in the interior, columns mu in the
    /// ambient window.
    pub flags: IntMatrix,
    pub dims: Vec<u64>,
}

/// Projective covers P(lambda) for lambda in `rows`, constructed with their
/// Kac flags required to lie in `ambient`.
pub fn cartan_matrix_direct(wb: &Workbench, rows: &Window, ambient: &Window) -> Result<CartanDirect> {
    let all = ambient.list();
    let mut interior = Vec::new();
    let mut excluded = Vec::new();
    let mut covers = Vec::new();
    for lam in rows.weights.iter() {
        match projective_cover(wb, lam, &ambient.weights) {
            Ok(p) => {
                interior.push(lam.clone());
                covers.push(p);
            }
            Err(Error::Window(w)) => excluded.push((lam.clone(), w)),
            Err(e) => return Err(e),
        }
    }
    let mut composition = Vec::new();
    let mut flags = Vec::new();
    let mut dims = Vec::new();
    for p in &covers {
        let comp = peel(wb, &p.module.character())?;
        composition.push(interior.iter().map(|k| comp.get(k).copied().unwrap_or(0)).collect());
        flags.push(all.iter().map(|mu| p.flag.multiplicity(mu) as u64).collect());
        dims.push(p.module.dim() as u64);
    }
    Ok(CartanDirect {
        interior,
        excluded,
        composition,
        flags,
        dims,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct MatrixCheck {
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub lhs: IntMatrix,
    pub rhs: IntMatrix,
    pub mismatches: Vec<(String, String, u64, u64)>,
}

impl MatrixCheck {
    pub fn new(g: &LieSuperAlgebra, rows: &[Weight], cols: &[Weight], lhs: IntMatrix, rhs: IntMatrix) -> MatrixCheck {
        let mut mismatches = Vec::new();
        for (i, r) in rows.iter().enumerate() {
            for (j, c) in cols.iter().enumerate() {
                if lhs[i][j] != rhs[i][j] {
                    mismatches.push((g.weight_label(r), g.weight_label(c), lhs[i][j], rhs[i][j]));
                }
            }
        }
        MatrixCheck {
            rows: rows.iter().map(|w| g.weight_label(w)).collect(),
            cols: cols.iter().map(|w| g.weight_label(w)).collect(),
            lhs,
            rhs,
            mismatches,
        }
    }

    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BggReport {
    pub composition: MatrixCheck,
    pub flags: MatrixCheck,
    pub mass: Vec<(String, u64, u64)>,
    pub excluded: Vec<String>,
}

impl BggReport {
    pub fn passed(&self) -> bool {
        self.composition.passed() && self.flags.passed() && self.mass.iter().all(|(_, a, b)| a == b)
    }
}

/// Compares explicitly constructed projective covers P(lambda), lambda in
/// `rows`, against D computed over `ambient`.
pub fn verify_bgg(wb: &Workbench, rows: &Window, ambient: &Window) -> Result<BggReport> {
    let g = &wb.g;
    let d = decomposition_matrix(wb, ambient)?;
    let c = cartan_matrix_via_bgg(&d);
    let direct = cartan_matrix_direct(wb, rows, ambient)?;
    let idx: Vec<usize> = direct.interior.iter().map(|w| d.index(w).unwrap()).collect();
    let predicted: IntMatrix = idx.iter().map(|&i| idx.iter().map(|&j| c[i][j]).collect()).collect();
    let composition = MatrixCheck::new(g, &direct.interior, &direct.interior, direct.composition.clone(), predicted);
    let columns: IntMatrix = idx.iter().map(|&j| (0..d.weights.len()).map(|i| d.entries[i][j]).collect()).collect();
    let flags = MatrixCheck::new(g, &direct.interior, &d.weights, direct.flags.clone(), columns.clone());
    let mut mass = Vec::new();
    for (r, lam) in direct.interior.iter().enumerate() {
        let mut want = 0;
        for (i, mu) in d.weights.iter().enumerate() {
            want += columns[r][i] * kac_character(g, mu)?.mass();
        }
        mass.push((g.weight_label(lam), direct.dims[r], want));
    }
    Ok(BggReport {
        composition,
        flags,
        mass,
        excluded: direct.excluded.iter().map(|(w, _)| g.weight_label(w)).collect(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TiltingReport {
    pub table: MatrixCheck,
    pub excluded: Vec<String>,
    pub dims: Vec<(String, usize)>,
}

/// (T(lambda) : K(mu)) against [K(beta - w0 mu) : L(beta - w0 lambda)] for
/// lambda in `lambdas` and mu in `ambient`.
pub fn tilting_table(wb: &Workbench, lambdas: &Window, ambient: &Window) -> Result<TiltingReport> {
    let g = &wb.g;
    let all = ambient.list();
    let mut rows = Vec::new();
    let mut excluded = Vec::new();
    let mut lhs = Vec::new();
    let mut dims = Vec::new();
    for lam in lambdas.weights.iter() {
        match tilting_module(wb, lam, &ambient.weights) {
            Ok(t) => {
                lhs.push(all.iter().map(|mu| t.flag.multiplicity(mu) as u64).collect::<Vec<_>>());
                dims.push((g.weight_label(lam), t.module.dim()));
                rows.push(lam.clone());
            }
            Err(Error::Window(_)) => excluded.push(g.weight_label(lam)),
            Err(e) => return Err(e),
        }
    }
    let mut peeled = BTreeMap::new();
    for mu in &all {
        let r = reflect(wb, mu)?;
        peeled.insert(mu.clone(), peel(wb, &kac_character(g, &r)?)?);
    }
    let mut rhs = Vec::new();
    for lam in &rows {
        let target = reflect(wb, lam)?;
        rhs.push(all.iter().map(|mu| peeled[mu].get(&target).copied().unwrap_or(0)).collect());
    }
    Ok(TiltingReport {
        table: MatrixCheck::new(g, &rows, &all, lhs, rhs),
        excluded,
        dims,
    })
}

/// Connected components of the graph on the window with an edge whenever
/// D links two weights in either direction. Components are sorted by their
/// smallest weight.
pub fn blocks(d: &DecompositionMatrix) -> Vec<Vec<Weight>> {
    let n = d.weights.len();
    components(n, |i, j| d.entries[i][j] != 0 || d.entries[j][i] != 0, &d.weights)
}

/// Same partition built from nonvanishing Ext^1 between Kac modules.
pub fn ext_blocks(wb: &Workbench, win: &Window) -> Result<Vec<Vec<Weight>>> {
    let w = win.list();
    let n = w.len();
    let mut adj = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j && ext1_kac_both(wb, &w[i], &*wb.kac(&w[j])?)? > 0 {
                adj[i][j] = true;
                adj[j][i] = true;
            }
        }
    }
    Ok(components(n, |i, j| adj[i][j], &w))
}

fn components(n: usize, edge: impl Fn(usize, usize) -> bool, w: &[Weight]) -> Vec<Vec<Weight>> {
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut stack = vec![s];
        comp[s] = id;
        let mut members = Vec::new();
        while let Some(i) = stack.pop() {
            members.push(i);
            for j in 0..n {
                if comp[j] == usize::MAX && edge(i, j) {
                    comp[j] = id;
                    stack.push(j);
                }
            }
        }
        members.sort();
        out.push(members.into_iter().map(|i| w[i].clone()).collect());
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct TruncatedDecomposition {
    pub depth: usize,
    /// (mu, multiplicity of L(mu) in M(lambda)) for weights within depth.
    pub factors: Vec<(String, u64)>,
    #[serde(skip)]
    pub weights: Vec<(Weight, u64)>,
}

/// Composition factors of the Verma module M(lambda) for the principal
/// grading, read from form ranks on weights at most `depth` below lambda.
pub fn verma_decomposition_truncated(g: &Arc<LieSuperAlgebra>, lambda: &Weight, depth: usize) -> Result<TruncatedDecomposition> {
    let top = g.weight_height(lambda);
    let floor = &top - int(depth as i64);
    let m = verma_module_truncated(g, lambda, depth)?;
    let dims: BTreeMap<Weight, u64> = m.weight_spaces().into_iter().map(|(w, (e, o))| (w, (e + o) as u64)).collect();
    let mut order: Vec<Weight> = dims.keys().cloned().collect();
    order.sort_by(|a, b| g.weight_height(b).cmp(&g.weight_height(a)).then_with(|| b.cmp(a)));
    let mut simple_dims: Vec<(Weight, u64, BTreeMap<Weight, u64>)> = Vec::new();
    for nu in &order {
        let covered: u64 = simple_dims.iter().map(|(_, k, l)| k * l.get(nu).copied().unwrap_or(0)).sum();
        let k = dims[nu] - covered;
        if k > 0 {
            let d = crate::linalg::rational::as_i64(&(g.weight_height(nu) - &floor)).unwrap_or(0).max(0) as usize;
            let v = verma_module_truncated(g, nu, d)?;
            let form = contravariant_form(&v)?;
            let ranks = v.weight_spaces().keys().map(|w| (w.clone(), form.rank_on(w) as u64)).collect();
            simple_dims.push((nu.clone(), k, ranks));
        }
    }
    let weights: Vec<(Weight, u64)> = simple_dims.into_iter().map(|(w, k, _)| (w, k)).collect();
    Ok(TruncatedDecomposition {
        depth,
        factors: weights.iter().map(|(w, k)| (g.weight_label(w), *k)).collect(),
        weights,
    })
}
