//! Ext^1 from Kac modules via the relative cochain complex of the pair
//! (g_0 + g_1, g_0), and the extensions realizing a cocycle.

use super::context::Workbench;
use super::duals::{adjoint_piece, tensor};
use super::explicit::ExplicitModule;
use super::highest::require_compatible;
use super::hom::hom_of_parity;
use super::induce::{induce, Induction};
use super::subspace::quotient;
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, Echelon, SparseMatrix, SparseVec};
use crate::superalgebra::{Parity, Weight};

/// Cochains are even h-maps `g_1 (x) V(lambda) -> M`, stored as
/// (dim M) x (dim g_1 * dim V) matrices with column `i * dim V + j` for
/// `y_i (x) v_j`.
pub struct ExtData {
    pub lambda: Weight,
    pub parity: Parity,
    pub g1: Vec<usize>,
    pub v: ExplicitModule,
    /// Cocycles completing a basis of the coboundaries to one of the
    /// cocycles; their number is dim Ext^1.
    pub classes: Vec<SparseMatrix>,
    pub coboundaries: Vec<SparseMatrix>,
    pub cocycle_dim: usize,
}

impl ExtData {
    pub fn dim(&self) -> usize {
        self.classes.len()
    }
}

fn flat(m: &SparseMatrix) -> SparseVec {
    let n = m.ncols();
    SparseVec::from_pairs(m.triplets().map(|(r, c, v)| (r * n + c, v.clone())))
}

/// `d0 psi (y (x) v) = y psi(v)`.
fn d0(m: &ExplicitModule, g1: &[usize], dv: usize, psi: &SparseMatrix) -> SparseMatrix {
    let mut trip = Vec::new();
    for (i, &y) in g1.iter().enumerate() {
        let img = m.action(y).expect("g-module").mul(psi);
        for (r, c, v) in img.triplets() {
            trip.push((r, i * dv + c, v.clone()));
        }
    }
    SparseMatrix::from_triplets(m.dim(), g1.len() * dv, trip)
}

/// `d1 phi (y_i y_k (x) v) = y_i phi(y_k (x) v) + y_k phi(y_i (x) v)` for
/// i <= k, flattened over (pair, v, row).
pub fn d1(m: &ExplicitModule, g1: &[usize], dv: usize, phi: &SparseMatrix) -> SparseVec {
    let dm = m.dim();
    let cols = |i: usize| -> Vec<usize> { (0..dv).map(|j| i * dv + j).collect() };
    let rows: Vec<usize> = (0..dm).collect();
    let mut out = SparseVec::new();
    let mut pair = 0;
    for i in 0..g1.len() {
        let phi_i = phi.select(&rows, &cols(i));
        for k in i..g1.len() {
            let phi_k = phi.select(&rows, &cols(k));
            let ai = m.action(g1[i]).expect("g-module");
            let ak = m.action(g1[k]).expect("g-module");
            let val = ai.mul(&phi_k).add(&ak.mul(&phi_i));
            let base = pair * dv * dm;
            out = out.add(&SparseVec::from_pairs(
                val.triplets().map(|(r, c, v)| (base + c * dm + r, v.clone())),
            ));
            pair += 1;
        }
    }
    out
}

fn cochains(wb: &Workbench, lambda: &Weight, parity: Parity, m: &ExplicitModule) -> Result<(Vec<usize>, ExplicitModule, Vec<SparseMatrix>, Vec<SparseMatrix>)> {
    require_compatible(&wb.g)?;
    if !m.is_g_module() || m.truncated {
        return Err(Error::Precondition("Ext needs an exact g-module".into()));
    }
    let g = &wb.g;
    let h = g.h_ids();
    let g1 = g.ids_of_degree(1);
    let mut v = (*wb.even_simple(lambda)?).clone();
    if parity.is_odd() {
        v = v.parity_flip();
    }
    let t1 = tensor(&adjoint_piece(g, &g1, &h)?, &v)?;
    let c0 = hom_of_parity(&v, m, Parity::Even).into_iter().map(|f| f.matrix).collect();
    let c1 = hom_of_parity(&t1, m, Parity::Even).into_iter().map(|f| f.matrix).collect();
    Ok((g1, v, c0, c1))
}

/// Ext^1(Pi^p K(lambda), M) with its cocycle data.
pub fn ext1_data(wb: &Workbench, lambda: &Weight, parity: Parity, m: &ExplicitModule) -> Result<ExtData> {
    let (g1, v, c0, c1) = cochains(wb, lambda, parity, m)?;
    let dv = v.dim();
    let coboundaries: Vec<SparseMatrix> = c0.iter().map(|psi| d0(m, &g1, dv, psi)).collect();
    let images: Vec<SparseVec> = c1.iter().map(|phi| d1(m, &g1, dv, phi)).collect();
    let width = images.iter().filter_map(|x| x.max_index()).max().map(|x| x + 1).unwrap_or(0);
    let sys = SparseMatrix::from_cols(width, &images);
    let ker = kernel_basis(&sys);
    let cocycles: Vec<SparseMatrix> = ker
        .iter()
        .map(|k| {
            k.iter()
                .fold(SparseMatrix::zeros(m.dim(), g1.len() * dv), |acc, (i, c)| acc.axpy(c, &c1[*i]))
        })
        .collect();
    let dm = m.dim() * g1.len() * dv;
    let mut span = Echelon::new(dm);
    for b in &coboundaries {
        span.insert(&flat(b));
    }
    let mut classes = Vec::new();
    for z in &cocycles {
        if span.insert(&flat(z)) {
            classes.push(z.clone());
        }
    }
    Ok(ExtData {
        lambda: lambda.clone(),
        parity,
        g1,
        v,
        classes,
        coboundaries,
        cocycle_dim: cocycles.len(),
    })
}

/// dim Ext^1(K(lambda), M).
pub fn ext1_kac(wb: &Workbench, lambda: &Weight, m: &ExplicitModule) -> Result<usize> {
    Ok(ext1_data(wb, lambda, Parity::Even, m)?.dim())
}

/// dim Ext^1(K(lambda), M) + dim Ext^1(Pi K(lambda), M).
pub fn ext1_kac_both(wb: &Workbench, lambda: &Weight, m: &ExplicitModule) -> Result<usize> {
    Ok(ext1_kac(wb, lambda, m)? + ext1_data(wb, lambda, Parity::Odd, m)?.dim())
}

/// Checks `d1 . d0 = 0` on the cochain bases for `(lambda, M)`.
pub fn check_complex(wb: &Workbench, lambda: &Weight, m: &ExplicitModule) -> Result<bool> {
    let (g1, v, c0, _) = cochains(wb, lambda, Parity::Even, m)?;
    Ok(c0.iter().all(|psi| d1(m, &g1, v.dim(), &d0(m, &g1, v.dim(), psi)).is_zero()))
}

/// The extension 0 -> M -> X -> Pi^p K(lambda) -> 0 attached to `phi`.
/// X is induced from the (g_0 + g_1)-module M + V(lambda) twisted by phi,
/// modulo the kernel of U(g) (x) M -> M.
pub fn extension_module(
    wb: &Workbench,
    lambda: &Weight,
    parity: Parity,
    m: &ExplicitModule,
    phi: &SparseMatrix,
) -> Result<ExplicitModule> {
    let (g1, v, _, _) = cochains(wb, lambda, parity, m)?;
    let g = &wb.g;
    let (dm, dv) = (m.dim(), v.dim());
    if phi.nrows() != dm || phi.ncols() != g1.len() * dv {
        return Err(Error::Precondition("cocycle has the wrong shape".into()));
    }
    if !d1(m, &g1, dv, phi).is_zero() {
        return Err(Error::Precondition("not a cocycle".into()));
    }
    let data = ext1_data(wb, lambda, parity, m)?;
    let mut span = Echelon::new(dm * g1.len() * dv);
    for b in &data.coboundaries {
        span.insert(&flat(b));
    }
    if span.contains(&flat(phi)) {
        return Err(Error::TrivialExtension);
    }
    // E = M + V over g_0 + g_1
    let mut actions = vec![None; g.dim()];
    for x in g.h_ids() {
        actions[x] = Some(m.action(x).unwrap().direct_sum(v.action(x).unwrap()));
    }
    for (i, &y) in g1.iter().enumerate() {
        let block: Vec<usize> = (0..dv).map(|j| i * dv + j).collect();
        let rows: Vec<usize> = (0..dm).collect();
        let phi_i = phi.select(&rows, &block);
        let mut a = m.action(y).unwrap().embed(dm + dv, dm + dv, 0, 0);
        a = a.add(&phi_i.embed(dm + dv, dm + dv, 0, dm));
        actions[y] = Some(a);
    }
    let mut weights = m.weights().to_vec();
    weights.extend(v.weights().iter().cloned());
    let mut parities = m.parities().to_vec();
    parities.extend(v.parities().iter().cloned());
    let e = ExplicitModule::new(g.clone(), weights, parities, actions)?;
    if let Err(msg) = e.check_axioms() {
        return Err(Error::Precondition(format!("cocycle does not define a module: {msg}")));
    }
    let ind = induce(&Induction {
        free: g.ids_of_degree(-1),
        sub: &e,
        zero: Vec::new(),
        acting: None,
        min_height: None,
        max_dim: wb.limits.max_module_dim,
    })?;
    // basis of ind is (monomial k, e_j) at index k * (dm + dv) + j
    let de = dm + dv;
    let monos = ind.dim() / de;
    let mono_list = crate::pbw::monomials_above(g, &g.ids_of_degree(-1), None)?;
    debug_assert_eq!(mono_list.len(), monos);
    let mut cols = Vec::new();
    let mut src = Vec::new();
    for (k, mono) in mono_list.iter().enumerate() {
        for j in 0..dm {
            let mut vec = SparseVec::unit(j);
            for &x in mono.word.iter().rev() {
                vec = m.act(x, &vec);
            }
            cols.push(vec);
            src.push(k * de + j);
        }
    }
    let mult = SparseMatrix::from_cols(dm, &cols);
    let mut ker = Echelon::new(ind.dim());
    for kv in kernel_basis(&mult) {
        ker.insert(&kv.remap(|i| Some(src[i])));
    }
    let (mut x, _) = quotient(&ind, &ker.into_rref())?;
    x.highest_weight = None;
    if x.dim() != dm + (1usize << g1.len()) * dv {
        return Err(Error::Internal(format!("extension has dimension {}", x.dim())));
    }
    Ok(x)
}
