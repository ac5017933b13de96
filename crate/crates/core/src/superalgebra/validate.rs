//! Structural checks on a graded Lie superalgebra.

use super::algebra::LieSuperAlgebra;
use crate::linalg::rational::{int, Rational};
use crate::linalg::{rank, Echelon, SparseMatrix, SparseVec};
use serde::Serialize;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct AxiomCheck {
    pub name: String,
    pub passed: bool,
    /// Labels of a failing basis tuple, with a short description.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub checks: Vec<AxiomCheck>,
}

impl ValidationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn push(&mut self, name: &str, witness: Option<String>) {
        self.checks.push(AxiomCheck {
            name: name.to_string(),
            passed: witness.is_none(),
            witness,
        });
    }
}

fn find_first<I, F>(it: I, f: F) -> Option<String>
where
    I: IntoIterator,
    F: FnMut(I::Item) -> Option<String>,
{
    it.into_iter().find_map(f)
}

fn antisymmetry(g: &LieSuperAlgebra) -> Option<String> {
    let d = g.dim();
    find_first((0..d).flat_map(|i| (i..d).map(move |j| (i, j))), |(i, j)| {
        let s = int(g.parity(i).sign_with(g.parity(j)));
        let sum = g.bracket_basis(i, j).axpy(&s, g.bracket_basis(j, i));
        (!sum.is_zero()).then(|| format!("[{}, {}]", g.label(i), g.label(j)))
    })
}

/// `[x,[y,z]] = [[x,y],z] + (-1)^{|x||y|}[y,[x,z]]` on all basis triples.
pub fn jacobi_defect(g: &LieSuperAlgebra) -> Option<(usize, usize, usize)> {
    let d = g.dim();
    for x in 0..d {
        for y in 0..d {
            let xy = g.bracket_basis(x, y);
            let s = int(g.parity(x).sign_with(g.parity(y)));
            for z in 0..d {
                let lhs = g.bracket(&SparseVec::unit(x), g.bracket_basis(y, z));
                let a = g.bracket(xy, &SparseVec::unit(z));
                let b = g.bracket(&SparseVec::unit(y), g.bracket_basis(x, z));
                if lhs != a.axpy(&s, &b) {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

fn additivity(g: &LieSuperAlgebra) -> Option<String> {
    let d = g.dim();
    find_first((0..d).flat_map(|i| (0..d).map(move |j| (i, j))), |(i, j)| {
        let w = g.weight(i) + g.weight(j);
        let deg = g.degree(i) + g.degree(j);
        let par = g.parity(i) + g.parity(j);
        g.bracket_basis(i, j).iter().find_map(|(k, _)| {
            (g.weight(*k) != &w || g.degree(*k) != deg || g.parity(*k) != par).then(|| {
                format!("[{}, {}] has component {}", g.label(i), g.label(j), g.label(*k))
            })
        })
    })
}

fn torus_diagonal(g: &LieSuperAlgebra) -> Option<String> {
    find_first(g.torus().iter().enumerate(), |(k, &t)| {
        if g.parity(t).is_odd() {
            return Some(format!("torus element {} is odd", g.label(t)));
        }
        (0..g.dim()).find_map(|i| {
            let want = SparseVec::unit(i).scale(&g.weight(i).coords()[k]);
            (g.bracket_basis(t, i) != &want).then(|| format!("[{}, {}]", g.label(t), g.label(i)))
        })
    })
}

/// h_0 is reductive when the trace form of the defining representation,
/// restricted to h_0, is nondegenerate (that representation is faithful).
fn reductive_even_h(g: &LieSuperAlgebra) -> Option<String> {
    let ids: Vec<usize> = g.h_ids().into_iter().filter(|i| !g.parity(*i).is_odd()).collect();
    let k = ids.len();
    let mut gram = Vec::with_capacity(k);
    for &a in &ids {
        let row: Vec<Rational> = ids.iter().map(|&b| g.natural(a).mul(g.natural(b)).trace()).collect();
        gram.push(row);
    }
    let r = rank(&SparseMatrix::from_dense(&gram));
    (r < k).then(|| format!("trace form on even part of h has rank {r} < {k}"))
}

/// Iterated brackets of g_{-1}, g_0, g_1 span g.
fn generation(g: &LieSuperAlgebra) -> Option<String> {
    let gens: Vec<usize> = (0..g.dim()).filter(|i| g.degree(*i).abs() <= 1).collect();
    let mut span = Echelon::new(g.dim());
    let mut queue: Vec<SparseVec> = Vec::new();
    for &x in &gens {
        let v = SparseVec::unit(x);
        if span.insert(&v) {
            queue.push(v);
        }
    }
    while let Some(v) = queue.pop() {
        for &x in &gens {
            let w = g.bracket(&SparseVec::unit(x), &v);
            if !w.is_zero() && span.insert(&w) {
                queue.push(w);
            }
        }
    }
    (span.rank() < g.dim()).then(|| format!("generated subalgebra has dimension {} < {}", span.rank(), g.dim()))
}

fn grading_element(g: &LieSuperAlgebra) -> Option<String> {
    let Some(d) = g.grading_element() else {
        return Some("no grading element recorded".into());
    };
    let dv = SparseVec::from_pairs(g.torus().iter().zip(d).map(|(t, c)| (*t, c.clone())));
    (0..g.dim()).find_map(|i| {
        let want = SparseVec::unit(i).scale(&int(g.degree(i)));
        (g.bracket(&dv, &SparseVec::unit(i)) != want).then(|| format!("[D, {}]", g.label(i)))
    })
}

/// `tau([x,y]) = [tau y, tau x]`, `tau` an involution swapping g_d and g_{-d}.
fn transpose_anti(g: &LieSuperAlgebra) -> Option<String> {
    let d = g.dim();
    let tau_vec = |v: &SparseVec| v.remap(|i| Some(g.tau(i)));
    if let Some(i) = (0..d).find(|&i| g.tau(g.tau(i)) != i || g.degree(g.tau(i)) != -g.degree(i)) {
        return Some(format!("tau fails on {}", g.label(i)));
    }
    find_first((0..d).flat_map(|i| (0..d).map(move |j| (i, j))), |(i, j)| {
        let lhs = tau_vec(g.bracket_basis(i, j));
        (lhs != *g.bracket_basis(g.tau(j), g.tau(i))).then(|| format!("tau[{}, {}]", g.label(i), g.label(j)))
    })
}

/// Runs every structural check. Each failing check carries a witness.
pub fn validate_algebra(g: &LieSuperAlgebra) -> ValidationReport {
    let mut r = ValidationReport::default();
    r.push("super_antisymmetry", antisymmetry(g));
    r.push(
        "super_jacobi",
        jacobi_defect(g).map(|(x, y, z)| format!("({}, {}, {})", g.label(x), g.label(y), g.label(z))),
    );
    r.push("grading_additivity", additivity(g));
    r.push("A1_finite_pieces", None);
    r.push("A2_reductive_even_h", reductive_even_h(g));
    r.push("A3_torus_diagonal", torus_diagonal(g));
    let graded = g.ensure_graded().err().map(|e| e.to_string());
    r.push("A4_generation", graded.clone().or_else(|| generation(g)));
    r.push("A6_grading_element", graded.or_else(|| grading_element(g)));
    r.push("transpose_antiautomorphism", transpose_anti(g));
    let integral = (0..g.dim())
        .find(|&i| !g.weight(i).coords().iter().all(|c| c.is_integer()))
        .map(|i| format!("weight of {} not integral", g.label(i)));
    r.push("root_lattice", integral);
    r
}
