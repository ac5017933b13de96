//! Finite-dimensional Lie superalgebras given by structure constants, with
//! builders for gl(m|n) and q(n).

use super::types::*;
use crate::error::{Error, Result};
use crate::linalg::rational::{self, frac, int, Rational};
use crate::linalg::{SparseMatrix, SparseVec};
use num::{One, Zero};

#[derive(Clone, Debug)]
pub struct LieSuperAlgebra {
    pub kind: AlgebraKind,
    pub grading: GradingKind,
    basis: Vec<BasisElement>,
    bracket: Vec<Vec<SparseVec>>,
    /// Ids of the torus basis, in weight-coordinate order.
    torus: Vec<usize>,
    /// Transpose antiautomorphism, `tau(b_i) = b_{tau[i]}`.
    tau: Vec<usize>,
    /// Matrices in the defining representation, with its parity labels.
    natural: Vec<SparseMatrix>,
    natural_parity: Vec<Parity>,
    /// Diagonal of the grading element D in torus coordinates, once installed.
    grading_element: Option<Vec<Rational>>,
}

impl LieSuperAlgebra {
    /// Assembles an algebra from explicit data. Structure constants are taken
    /// as given; use `validate_algebra` to check them.
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts(
        kind: AlgebraKind,
        grading: GradingKind,
        basis: Vec<BasisElement>,
        bracket: Vec<Vec<SparseVec>>,
        torus: Vec<usize>,
        tau: Vec<usize>,
        natural: Vec<SparseMatrix>,
        natural_parity: Vec<Parity>,
        grading_element: Option<Vec<Rational>>,
    ) -> Self {
        LieSuperAlgebra {
            kind,
            grading,
            basis,
            bracket,
            torus,
            tau,
            natural,
            natural_parity,
            grading_element,
        }
    }

    /// Copy with one structure constant row replaced, for fault injection.
    pub fn with_bracket_entry(&self, i: usize, j: usize, v: SparseVec) -> Self {
        let mut out = self.clone();
        out.bracket[i][j] = v;
        out
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn element(&self, i: usize) -> &BasisElement {
        &self.basis[i]
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.basis[i].parity
    }

    pub fn weight(&self, i: usize) -> &Weight {
        &self.basis[i].weight
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.basis[i].degree
    }

    pub fn height(&self, i: usize) -> i64 {
        self.basis[i].height
    }

    pub fn label(&self, i: usize) -> &str {
        &self.basis[i].label
    }

    pub fn find(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.label == label)
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.bracket[i][j]
    }

    pub fn bracket(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                acc = acc.axpy(&(x * y), &self.bracket[*i][*j]);
            }
        }
        acc
    }

    pub fn torus(&self) -> &[usize] {
        &self.torus
    }

    pub fn rank(&self) -> usize {
        self.torus.len()
    }

    pub fn tau(&self, i: usize) -> usize {
        self.tau[i]
    }

    pub fn natural(&self, i: usize) -> &SparseMatrix {
        &self.natural[i]
    }

    pub fn natural_parity(&self) -> &[Parity] {
        &self.natural_parity
    }

    pub fn grading_element(&self) -> Option<&[Rational]> {
        self.grading_element.as_deref()
    }

    pub fn descriptor(&self) -> AlgebraDescriptor {
        AlgebraDescriptor {
            kind: self.kind,
            grading: self.grading,
        }
    }

    /// Position of the `|` in weight labels.
    pub fn weight_split(&self) -> Option<usize> {
        match self.kind {
            AlgebraKind::Gl { m, .. } => Some(m),
            AlgebraKind::Q { .. } => None,
        }
    }

    pub fn weight_label(&self, w: &Weight) -> String {
        w.label(self.weight_split())
    }

    pub fn ids_of_degree(&self, d: i64) -> Vec<usize> {
        (0..self.dim()).filter(|i| self.basis[*i].degree == d).collect()
    }

    /// Basis of h = g_0.
    pub fn h_ids(&self) -> Vec<usize> {
        self.ids_of_degree(0)
    }

    /// Basis of n = g_{<0}.
    pub fn negative_ids(&self) -> Vec<usize> {
        (0..self.dim()).filter(|i| self.basis[*i].degree < 0).collect()
    }

    pub fn positive_ids(&self) -> Vec<usize> {
        (0..self.dim()).filter(|i| self.basis[*i].degree > 0).collect()
    }

    /// Principal height of a weight: the value of the principal grading
    /// element on it. Lowering operators strictly decrease it.
    pub fn weight_height(&self, w: &Weight) -> Rational {
        let n = self.rank();
        w.coords()
            .iter()
            .enumerate()
            .map(|(p, c)| c * int((n - p) as i64))
            .sum()
    }

    /// Eigenvalue of the installed grading element on a weight.
    pub fn weight_degree(&self, w: &Weight) -> Option<Rational> {
        self.grading_element.as_ref().map(|d| w.dot(d))
    }

    fn require_grading(&self) -> Result<()> {
        if self.grading == GradingKind::Ungraded {
            Err(Error::Precondition("no grading installed".into()))
        } else {
            Ok(())
        }
    }

    pub fn ensure_graded(&self) -> Result<()> {
        self.require_grading()
    }

    /// Dominance for the even reductive part h_0 = gl(m) + gl(n) of the
    /// compatible grading: consecutive differences inside each block are
    /// nonnegative integers.
    pub fn is_dominant(&self, w: &Weight) -> bool {
        match self.kind {
            AlgebraKind::Gl { m, n } => {
                let c = w.coords();
                c.len() == m + n
                    && (0..m.saturating_sub(1)).all(|i| rational::is_nonneg_integer(&(&c[i] - &c[i + 1])))
                    && (m..m + n - 1).all(|i| rational::is_nonneg_integer(&(&c[i] - &c[i + 1])))
            }
            AlgebraKind::Q { n } => w.len() == n,
        }
    }

    pub fn check_dominant(&self, w: &Weight) -> Result<()> {
        if self.is_dominant(w) {
            Ok(())
        } else {
            Err(Error::NotDominant(self.weight_label(w)))
        }
    }

    /// Checks `mu >= lambda`: the difference is a nonnegative integer
    /// combination of positive roots.
    pub fn dominates(&self, mu: &Weight, lambda: &Weight) -> bool {
        let d = mu - lambda;
        let mut partial = Rational::zero();
        for c in d.coords() {
            partial += c;
            if !rational::is_nonneg_integer(&partial) {
                return false;
            }
        }
        partial.is_zero()
    }

    /// Weights of the positive odd roots e(i,j), i < 0 < j, of gl(m|n).
    pub fn positive_odd_root_ids(&self) -> Vec<usize> {
        (0..self.dim())
            .filter(|i| self.basis[*i].parity.is_odd() && self.basis[*i].height > 0)
            .collect()
    }
}

/// Ordered gl index set `-m..-1, 1..n` with the parity convention that
/// negative indices carry odd parity.
fn gl_indices(m: usize, n: usize) -> Vec<i64> {
    (1..=m as i64).rev().map(|i| -i).chain(1..=n as i64).collect()
}

fn gl_index_parity(i: i64) -> Parity {
    Parity::from_odd(i < 0)
}

pub fn gl_label(i: i64, j: i64) -> String {
    format!("e({i},{j})")
}

/// gl(m|n): basis of matrix units with `[e_ij, e_kl] = d_jk e_il -
/// (-1)^{(i+j)(k+l)} d_il e_kj`. No grading is installed.
pub fn build_gl(m: usize, n: usize) -> Result<LieSuperAlgebra> {
    if m == 0 || n == 0 {
        return Err(Error::Precondition(format!("gl({m}|{n}) needs positive ranks")));
    }
    let idx = gl_indices(m, n);
    let r = m + n;
    let id = |p: usize, q: usize| p * r + q;
    let unit_weight = |p: usize, q: usize| {
        let mut w = vec![Rational::zero(); r];
        w[p] += Rational::one();
        w[q] -= Rational::one();
        Weight(w)
    };
    let mut basis = Vec::with_capacity(r * r);
    let mut natural = Vec::with_capacity(r * r);
    for p in 0..r {
        for q in 0..r {
            basis.push(BasisElement {
                id: id(p, q),
                parity: gl_index_parity(idx[p]) + gl_index_parity(idx[q]),
                degree: 0,
                weight: unit_weight(p, q),
                label: gl_label(idx[p], idx[q]),
                height: q as i64 - p as i64,
            });
            natural.push(SparseMatrix::from_triplets(r, r, [(p, q, rational::one())]));
        }
    }
    let mut bracket = vec![vec![SparseVec::new(); r * r]; r * r];
    for (i, j) in (0..r).flat_map(|i| (0..r).map(move |j| (i, j))) {
        for (k, l) in (0..r).flat_map(|k| (0..r).map(move |l| (k, l))) {
            let s = basis[id(i, j)].parity.sign_with(basis[id(k, l)].parity);
            let mut pairs = Vec::new();
            if j == k {
                pairs.push((id(i, l), int(1)));
            }
            if i == l {
                pairs.push((id(k, j), int(-s)));
            }
            bracket[id(i, j)][id(k, l)] = SparseVec::from_pairs(pairs);
        }
    }
    let torus = (0..r).map(|p| id(p, p)).collect();
    let tau = (0..r).flat_map(|p| (0..r).map(move |q| id(q, p))).collect();
    let natural_parity = idx.iter().map(|i| gl_index_parity(*i)).collect();
    Ok(LieSuperAlgebra {
        kind: AlgebraKind::Gl { m, n },
        grading: GradingKind::Ungraded,
        basis,
        bracket,
        torus,
        tau,
        natural,
        natural_parity,
        grading_element: None,
    })
}

/// Superbracket of two homogeneous matrices in a matrix superalgebra.
fn matrix_superbracket(a: &SparseMatrix, pa: Parity, b: &SparseMatrix, pb: Parity) -> SparseMatrix {
    a.mul(b).axpy(&int(-pa.sign_with(pb)), &b.mul(a))
}

/// q(n) as the matrices `[[X, Y], [Y, X]]` inside gl(n|n). Brackets are
/// computed by multiplying the embedded matrices and reading off
/// coordinates. The grading `deg = j - i` is installed.
pub fn build_q(n: usize) -> Result<LieSuperAlgebra> {
    if n == 0 {
        return Err(Error::Precondition("q(n) needs n >= 1".into()));
    }
    let d = 2 * n;
    let even_id = |i: usize, j: usize| i * n + j;
    let odd_id = |i: usize, j: usize| n * n + i * n + j;
    let mut basis = Vec::with_capacity(2 * n * n);
    let mut natural = Vec::with_capacity(2 * n * n);
    for odd in [false, true] {
        for i in 0..n {
            for j in 0..n {
                let mut w = vec![Rational::zero(); n];
                w[i] += Rational::one();
                w[j] -= Rational::one();
                let id = if odd { odd_id(i, j) } else { even_id(i, j) };
                basis.push(BasisElement {
                    id,
                    parity: Parity::from_odd(odd),
                    degree: j as i64 - i as i64,
                    weight: Weight(w),
                    label: if odd {
                        format!("e'({},{})", i + 1, j + 1)
                    } else {
                        format!("e({},{})", i + 1, j + 1)
                    },
                    height: j as i64 - i as i64,
                });
                let one = rational::one();
                let trip = if odd {
                    vec![(i, n + j, one.clone()), (n + i, j, one)]
                } else {
                    vec![(i, j, one.clone()), (n + i, n + j, one)]
                };
                natural.push(SparseMatrix::from_triplets(d, d, trip));
            }
        }
    }
    let dim = basis.len();
    let mut bracket = vec![vec![SparseVec::new(); dim]; dim];
    for a in 0..dim {
        for b in 0..dim {
            let c = matrix_superbracket(&natural[a], basis[a].parity, &natural[b], basis[b].parity);
            let mut pairs = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    let x = c.get(i, j);
                    if !x.is_zero() {
                        pairs.push((even_id(i, j), x));
                    }
                    let y = c.get(i, n + j);
                    if !y.is_zero() {
                        pairs.push((odd_id(i, j), y));
                    }
                }
            }
            bracket[a][b] = SparseVec::from_pairs(pairs);
        }
    }
    let torus = (0..n).map(|i| even_id(i, i)).collect();
    let tau = (0..dim)
        .map(|k| {
            let (odd, r) = (k >= n * n, k % (n * n));
            let (i, j) = (r / n, r % n);
            if odd {
                odd_id(j, i)
            } else {
                even_id(j, i)
            }
        })
        .collect();
    let natural_parity = (0..d).map(|p| Parity::from_odd(p >= n)).collect();
    let grading_element = Some((0..n).map(|i| int(-(i as i64))).collect());
    Ok(LieSuperAlgebra {
        kind: AlgebraKind::Q { n },
        grading: GradingKind::QGrading,
        basis,
        bracket,
        torus,
        tau,
        natural,
        natural_parity,
        grading_element,
    })
}

/// Installs the principal grading (D = diag(m+n, ..., 1)) or the compatible
/// grading (D = diag(1/2, ..., 1/2; -1/2, ..., -1/2)) on gl(m|n).
pub fn install_grading(g: &LieSuperAlgebra, kind: GradingKind) -> Result<LieSuperAlgebra> {
    let AlgebraKind::Gl { m, n } = g.kind else {
        return Err(Error::Precondition("gradings are installed on gl(m|n) only".into()));
    };
    let r = m + n;
    let d: Vec<Rational> = match kind {
        GradingKind::Principal => (0..r).map(|p| int((r - p) as i64)).collect(),
        GradingKind::Compatible => (0..r).map(|p| if p < m { frac(1, 2) } else { frac(-1, 2) }).collect(),
        _ => return Err(Error::Precondition(format!("{kind:?} is not a gl grading"))),
    };
    let mut out = g.clone();
    for b in out.basis.iter_mut() {
        let e = b.weight.dot(&d);
        b.degree = rational::as_i64(&e)
            .ok_or_else(|| Error::Internal(format!("non-integral degree {e} for {}", b.label)))?;
    }
    out.grading = kind;
    out.grading_element = Some(d);
    Ok(out)
}

pub fn gl_graded(m: usize, n: usize, kind: GradingKind) -> Result<LieSuperAlgebra> {
    install_grading(&build_gl(m, n)?, kind)
}

/// Supertrace of `f` over coordinates labelled by `parities`: the trace on
/// the even coordinates minus the trace on the odd ones. Only diagonal
/// entries contribute, so the parity-reversing part drops out.
pub fn supertrace(f: &SparseMatrix, parities: &[Parity]) -> Rational {
    parities
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let x = f.get(i, i);
            if p.is_odd() {
                -x
            } else {
                x
            }
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coords(g: &LieSuperAlgebra, v: &SparseVec) -> Vec<(String, Rational)> {
        v.iter().map(|(i, c)| (g.label(*i).to_string(), c.clone())).collect()
    }

    #[test]
    fn gl11_shape() {
        let g = build_gl(1, 1).unwrap();
        assert_eq!(g.dim(), 4);
        assert_eq!(g.basis().iter().filter(|b| !b.parity.is_odd()).count(), 2);
        assert!(build_gl(0, 2).is_err());
    }

    #[test]
    fn gl11_brackets_by_hand() {
        // [e(-1,1), e(1,-1)] = d_{1,1} e(-1,-1) + d_{-1,-1} e(1,1) (odd-odd sign +)
        let g = build_gl(1, 1).unwrap();
        let (x, y) = (g.find("e(-1,1)").unwrap(), g.find("e(1,-1)").unwrap());
        let mut got = coords(&g, g.bracket_basis(x, y));
        got.sort();
        assert_eq!(got, vec![("e(-1,-1)".into(), int(1)), ("e(1,1)".into(), int(1))]);
        let h = g.find("e(-1,-1)").unwrap();
        assert_eq!(coords(&g, g.bracket_basis(h, x)), vec![("e(-1,1)".into(), int(1))]);
    }

    #[test]
    fn q2_brackets_from_embedding() {
        let g = build_q(2).unwrap();
        let (a, b) = (g.find("e'(1,2)").unwrap(), g.find("e'(2,1)").unwrap());
        let mut got = coords(&g, g.bracket_basis(a, b));
        got.sort();
        assert_eq!(got, vec![("e(1,1)".into(), int(1)), ("e(2,2)".into(), int(1))]);
        assert_eq!(g.degree(a), 1);
        let q1 = build_q(1).unwrap();
        assert_eq!(q1.dim(), 2);
        assert_eq!(q1.h_ids().len(), 2);
    }

    #[test]
    fn q_brackets_match_closed_form() {
        // [e'_ij, e'_kl] = d_jk e_il + d_li e_kj
        let n = 3;
        let g = build_q(n).unwrap();
        for (i, j, k, l) in (0..n * n * n * n).map(|t| (t / 27, t / 9 % 3, t / 3 % 3, t % 3)) {
            let a = g.find(&format!("e'({},{})", i + 1, j + 1)).unwrap();
            let b = g.find(&format!("e'({},{})", k + 1, l + 1)).unwrap();
            let mut want = Vec::new();
            if j == k {
                want.push((i * n + l, int(1)));
            }
            if l == i {
                want.push((k * n + j, int(1)));
            }
            assert_eq!(g.bracket_basis(a, b), &SparseVec::from_pairs(want));
        }
    }

    #[test]
    fn grading_degrees() {
        let c = gl_graded(1, 1, GradingKind::Compatible).unwrap();
        assert_eq!(c.degree(c.find("e(-1,1)").unwrap()), 1);
        assert_eq!(c.degree(c.find("e(1,-1)").unwrap()), -1);
        assert_eq!(c.degree(c.find("e(1,1)").unwrap()), 0);
        let p = gl_graded(1, 1, GradingKind::Principal).unwrap();
        assert_eq!(p.degree(p.find("e(-1,1)").unwrap()), 1);
        let c = gl_graded(2, 2, GradingKind::Compatible).unwrap();
        let even: Vec<usize> = (0..c.dim()).filter(|i| !c.parity(*i).is_odd()).collect();
        assert_eq!(c.h_ids(), even);
    }

    #[test]
    fn supertrace_examples() {
        let g = build_gl(1, 1).unwrap();
        assert_eq!(supertrace(&SparseMatrix::identity(2), g.natural_parity()), int(0));
        let par = [Parity::Even, Parity::Even, Parity::Odd];
        assert_eq!(supertrace(&SparseMatrix::identity(3), &par), int(1));
        let odd = SparseMatrix::from_triplets(3, 3, [(0, 2, int(5)), (2, 1, int(1))]);
        assert_eq!(supertrace(&odd, &par), int(0));
    }
}
