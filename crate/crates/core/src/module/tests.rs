use super::*;
use crate::linalg::rational::int;
use crate::superalgebra::{gl_graded, GradingKind, LieSuperAlgebra, Parity, Weight};
use std::sync::Arc;

pub(crate) fn gl(m: usize, n: usize) -> Arc<LieSuperAlgebra> {
    Arc::new(gl_graded(m, n, GradingKind::Compatible).unwrap())
}

/// prod_{i<j} (l_i - l_j + j - i) / (j - i) over one block.
fn weyl_dim_block(l: &[i64]) -> i64 {
    let mut num = 1i64;
    let mut den = 1i64;
    for i in 0..l.len() {
        for j in i + 1..l.len() {
            num *= l[i] - l[j] + (j - i) as i64;
            den *= (j - i) as i64;
        }
    }
    num / den
}

fn w(v: &[i64]) -> Weight {
    Weight::from_ints(v)
}

#[test]
fn even_simple_dimensions_match_weyl() {
    let g = gl(2, 1);
    for (a, b, c) in [(0, 0, 0), (1, 0, 0), (3, 0, 5), (2, -2, 1)] {
        let v = simple_even_module(&g, &w(&[a, b, c])).unwrap();
        assert_eq!(v.dim() as i64, weyl_dim_block(&[a, b]), "({a},{b}|{c})");
        v.check_axioms().unwrap();
    }
    let g = gl(2, 3);
    let lam = [1, -1, 2, 0, 0];
    let v = simple_even_module(&g, &w(&lam)).unwrap();
    assert_eq!(v.dim() as i64, weyl_dim_block(&lam[..2]) * weyl_dim_block(&lam[2..]));
    v.check_axioms().unwrap();
    let g11 = gl(1, 1);
    assert_eq!(simple_even_module(&g11, &w(&[3, -7])).unwrap().dim(), 1);
    assert!(simple_even_module(&g, &w(&[0, 1, 0, 0, 0])).is_err());
}

#[test]
fn kac_dimensions_and_axioms() {
    for (m, n, lam) in [(1, 1, vec![2, 5]), (2, 1, vec![0, 0, 0]), (2, 1, vec![1, 0, -1]), (1, 2, vec![0, 1, -1])] {
        let g = gl(m, n);
        let k = kac_module(&g, &w(&lam)).unwrap();
        let v = simple_even_module(&g, &w(&lam)).unwrap();
        assert_eq!(k.dim(), (1 << (m * n)) * v.dim());
        k.check_axioms().unwrap();
    }
}

#[test]
fn gl11_gram_oracle() {
    // <f v, f v> = <v, [e, f] v> = l_{-1} + l_1
    let g = gl(1, 1);
    for (a, b) in [(1, 0), (2, -2), (0, 0), (-3, 1)] {
        let k = kac_module(&g, &w(&[a, b])).unwrap();
        let form = contravariant_form(&k).unwrap();
        let low = w(&[a - 1, b + 1]);
        let gram = form.gram(&low).unwrap();
        assert_eq!(gram.get(0, 0), int(a + b));
        assert_eq!(form.gram(&w(&[a, b])).unwrap().get(0, 0), int(1));
        check_contravariance(&k, &form).unwrap();
        let l = simple_module(&g, &w(&[a, b])).unwrap();
        assert_eq!(l.dim(), if a + b == 0 { 1 } else { 2 });
        l.check_axioms().unwrap();
    }
}

#[test]
fn gl21_forms_are_contravariant() {
    let g = gl(2, 1);
    for lam in [[0, 0, 0], [1, 0, 0], [1, 0, -1], [0, -1, 1]] {
        let k = kac_module(&g, &w(&lam)).unwrap();
        let form = contravariant_form(&k).unwrap();
        check_contravariance(&k, &form).unwrap();
        let l = simple_quotient(&k).unwrap();
        l.check_axioms().unwrap();
        assert_eq!(simple_character(&g, &w(&lam)).unwrap(), l.character());
    }
    // L(0) is the trivial module
    assert_eq!(simple_module(&g, &w(&[0, 0, 0])).unwrap().dim(), 1);
}

#[test]
fn truncated_vermas() {
    let p = Arc::new(gl_graded(1, 1, GradingKind::Principal).unwrap());
    assert_eq!(verma_module_truncated(&p, &w(&[1, 1]), 0).unwrap().dim(), 1);
    let m = verma_module_truncated(&p, &w(&[1, 1]), 3).unwrap();
    assert_eq!(m.dim(), 2);
    assert!(m.truncated);
    let p = Arc::new(gl_graded(2, 1, GradingKind::Principal).unwrap());
    let lam = w(&[0, 0, 0]);
    let m = verma_module_truncated(&p, &lam, 3).unwrap();
    for i in 0..m.dim() {
        let d = &lam - m.weight(i);
        // lambda minus a sum of positive roots
        assert!(p.dominates(&lam, m.weight(i)), "{}", p.weight_label(&d));
    }
    let form = contravariant_form(&m).unwrap();
    assert!(form.total_rank() <= m.dim());
}

#[test]
fn induced_projective_size() {
    let g = gl(1, 1);
    let q = induced_projective(&g, &w(&[0, 0]), 64).unwrap();
    assert_eq!(q.dim(), 4);
    q.check_axioms().unwrap();
    let g = gl(2, 1);
    let q = induced_projective(&g, &w(&[1, 0, 0]), 1024).unwrap();
    assert_eq!(q.dim(), 16 * 2);
    q.check_axioms().unwrap();
    assert!(matches!(induced_projective(&g, &w(&[1, 0, 0]), 8), Err(crate::Error::Resource(_))));
}

fn iso(a: &ExplicitModule, b: &ExplicitModule, flip: bool) -> IsoOutcome {
    is_isomorphic(a, b, &IsoOptions { seed: 7, budget: 64, allow_parity_flip: flip })
}

#[test]
fn duals_are_modules_and_involutive() {
    let g = gl(2, 1);
    for lam in [[0, 0, 0], [1, 0, 2], [2, 1, -1]] {
        let k = kac_module(&g, &w(&lam)).unwrap();
        let d = dual_module(&k).unwrap();
        d.check_axioms().unwrap();
        assert_eq!(d.character(), k.character().negated());
        let dd = dual_module(&d).unwrap();
        assert!(iso(&dd, &k, false).is_found());
        let t = tau_dual(&k).unwrap();
        t.check_axioms().unwrap();
        assert_eq!(t.character(), k.character());
        assert!(iso(&tau_dual(&t).unwrap(), &k, false).is_found());
    }
    let p = Arc::new(gl_graded(1, 1, GradingKind::Principal).unwrap());
    let v = verma_module_truncated(&p, &w(&[0, 0]), 2).unwrap();
    assert!(matches!(dual_module(&v), Err(crate::Error::Unsupported(_))));
}

#[test]
fn hom_orthogonality_small() {
    let g = gl(1, 1);
    let weights: Vec<Weight> = [[0, 0], [1, -1], [1, 0], [-1, 1]].iter().map(|x| w(x)).collect();
    for a in &weights {
        let ka = kac_module(&g, a).unwrap();
        for b in &weights {
            let nb = tau_dual(&kac_module(&g, b).unwrap()).unwrap();
            let h = hom_space(&ka, &nb).unwrap();
            assert_eq!(h.dim(), (a == b) as usize, "{a:?} {b:?}");
            for f in h.even.iter().chain(&h.odd) {
                assert!(is_morphism(&ka, &nb, f));
            }
        }
    }
    let l = simple_module(&g, &w(&[0, 0])).unwrap();
    let h = hom_space(&l, &l).unwrap();
    assert_eq!((h.even.len(), h.odd.len()), (1, 0));
}

#[test]
fn iso_search_outcomes() {
    let g = gl(1, 1);
    let k = kac_module(&g, &w(&[1, 0])).unwrap();
    assert!(iso(&k, &k, false).is_found());
    let other = kac_module(&g, &w(&[2, 0])).unwrap();
    assert!(matches!(iso(&k, &other, false), IsoOutcome::Absent { .. }));
    let none = is_isomorphic(&k, &k, &IsoOptions { seed: 0, budget: 0, allow_parity_flip: false });
    assert!(matches!(none, IsoOutcome::NotFound { .. }));
    // K(beta - w0 lambda)* is K(lambda) with the opposite parity
    for (a, b) in [(0, 0), (1, 0), (2, -2), (-1, 3)] {
        let lam = w(&[a, b]);
        let mu = &crate::superalgebra::beta(1, 1) - &lam;
        let d = dual_module(&kac_module(&g, &mu).unwrap()).unwrap();
        let kl = kac_module(&g, &lam).unwrap();
        match iso(&d, &kl, true) {
            IsoOutcome::Found { parity_flipped, .. } => assert!(parity_flipped),
            other => panic!("{other:?}"),
        }
    }
}

#[test]
fn fitting_on_small_modules() {
    let g = gl(1, 1);
    let opts = FittingOptions::default();
    let k = kac_module(&g, &w(&[0, 0])).unwrap();
    assert_eq!(fitting_decompose(&k, &opts).unwrap().len(), 1);
    let kk = k.direct_sum(&k).unwrap();
    let parts = fitting_decompose(&kk, &opts).unwrap();
    assert_eq!(parts.len(), 2);
    for p in &parts {
        assert!(iso(p, &k, false).is_found());
        p.check_axioms().unwrap();
    }
    let q = induced_projective(&g, &w(&[0, 0]), 64).unwrap();
    let parts = fitting_summands(&q, &opts).unwrap();
    let dims: usize = parts.iter().map(|p| p.module.dim()).sum();
    assert_eq!(dims, 4);
    for p in &parts {
        assert!(is_indecomposable(&p.module, &opts).unwrap());
    }
    // typical: the induced module is K(lambda) plus a shifted copy
    let q = induced_projective(&g, &w(&[1, 0]), 64).unwrap();
    assert_eq!(fitting_decompose(&q, &opts).unwrap().len(), 2);
}

fn wb(g: &Arc<LieSuperAlgebra>) -> Workbench {
    Workbench::with_defaults(g.clone())
}

#[test]
fn kac_flags() {
    let g = gl(2, 1);
    let b = wb(&g);
    let k = kac_module(&g, &w(&[1, 0, 0])).unwrap();
    let f = delta_flag(&b, &k).unwrap();
    assert_eq!(f.flag().unwrap().weights(), vec![w(&[1, 0, 0])]);
    let g11 = gl(1, 1);
    let b11 = wb(&g11);
    let l = simple_module(&g11, &w(&[0, 0])).unwrap();
    assert!(matches!(delta_flag(&b11, &l).unwrap(), FlagOutcome::Absent { .. }));
    let sum = kac_module(&g11, &w(&[0, 0])).unwrap().direct_sum(&kac_module(&g11, &w(&[2, 1])).unwrap()).unwrap();
    let f = delta_flag(&b11, &sum).unwrap();
    let mut got = f.flag().unwrap().weights();
    got.sort();
    assert_eq!(got, vec![w(&[0, 0]), w(&[2, 1])]);
}

#[test]
fn ext_complex_and_vanishing() {
    let g = gl(1, 1);
    let b = wb(&g);
    for lam in [[0, 0], [1, -1], [1, 0]] {
        for mu in [[0, 0], [1, -1], [-1, 1], [1, 0], [0, 1]] {
            let k = kac_module(&g, &w(&mu)).unwrap();
            assert!(check_complex(&b, &w(&lam), &k).unwrap());
            let t = tau_dual(&k).unwrap();
            assert_eq!(ext1_kac_both(&b, &w(&lam), &t).unwrap(), 0, "{lam:?} {mu:?}");
        }
    }
    // typical lambda: no self-extensions
    let k = kac_module(&g, &w(&[1, 0])).unwrap();
    assert_eq!(ext1_kac_both(&b, &w(&[1, 0]), &k).unwrap(), 0);
    // atypical: Pi K(-1,1) extends K(0); the even-parity Ext vanishes
    let k0 = kac_module(&g, &w(&[0, 0])).unwrap();
    assert_eq!(ext1_kac(&b, &w(&[-1, 1]), &k0).unwrap(), 0);
    let data = ext1_data(&b, &w(&[-1, 1]), Parity::Odd, &k0).unwrap();
    assert_eq!(data.dim(), 1);
    let x = extension_module(&b, &w(&[-1, 1]), Parity::Odd, &k0, &data.classes[0]).unwrap();
    assert_eq!(x.dim(), 4);
    x.check_axioms().unwrap();
    assert!(is_indecomposable(&x, &FittingOptions::default()).unwrap());
    let zero = crate::linalg::SparseMatrix::zeros(data.classes[0].nrows(), data.classes[0].ncols());
    assert!(matches!(
        extension_module(&b, &w(&[-1, 1]), Parity::Odd, &k0, &zero),
        Err(crate::Error::TrivialExtension)
    ));
}

fn box_window(g: &Arc<LieSuperAlgebra>, lo: i64, hi: i64) -> WeightSet {
    let r = g.rank();
    let mut out = WeightSet::new();
    let mut cur = vec![lo; r];
    loop {
        let wt = w(&cur);
        if g.is_dominant(&wt) {
            out.insert(wt);
        }
        let mut k = 0;
        while k < r && cur[k] == hi {
            cur[k] = lo;
            k += 1;
        }
        if k == r {
            return out;
        }
        cur[k] += 1;
    }
}

#[test]
fn tilting_and_projectives_gl11() {
    let g = gl(1, 1);
    let b = wb(&g);
    let win = box_window(&g, -3, 3);
    let t = tilting_module(&b, &w(&[0, 0]), &win).unwrap();
    assert_eq!(t.module.dim(), 4);
    assert_eq!(t.flag.factors.len(), 2);
    assert_eq!(t.flag.factors[0].0, w(&[0, 0]));
    t.module.check_axioms().unwrap();
    let p = projective_cover(&b, &w(&[0, 0]), &win).unwrap();
    assert_eq!(p.module.dim(), 4);
    assert_eq!(p.flag.factors.len(), 2);
    let typ = w(&[1, 0]);
    assert_eq!(tilting_module(&b, &typ, &win).unwrap().module.dim(), 2);
    assert_eq!(projective_cover(&b, &typ, &win).unwrap().module.dim(), 2);
    for lam in [[0, 0], [1, -1], [1, 0], [2, -1]] {
        assert!(verify_kdual(&b, &w(&lam)).unwrap().holds, "{lam:?}");
        assert!(verify_pdual(&b, &w(&lam), &win).unwrap().holds, "{lam:?}");
    }
    let small = box_window(&g, 0, 0);
    assert!(matches!(tilting_module(&b, &w(&[0, 0]), &small), Err(crate::Error::Window(_))));
}

#[test]
fn tilting_and_projectives_gl21() {
    let g = gl(2, 1);
    let b = wb(&g);
    let win = box_window(&g, -3, 3);
    for lam in [[0, 0, 0], [1, 0, 0], [1, 0, -1], [2, 0, -1]] {
        let t = tilting_module(&b, &w(&lam), &win).unwrap();
        let p = projective_cover(&b, &w(&lam), &win).unwrap();
        assert_eq!(p.flag.factors.last(), Some(&(w(&lam), Parity::Even)));
        assert_eq!(t.flag.factors[0], (w(&lam), Parity::Even));
        assert!(verify_pdual(&b, &w(&lam), &win).unwrap().holds, "{lam:?}");
    }
}

fn q(n: usize) -> Arc<LieSuperAlgebra> {
    Arc::new(crate::superalgebra::build_q(n).unwrap())
}

#[test]
fn clifford_modules() {
    let g1 = q(1);
    let (u, d) = clifford_module(&g1, &w(&[0])).unwrap();
    assert_eq!((u.dim(), d), (1, 1));
    for a in [1, 2, -3] {
        let (u, d) = clifford_module(&g1, &w(&[a])).unwrap();
        u.check_axioms().unwrap();
        assert_eq!((u.dim(), d), (2, 2));
        let p = projective_cover_h(&u).unwrap();
        assert_eq!(p.dim(), 2);
    }
    let p0 = projective_cover_h(&clifford_module(&g1, &w(&[0])).unwrap().0).unwrap();
    assert_eq!(p0.dim(), 2);
    p0.check_axioms().unwrap();
    assert!(is_indecomposable(&p0, &FittingOptions::default()).unwrap());

    let g2 = q(2);
    // -ab a square: the Clifford algebra splits over Q
    let (u, d) = clifford_module(&g2, &w(&[1, -1])).unwrap();
    u.check_axioms().unwrap();
    assert_eq!((u.dim(), d), (2, 1));
    let (u, d) = clifford_module(&g2, &w(&[2, -8])).unwrap();
    assert_eq!((u.dim(), d), (2, 1));
    // -ab not a square: a quaternion algebra over Q
    let (u, d) = clifford_module(&g2, &w(&[1, 1])).unwrap();
    u.check_axioms().unwrap();
    assert_eq!((u.dim(), d), (4, 4));
    let (u, d) = clifford_module(&g2, &w(&[1, 0])).unwrap();
    assert_eq!((u.dim(), d), (2, 2));
}

#[test]
fn gl_h_is_even() {
    let g = gl(2, 1);
    let e = simple_even_module(&g, &w(&[1, 0, 0])).unwrap();
    assert_eq!(projective_cover_h(&e).unwrap().dim(), e.dim());
}

#[test]
fn dual_clifford_covers() {
    for (n, lams) in [(1, vec![vec![0], vec![2]]), (2, vec![vec![0, 0], vec![1, -1], vec![1, 1], vec![0, 3]])] {
        let g = q(n);
        for l in lams {
            assert!(check_dual_cover(&g, &w(&l)).unwrap(), "{n} {l:?}");
        }
    }
}

#[test]
fn kac_duality_parity_is_mn() {
    for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        let g = gl(m, n);
        let b = wb(&g);
        let r = verify_kdual(&b, &w(&vec![0; m + n])).unwrap();
        assert!(r.holds);
        assert_eq!(r.iso.parity_flipped, Some(m * n % 2 == 1), "gl({m}|{n})");
    }
}
