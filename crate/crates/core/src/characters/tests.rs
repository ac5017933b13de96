use super::*;
use crate::linalg::rational::int;
use crate::module::{kac_module, simple_even_module, Workbench};
use crate::superalgebra::{gl_graded, GradingKind, LieSuperAlgebra, Weight};
use std::sync::Arc;

fn gl(m: usize, n: usize) -> Arc<LieSuperAlgebra> {
    Arc::new(gl_graded(m, n, GradingKind::Compatible).unwrap())
}

fn w(v: &[i64]) -> Weight {
    Weight::from_ints(v)
}

fn ints(v: &[i64]) -> Vec<crate::linalg::rational::Rational> {
    v.iter().map(|x| int(*x)).collect()
}

#[test]
fn weyl_characters() {
    assert_eq!(weyl_character(&ints(&[3])).unwrap(), Character::single(w(&[3])));
    let mut nat = Character::single(w(&[1, 0]));
    nat.add_weight(w(&[0, 1]), 1);
    assert_eq!(weyl_character(&ints(&[1, 0])).unwrap(), nat);
    for lam in [[2, 0, 0], [2, 1, 0], [3, 1, -1], [1, 1, 1]] {
        let ch = weyl_character(&ints(&lam)).unwrap();
        assert_eq!(ch.mass(), weyl_dimension(&ints(&lam)).unwrap());
    }
    // S^2 of C^3 and the adjoint of gl(3)
    assert_eq!(weyl_dimension(&ints(&[2, 0, 0])).unwrap(), 6);
    assert_eq!(weyl_dimension(&ints(&[1, 0, -1])).unwrap(), 8);
    assert!(weyl_character(&ints(&[0, 1])).is_err());
}

#[test]
fn weyl_matches_explicit_modules() {
    let g = gl(2, 2);
    for lam in [[1, 0, 0, 0], [2, 0, 1, -1], [0, 0, 2, 0]] {
        let v = simple_even_module(&g, &w(&lam)).unwrap();
        assert_eq!(v.character(), even_character(&g, &w(&lam)).unwrap(), "{lam:?}");
    }
}

#[test]
fn kac_characters() {
    let g = gl(1, 1);
    let mut want = Character::single(w(&[2, 5]));
    want.add_weight(w(&[1, 6]), 1);
    assert_eq!(kac_character(&g, &w(&[2, 5])).unwrap(), want);
    for (m, n, lam) in [(2, 1, vec![1, 0, 0]), (1, 2, vec![0, 1, 0]), (2, 2, vec![1, 0, 0, 0])] {
        let g = gl(m, n);
        let ch = kac_character(&g, &w(&lam)).unwrap();
        assert_eq!(ch, kac_module(&g, &w(&lam)).unwrap().character());
        let v = even_character(&g, &w(&lam)).unwrap().mass();
        assert_eq!(ch.mass(), (1 << (m * n)) * v);
    }
}

#[test]
fn gl11_decomposition() {
    let g = gl(1, 1);
    let wb = Workbench::with_defaults(g.clone());
    let win = Window::from_weights(&g, &[w(&[0, 0]), w(&[-1, 1])]).unwrap();
    let d = decomposition_matrix(&wb, &win).unwrap();
    assert_eq!(d.weights, vec![w(&[-1, 1]), w(&[0, 0])]);
    assert_eq!(d.entries, vec![vec![1, 0], vec![1, 1]]);
    assert!(d.is_unitriangular(&g));
    let c = cartan_matrix_via_bgg(&d);
    assert_eq!(c, vec![vec![2, 1], vec![1, 1]]);
    assert_eq!(blocks(&d).len(), 1);
    let typical = Window::from_weights(&g, &[w(&[1, 0]), w(&[2, 0])]).unwrap();
    let d = decomposition_matrix(&wb, &typical).unwrap();
    assert_eq!(d.entries, vec![vec![1, 0], vec![0, 1]]);
    assert_eq!(cartan_matrix_via_bgg(&d), d.entries);
    assert_eq!(blocks(&d).len(), 2);
    // (1,-1) is a factor of K(2,-2) inside the hull of the list
    let holey = Window::from_weights(&g, &[w(&[2, -2]), w(&[0, 0])]).unwrap();
    assert!(matches!(decomposition_matrix(&wb, &holey), Err(crate::Error::Window(_))));
}

#[test]
fn row_masses() {
    let g = gl(2, 1);
    let wb = Workbench::with_defaults(g.clone());
    let win = Window::from_box(&g, -2, 2);
    let d = decomposition_matrix(&wb, &win).unwrap();
    assert!(d.is_unitriangular(&g));
    for (i, mu) in d.weights.iter().enumerate() {
        let mut total = 0;
        for (j, lam) in d.weights.iter().enumerate() {
            total += d.entries[i][j] * wb.simple_char(lam).unwrap().mass();
        }
        for (k, f, mult) in &d.outside {
            if k == mu {
                total += mult * wb.simple_char(f).unwrap().mass();
            }
        }
        assert_eq!(total, kac_character(&g, mu).unwrap().mass());
    }
}

#[test]
fn bgg_and_tilting_gl11() {
    let g = gl(1, 1);
    let wb = Workbench::with_defaults(g.clone());
    let win = Window::from_box(&g, -2, 2);
    let r = verify_bgg(&wb, &win, &win).unwrap();
    assert!(r.passed(), "{r:?}");
    assert!(!r.excluded.is_empty());
    let wide = win.widened(&g, 1);
    let r = verify_bgg(&wb, &win, &wide).unwrap();
    assert!(r.passed() && r.excluded.is_empty(), "{r:?}");
    assert_eq!(r.composition.rows.len(), win.weights.len());
    let t = tilting_table(&wb, &win, &wide).unwrap();
    assert!(t.excluded.is_empty());
    assert!(t.table.passed(), "{t:?}");
    assert!(!t.table.rows.is_empty());
}

#[test]
fn bgg_and_tilting_gl21() {
    let g = gl(2, 1);
    let wb = Workbench::with_defaults(g.clone());
    let win = Window::from_box(&g, -1, 1);
    let r = verify_bgg(&wb, &win, &win.widened(&g, 1)).unwrap();
    assert!(r.passed(), "{r:?}");
    let t = tilting_table(&wb, &win, &win).unwrap();
    assert!(t.table.passed(), "{t:?}");
}

#[test]
fn blocks_agree() {
    for (m, n, lo, hi) in [(1, 1, -2, 2), (2, 1, -1, 1)] {
        let g = gl(m, n);
        let wb = Workbench::with_defaults(g.clone());
        let win = Window::from_box(&g, lo, hi);
        let d = decomposition_matrix(&wb, &win).unwrap();
        assert_eq!(blocks(&d), ext_blocks(&wb, &win).unwrap(), "gl({m}|{n})");
    }
}

#[test]
fn truncated_verma_decomposition() {
    let p = Arc::new(gl_graded(1, 1, GradingKind::Principal).unwrap());
    let lam = w(&[0, 0]);
    let d0 = verma_decomposition_truncated(&p, &lam, 0).unwrap();
    assert_eq!(d0.weights, vec![(lam.clone(), 1)]);
    let d1 = verma_decomposition_truncated(&p, &lam, 1).unwrap();
    assert_eq!(d1.weights.len(), 2);
    let typ = verma_decomposition_truncated(&p, &w(&[1, 0]), 1).unwrap();
    assert_eq!(typ.weights.len(), 1);
    let p2 = Arc::new(gl_graded(2, 1, GradingKind::Principal).unwrap());
    let mut prev = 0;
    for depth in 0..4 {
        let d = verma_decomposition_truncated(&p2, &w(&[0, 0, 0]), depth).unwrap();
        let total: u64 = d.weights.iter().map(|(_, k)| k).sum();
        assert!(total >= prev);
        prev = total;
    }
}

#[test]
fn orthogonality_small() {
    let g = gl(1, 1);
    let wb = Workbench::with_defaults(g.clone());
    let r = verify_orthogonality(&wb, &Window::from_box(&g, -1, 1)).unwrap();
    assert_eq!(r.pairs_checked, 81);
    assert!(r.passed(), "{r:?}");
}
