use super::*;
use crate::linalg::rational::int;

fn all_gradings() -> Vec<LieSuperAlgebra> {
    let mut out = Vec::new();
    for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        for k in [GradingKind::Principal, GradingKind::Compatible] {
            out.push(gl_graded(m, n, k).unwrap());
        }
    }
    out.push(build_q(2).unwrap());
    out.push(build_q(3).unwrap());
    out
}

#[test]
fn validation_passes_on_standard_algebras() {
    for g in all_gradings() {
        let r = validate_algebra(&g);
        assert!(r.all_passed(), "{:?} {:?}: {:?}", g.kind, g.grading, r.failures().collect::<Vec<_>>());
    }
}

#[test]
fn flipped_sign_breaks_jacobi() {
    let g = gl_graded(2, 1, GradingKind::Compatible).unwrap();
    let (x, y) = (g.find("e(-2,1)").unwrap(), g.find("e(1,-1)").unwrap());
    let flipped = g.bracket_basis(x, y).scale(&int(-1));
    let bad = g.with_bracket_entry(x, y, flipped.clone()).with_bracket_entry(y, x, flipped);
    let r = validate_algebra(&bad);
    let j = r.get("super_jacobi").unwrap();
    assert!(!j.passed);
    assert!(j.witness.as_ref().unwrap().starts_with('('));
    assert!(r.get("super_antisymmetry").unwrap().passed);
}

#[test]
fn ungraded_algebra_reports_missing_grading() {
    let r = validate_algebra(&build_gl(1, 1).unwrap());
    assert!(!r.get("A6_grading_element").unwrap().passed);
    assert!(r.get("super_jacobi").unwrap().passed);
}

#[test]
fn published_semiinfinite_characters() {
    for m in 1..=3 {
        for n in 1..=3 {
            let p = gl_graded(m, n, GradingKind::Principal).unwrap();
            let two_rho = rho(m, n).scale(&int(2));
            let r = verify_semiinfinite(&p, &AlgebraCharacter::from_weight(&p, &two_rho).unwrap()).unwrap();
            assert!(r.passed(), "principal {m}|{n}: {:?}", r.defects);
            let c = gl_graded(m, n, GradingKind::Compatible).unwrap();
            let r = verify_semiinfinite(&c, &AlgebraCharacter::from_weight(&c, &-&beta(m, n)).unwrap()).unwrap();
            assert!(r.passed(), "compatible {m}|{n}: {:?}", r.defects);
            assert_eq!(r.pairs_checked, (m * n) * (m * n));
        }
    }
    for n in 1..=3 {
        let q = build_q(n).unwrap();
        let zero = Weight::zero(n);
        let r = verify_semiinfinite(&q, &AlgebraCharacter::from_weight(&q, &zero).unwrap()).unwrap();
        assert!(r.passed(), "q({n}): {:?}", r.defects);
    }
}

#[test]
fn wrong_characters_fail() {
    let c = gl_graded(1, 1, GradingKind::Principal).unwrap();
    let gamma = AlgebraCharacter::from_weight(&c, &Weight::from_ints(&[1, 0])).unwrap();
    assert!(!verify_semiinfinite(&c, &gamma).unwrap().passed());
    let c = gl_graded(2, 1, GradingKind::Compatible).unwrap();
    let gamma = AlgebraCharacter::from_weight(&c, &Weight::from_ints(&[1, 0, 0])).unwrap();
    let r = verify_semiinfinite(&c, &gamma).unwrap();
    assert!(r.defects.iter().any(|d| d.kind == "commutator"));
    let mut partial = gamma.clone();
    partial.values.remove(&c.torus()[0]);
    assert!(verify_semiinfinite(&c, &partial).is_err());
}

#[test]
fn distinguished_weights() {
    assert_eq!(rho(1, 1), Weight::from_ints(&[1, -1]));
    assert_eq!(rho(2, 3), Weight::from_ints(&[2, 1, -1, -2, -3]));
    assert_eq!(beta(2, 1), Weight::from_ints(&[1, 1, -2]));
    let w = Weight::from_ints(&[5, 7, 9]);
    assert_eq!(w0_action(2, 1, &w), Weight::from_ints(&[7, 5, 9]));
    assert_eq!(w0_action(2, 1, &w0_action(2, 1, &w)), w);
}

#[test]
fn beta_is_sum_of_positive_odd_roots() {
    let g = gl_graded(2, 2, GradingKind::Compatible).unwrap();
    let sum = g
        .positive_odd_root_ids()
        .iter()
        .fold(Weight::zero(4), |acc, i| &acc + g.weight(*i));
    assert_eq!(sum, beta(2, 2));
}

#[test]
fn descriptor_json() {
    let g = gl_graded(2, 1, GradingKind::Compatible).unwrap();
    let s = serde_json::to_string(&g.descriptor()).unwrap();
    assert_eq!(s, r#"{"type":"gl","m":2,"n":1,"grading":"compatible"}"#);
    let back: AlgebraDescriptor = serde_json::from_str(&s).unwrap();
    assert_eq!(back, g.descriptor());
}
