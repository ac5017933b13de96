use proptest::prelude::*;
use std::sync::{Arc, OnceLock};
use tiltbench::characters::{decomposition_matrix, even_character, kac_character, Window};
use tiltbench::cli;
use tiltbench::module::{
    check_complex, dual_module, is_isomorphic, kac_module, simple_module, tau_dual, tensor, IsoOptions, Workbench,
};
use tiltbench::superalgebra::{gl_graded, GradingKind, LieSuperAlgebra, Weight};

fn algebras() -> &'static [Arc<LieSuperAlgebra>] {
    static CELL: OnceLock<Vec<Arc<LieSuperAlgebra>>> = OnceLock::new();
    CELL.get_or_init(|| {
        [(1, 1), (2, 1), (1, 2)]
            .iter()
            .map(|&(m, n)| Arc::new(gl_graded(m, n, GradingKind::Compatible).unwrap()))
            .collect()
    })
}

/// A dominant integral weight: weakly decreasing within each block.
fn dominant(m: usize, n: usize) -> impl Strategy<Value = Weight> {
    (proptest::collection::vec(-2i64..=2, m), proptest::collection::vec(-2i64..=2, n)).prop_map(|(mut a, mut b)| {
        a.sort_by(|x, y| y.cmp(x));
        b.sort_by(|x, y| y.cmp(x));
        a.extend(b);
        Weight::from_ints(&a)
    })
}

fn algebra_and_weight() -> impl Strategy<Value = (usize, Weight)> {
    (0usize..3).prop_flat_map(|k| {
        let (m, n) = [(1, 1), (2, 1), (1, 2)][k];
        dominant(m, n).prop_map(move |w| (k, w))
    })
}

fn algebra_and_two_weights() -> impl Strategy<Value = (usize, Weight, Weight)> {
    (0usize..3).prop_flat_map(|k| {
        let (m, n) = [(1, 1), (2, 1), (1, 2)][k];
        (dominant(m, n), dominant(m, n)).prop_map(move |(a, b)| (k, a, b))
    })
}

fn opts(flip: bool) -> IsoOptions {
    IsoOptions {
        allow_parity_flip: flip,
        ..Default::default()
    }
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 24,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn constructed_modules_satisfy_the_axioms((k, lam) in algebra_and_weight()) {
        let g = &algebras()[k];
        let kac = kac_module(g, &lam).unwrap();
        prop_assert!(kac.check_axioms().is_ok());
        let l = simple_module(g, &lam).unwrap();
        prop_assert!(l.check_axioms().is_ok());
        prop_assert!(dual_module(&kac).unwrap().check_axioms().is_ok());
        prop_assert!(tau_dual(&kac).unwrap().check_axioms().is_ok());
        if k == 0 {
            prop_assert!(tensor(&kac, &l).unwrap().check_axioms().is_ok());
        }
    }

    #[test]
    fn double_duals_are_isomorphic((k, lam) in algebra_and_weight()) {
        let g = &algebras()[k];
        let kac = kac_module(g, &lam).unwrap();
        let dd = dual_module(&dual_module(&kac).unwrap()).unwrap();
        prop_assert!(is_isomorphic(&dd, &kac, &opts(false)).is_found());
        let tt = tau_dual(&tau_dual(&kac).unwrap()).unwrap();
        prop_assert!(is_isomorphic(&tt, &kac, &opts(false)).is_found());
    }

    #[test]
    fn ext_complex_squares_to_zero((k, lam, mu) in algebra_and_two_weights()) {
        let g = &algebras()[k];
        let wb = Workbench::with_defaults(g.clone());
        let m = tau_dual(&kac_module(g, &mu).unwrap()).unwrap();
        prop_assert!(check_complex(&wb, &lam, &m).unwrap());
        let kk = kac_module(g, &mu).unwrap();
        prop_assert!(check_complex(&wb, &lam, &kk).unwrap());
    }

    #[test]
    fn kac_mass_is_exterior_times_even((k, lam) in algebra_and_weight()) {
        let g = &algebras()[k];
        let (m, n) = [(1, 1), (2, 1), (1, 2)][k];
        let ch = kac_character(g, &lam).unwrap();
        prop_assert_eq!(ch.mass(), (1u64 << (m * n)) * even_character(g, &lam).unwrap().mass());
        prop_assert_eq!(&ch, &kac_module(g, &lam).unwrap().character());
    }

    #[test]
    fn decomposition_matrices_are_unitriangular(k in 0usize..3, lo in -2i64..=0, width in 0i64..=2) {
        let g = &algebras()[k];
        let wb = Workbench::with_defaults(g.clone());
        let win = Window::from_box(g, lo, lo + width);
        let d = decomposition_matrix(&wb, &win).unwrap();
        prop_assert!(d.is_unitriangular(g));
    }

    #[test]
    fn outputs_are_reproducible(seed in 0u64..1000, which in prop::sample::select(vec!["bgg", "kdt", "pdual"])) {
        let args = ["tiltbench", "verify", "--which", which, "--box=-1..1", "--seed"];
        let s = seed.to_string();
        let a = cli::run(args.iter().copied().chain([s.as_str()]));
        let b = cli::run(args.iter().copied().chain([s.as_str()]));
        prop_assert_eq!(a.code, 0);
        prop_assert_eq!(a.stdout, b.stdout);
    }
}
