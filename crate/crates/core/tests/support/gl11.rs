//! gl(1|1) structure data shared by the regression and acceptance tests.

use serde_json::{json, Value};
use std::path::PathBuf;
use std::sync::Arc;
use tiltbench::characters::{decomposition_matrix, Window};
use tiltbench::linalg::{Rational, SparseVec};
use tiltbench::module::{kac_module, projective_cover, simple_module, Workbench};
use tiltbench::superalgebra::{gl_graded, GradingKind, LieSuperAlgebra, Weight};

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn g11() -> Arc<LieSuperAlgebra> {
    Arc::new(gl_graded(1, 1, GradingKind::Compatible).unwrap())
}

/// <f v, f v> for the highest weight vector v of K(lambda): the coefficient
/// of v in e f v, with e = e(-1,1) raising and f = e(1,-1) lowering.
fn gram(g: &Arc<LieSuperAlgebra>, lam: &Weight) -> Rational {
    let k = kac_module(g, lam).unwrap();
    let e = g.find("e(-1,1)").unwrap();
    let f = g.find("e(1,-1)").unwrap();
    let top = k.indices_of_weight(lam)[0];
    let fv = k.act(f, &SparseVec::unit(top));
    k.act(e, &fv).get(top)
}

/// Checks every entry against the oracle and returns the JSON summary, or
/// the first disagreement.
pub fn summary() -> Result<String, String> {
    let g = g11();
    let mut rows = Vec::new();
    for a in -3..=3 {
        for b in -3..=3 {
            let lam = Weight::from_ints(&[a, b]);
            let q = gram(&g, &lam);
            if q != Rational::from_integer((a + b).into()) {
                return Err(format!("Gram at ({a}|{b}) is {q}"));
            }
            let irreducible = simple_module(&g, &lam).unwrap().dim() == 2;
            if irreducible != (a + b != 0) {
                return Err(format!("K({a}|{b}) irreducible = {irreducible}"));
            }
            rows.push(json!({"lambda": g.weight_label(&lam), "gram": q.to_string(), "irreducible": irreducible}));
        }
    }
    let wb = Workbench::with_defaults(g.clone());
    let zero = Weight::from_ints(&[0, 0]);
    let alpha = Weight::from_ints(&[-1, 1]);
    let win = Window::from_weights(&g, &[zero.clone(), alpha.clone()]).unwrap();
    let d = decomposition_matrix(&wb, &win).unwrap();
    if d.get(&zero, &zero) != 1 || d.get(&zero, &alpha) != 1 {
        return Err("composition factors of K(0)".into());
    }
    let wide = Window::from_box(&g, -3, 3);
    let p = projective_cover(&wb, &zero, &wide.weights).unwrap();
    if p.module.dim() != 4 || p.flag.factors.len() != 2 {
        return Err(format!("P(0) has dimension {} and flag length {}", p.module.dim(), p.flag.factors.len()));
    }
    let summary: Value = json!({
        "kac": rows,
        "K(0):L(0)": d.get(&zero, &zero),
        "K(0):L(-1,1)": d.get(&zero, &alpha),
        "dim P(0)": p.module.dim(),
        "flag P(0)": p
            .flag
            .factors
            .iter()
            .map(|(w, par)| format!("{}{}", if par.is_odd() { "Pi " } else { "" }, g.weight_label(w)))
            .collect::<Vec<_>>(),
    });
    Ok(serde_json::to_string_pretty(&summary).unwrap() + "\n")
}
