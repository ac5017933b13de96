use super::decomp::Window;
use crate::error::Result;
use crate::module::{ext1_kac_both, hom_space, tau_dual, Workbench};
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct OrthogonalityFailure {
    pub lambda: String,
    pub mu: String,
    pub hom_dim: usize,
    pub ext_dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrthogonalityReport {
    pub pairs_checked: usize,
    pub failures: Vec<OrthogonalityFailure>,
}

impl OrthogonalityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// dim Hom(K(lambda), K(mu)^tau) = [lambda = mu] and
/// Ext^1(K(lambda), K(mu)^tau) = 0 (over both parities of K(lambda)).
pub fn verify_orthogonality(wb: &Workbench, win: &Window) -> Result<OrthogonalityReport> {
    let ws = win.list();
    let duals = ws.iter().map(|mu| tau_dual(&*wb.kac(mu)?)).collect::<Result<Vec<_>>>()?;
    let mut failures = Vec::new();
    let mut pairs_checked = 0;
    for lam in &ws {
        let k = wb.kac(lam)?;
        for (mu, d) in ws.iter().zip(&duals) {
            pairs_checked += 1;
            let hom_dim = hom_space(&k, d)?.dim();
            let ext_dim = ext1_kac_both(wb, lam, d)?;
            if hom_dim != (lam == mu) as usize || ext_dim != 0 {
                failures.push(OrthogonalityFailure {
                    lambda: wb.g.weight_label(lam),
                    mu: wb.g.weight_label(mu),
                    hom_dim,
                    ext_dim,
                });
            }
        }
    }
    Ok(OrthogonalityReport { pairs_checked, failures })
}
