//! Kac flags: filtrations with Kac module subquotients.

use super::context::Workbench;
use super::explicit::ExplicitModule;
use super::hom::IsoOutcome;
use super::subspace::{generate, quotient, submodule};
use super::is_isomorphic;
use crate::error::Result;
use crate::linalg::rational::int;
use crate::linalg::SparseVec;
use crate::superalgebra::{Parity, Weight};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Highest weights of the subquotients, bottom first, with the parity of
/// each highest weight vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KacFlag {
    pub factors: Vec<(Weight, Parity)>,
}

impl KacFlag {
    pub fn weights(&self) -> Vec<Weight> {
        self.factors.iter().map(|f| f.0.clone()).collect()
    }

    pub fn top(&self) -> Option<&Weight> {
        self.factors.last().map(|f| &f.0)
    }

    pub fn bottom(&self) -> Option<&Weight> {
        self.factors.first().map(|f| &f.0)
    }

    pub fn multiplicity(&self, w: &Weight) -> usize {
        self.factors.iter().filter(|f| &f.0 == w).count()
    }
}

#[derive(Clone, Debug)]
pub enum FlagOutcome {
    Flag(KacFlag),
    Absent { certificate: String },
}

impl FlagOutcome {
    pub fn flag(&self) -> Option<&KacFlag> {
        match self {
            FlagOutcome::Flag(f) => Some(f),
            FlagOutcome::Absent { .. } => None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FlagJson {
    pub factors: Vec<String>,
}

fn pick_top(m: &ExplicitModule) -> Option<Weight> {
    m.top_weights().pop()
}

/// Peels Kac submodules generated at a weight of maximal height: at each
/// step a vector there must generate a copy of K(weight) (possibly parity
/// shifted), which is then factored out.
pub fn delta_flag(wb: &Workbench, m: &ExplicitModule) -> Result<FlagOutcome> {
    let (mm, nn) = super::highest::require_compatible(&wb.g)?;
    let block = 1usize << (mm * nn);
    let mut rng = ChaCha8Rng::seed_from_u64(wb.seed ^ 0xf1a9);
    let mut cur = m.clone();
    let mut factors = Vec::new();
    while cur.dim() > 0 {
        if !cur.dim().is_multiple_of(block) {
            return Ok(FlagOutcome::Absent {
                certificate: format!("dimension {} is not a multiple of {block}", cur.dim()),
            });
        }
        let nu = pick_top(&cur).expect("nonzero module has a weight");
        if !wb.g.is_dominant(&nu) {
            return Ok(FlagOutcome::Absent {
                certificate: format!("top weight {} is not dominant", wb.g.weight_label(&nu)),
            });
        }
        let k = wb.kac(&nu)?;
        let mut found = None;
        let blocks: Vec<(Parity, Vec<usize>)> = cur
            .blocks()
            .into_iter()
            .filter(|((w, _), _)| w == &nu)
            .map(|((_, p), v)| (p, v))
            .collect();
        let mut tries = 0;
        let mut undecided = None;
        'search: for (p, idx) in &blocks {
            let mut cands: Vec<SparseVec> = idx.iter().map(|i| SparseVec::unit(*i)).collect();
            for _ in 0..wb.limits.flag_budget {
                cands.push(SparseVec::from_pairs(idx.iter().map(|i| (*i, int(rng.gen_range(-4..=4))))));
            }
            for v in cands {
                if v.is_zero() {
                    continue;
                }
                tries += 1;
                let span = generate(&cur, &[v]);
                if span.rank() != k.dim() {
                    continue;
                }
                let rref = span.into_rref();
                let (s, _) = submodule(&cur, &rref)?;
                match is_isomorphic(&s, &k, &wb.iso_options(true)) {
                    IsoOutcome::Found { parity_flipped, .. } => {
                        let parity = if parity_flipped { Parity::Odd } else { Parity::Even };
                        debug_assert_eq!(parity, *p);
                        found = Some((rref, parity));
                        break 'search;
                    }
                    IsoOutcome::NotFound { reason } => undecided = Some(reason),
                    IsoOutcome::Absent { .. } => {}
                }
            }
        }
        let Some((rref, parity)) = found else {
            if let Some(reason) = undecided {
                return Err(crate::Error::Resource(format!("Kac flag at {}: {reason}", wb.g.weight_label(&nu))));
            }
            return Ok(FlagOutcome::Absent {
                certificate: format!(
                    "no vector of weight {} generates a Kac module ({} candidates)",
                    wb.g.weight_label(&nu),
                    tries
                ),
            });
        };
        factors.push((nu, parity));
        cur = quotient(&cur, &rref)?.0;
    }
    Ok(FlagOutcome::Flag(KacFlag { factors }))
}
