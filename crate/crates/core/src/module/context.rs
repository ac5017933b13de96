//! Shared configuration and memoized modules for window-level pipelines.

use super::explicit::ExplicitModule;
use super::fitting::FittingOptions;
use super::highest::{kac_module, simple_character, simple_even_module};
use super::hom::IsoOptions;
use crate::characters::Character;
use crate::error::Result;
use crate::superalgebra::{LieSuperAlgebra, Weight};
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

#[derive(Clone, Debug)]
pub struct Limits {
    pub max_module_dim: usize,
    pub max_end_dim: usize,
    pub iso_budget: usize,
    pub fitting_attempts: usize,
    pub max_iterations: usize,
    pub flag_budget: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_module_dim: 4096,
            max_end_dim: 512,
            iso_budget: 64,
            fitting_attempts: 24,
            max_iterations: 64,
            flag_budget: 16,
        }
    }
}

type Memo<T> = Mutex<HashMap<Weight, T>>;

pub struct Workbench {
    pub g: Arc<LieSuperAlgebra>,
    pub seed: u64,
    pub limits: Limits,
    kac: Memo<Arc<ExplicitModule>>,
    even: Memo<Arc<ExplicitModule>>,
    chars: Memo<Character>,
}

fn memo<T: Clone>(m: &Memo<T>, w: &Weight, f: impl FnOnce() -> Result<T>) -> Result<T> {
    if let Some(hit) = m.lock().ok().and_then(|c| c.get(w).cloned()) {
        return Ok(hit);
    }
    let v = f()?;
    if let Ok(mut c) = m.lock() {
        c.insert(w.clone(), v.clone());
    }
    Ok(v)
}

impl Workbench {
    pub fn new(g: Arc<LieSuperAlgebra>, seed: u64, limits: Limits) -> Self {
        Workbench {
            g,
            seed,
            limits,
            kac: Mutex::new(HashMap::new()),
            even: Mutex::new(HashMap::new()),
            chars: Mutex::new(HashMap::new()),
        }
    }

    pub fn with_defaults(g: Arc<LieSuperAlgebra>) -> Self {
        Self::new(g, 0, Limits::default())
    }

    pub fn kac(&self, lambda: &Weight) -> Result<Arc<ExplicitModule>> {
        memo(&self.kac, lambda, || kac_module(&self.g, lambda).map(Arc::new))
    }

    pub fn even_simple(&self, lambda: &Weight) -> Result<Arc<ExplicitModule>> {
        memo(&self.even, lambda, || simple_even_module(&self.g, lambda).map(Arc::new))
    }

    pub fn simple_char(&self, lambda: &Weight) -> Result<Character> {
        memo(&self.chars, lambda, || simple_character(&self.g, lambda))
    }

    pub fn iso_options(&self, allow_parity_flip: bool) -> IsoOptions {
        IsoOptions {
            seed: self.seed,
            budget: self.limits.iso_budget,
            allow_parity_flip,
        }
    }

    pub fn fitting_options(&self) -> FittingOptions {
        FittingOptions {
            seed: self.seed,
            attempts: self.limits.fitting_attempts,
            max_end_dim: self.limits.max_end_dim,
        }
    }
}
