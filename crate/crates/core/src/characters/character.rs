use crate::superalgebra::{LieSuperAlgebra, Weight};
use serde::Serialize;
use std::collections::BTreeMap;

/// Finitely supported weight multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash, PartialOrd, Ord)]
pub struct Character {
    pub terms: BTreeMap<Weight, u64>,
}

impl Character {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(w: Weight) -> Self {
        let mut c = Self::new();
        c.add_weight(w, 1);
        c
    }

    pub fn add_weight(&mut self, w: Weight, k: u64) {
        if k > 0 {
            *self.terms.entry(w).or_insert(0) += k;
        }
    }

    pub fn add(&mut self, other: &Character, k: u64) {
        for (w, c) in &other.terms {
            self.add_weight(w.clone(), c * k);
        }
    }

    /// `self - k*other`, or `None` if some multiplicity would go negative.
    pub fn checked_sub(&self, other: &Character, k: u64) -> Option<Character> {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            let slot = out.terms.get_mut(w)?;
            *slot = slot.checked_sub(c * k)?;
            if *slot == 0 {
                out.terms.remove(w);
            }
        }
        Some(out)
    }

    pub fn get(&self, w: &Weight) -> u64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn mass(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = &Weight> {
        self.terms.keys()
    }

    /// Product of characters (weights add).
    pub fn mul(&self, other: &Character) -> Character {
        let mut out = Character::new();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_weight(a + b, x * y);
            }
        }
        out
    }

    pub fn negated(&self) -> Character {
        Character {
            terms: self.terms.iter().map(|(w, c)| (-w, *c)).collect(),
        }
    }

    pub fn to_labeled(&self, g: &LieSuperAlgebra) -> Vec<LabeledTerm> {
        self.terms
            .iter()
            .map(|(w, c)| LabeledTerm {
                weight: g.weight_label(w),
                mult: *c,
            })
            .collect()
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct LabeledTerm {
    pub weight: String,
    pub mult: u64,
}
