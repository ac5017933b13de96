use super::character::Character;
use super::weyl::weyl_character;
use crate::error::Result;
use crate::module::require_compatible;
use crate::superalgebra::{LieSuperAlgebra, Weight};

/// ch V(lambda) for the even part gl(m) + gl(n).
pub fn even_character(g: &LieSuperAlgebra, lambda: &Weight) -> Result<Character> {
    let (m, _) = require_compatible(g)?;
    g.check_dominant(lambda)?;
    let (a, b) = lambda.coords().split_at(m);
    let (ca, cb) = (weyl_character(a)?, weyl_character(b)?);
    let mut out = Character::new();
    for (x, i) in &ca.terms {
        for (y, j) in &cb.terms {
            let mut w = x.coords().to_vec();
            w.extend_from_slice(y.coords());
            out.add_weight(Weight(w), i * j);
        }
    }
    Ok(out)
}

/// ch K(lambda) = ch V(lambda) * prod over positive odd roots (1 + e^{-alpha}).
pub fn kac_character(g: &LieSuperAlgebra, lambda: &Weight) -> Result<Character> {
    let mut out = even_character(g, lambda)?;
    for i in g.positive_odd_root_ids() {
        let mut factor = Character::single(Weight::zero(g.rank()));
        factor.add_weight(-g.weight(i), 1);
        out = out.mul(&factor);
    }
    Ok(out)
}
