//! Distinguished weights of gl(m|n) in the delta basis.

use super::types::Weight;
use crate::linalg::rational::int;

/// `m d_{-m} + ... + d_{-1} - d_1 - ... - n d_n`.
pub fn rho(m: usize, n: usize) -> Weight {
    let neg = (0..m).map(|k| int((m - k) as i64));
    let pos = (1..=n).map(|j| int(-(j as i64)));
    Weight(neg.chain(pos).collect())
}

/// Sum of the positive odd roots.
pub fn beta(m: usize, n: usize) -> Weight {
    let neg = (0..m).map(|_| int(n as i64));
    let pos = (0..n).map(|_| int(-(m as i64)));
    Weight(neg.chain(pos).collect())
}

/// The longest element of S_m x S_n: reverses each block.
pub fn w0_action(m: usize, n: usize, w: &Weight) -> Weight {
    let c = w.coords();
    assert_eq!(c.len(), m + n, "weight length");
    let mut out: Vec<_> = c[..m].iter().rev().cloned().collect();
    out.extend(c[m..].iter().rev().cloned());
    Weight(out)
}
