//! Rational roots of univariate polynomials over Q.

use super::rational::Rational;
use num::{BigInt, Integer, One, Signed, ToPrimitive, Zero};

/// Largest integer magnitude whose divisors we are willing to enumerate.
const DIVISOR_LIMIT: u64 = 1 << 40;

fn trim(p: &[Rational]) -> Vec<Rational> {
    let mut v = p.to_vec();
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

pub fn eval(p: &[Rational], x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n > DIVISOR_LIMIT {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Some(out)
}

/// Distinct rational roots, ascending. Candidates follow the rational root
/// theorem; polynomials whose extreme coefficients are too large to factor
/// by trial division return only the roots found so far (possibly none).
pub fn rational_roots(p: &[Rational]) -> Vec<Rational> {
    let mut p = trim(p);
    let mut roots = Vec::new();
    if p.is_empty() {
        return roots;
    }
    if p[0].is_zero() {
        roots.push(Rational::zero());
        while p.first().is_some_and(|c| c.is_zero()) {
            p.remove(0);
        }
    }
    if p.len() <= 1 {
        return roots;
    }
    let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let (Some(num_divs), Some(den_divs)) = (divisors(&ints[0]), divisors(ints.last().unwrap())) else {
        return roots;
    };
    let mut cands = Vec::new();
    for a in &num_divs {
        for b in &den_divs {
            let r = Rational::new(a.clone(), b.clone());
            cands.push(r.clone());
            cands.push(-r);
        }
    }
    cands.sort();
    cands.dedup();
    for c in cands {
        if eval(&p, &c).is_zero() {
            roots.push(c);
        }
    }
    roots.sort();
    roots.dedup();
    roots
}
