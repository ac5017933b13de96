//! Characters of simple gl(k)-modules from semistandard tableaux.

use super::character::Character;
use crate::error::{Error, Result};
use crate::linalg::rational::{as_i64, Rational};
use crate::superalgebra::Weight;
use num::{BigInt, One};

/// Partition lambda - lambda_k together with the shift lambda_k.
fn shape(lambda: &[Rational]) -> Result<(Vec<usize>, Rational)> {
    let Some(last) = lambda.last() else {
        return Ok((vec![], Rational::one()));
    };
    let mut parts = Vec::with_capacity(lambda.len());
    for w in lambda.windows(2) {
        match as_i64(&(&w[0] - &w[1])) {
            Some(d) if d >= 0 => {}
            _ => return Err(Error::NotDominant(format!("{:?}", lambda.iter().map(|c| c.to_string()).collect::<Vec<_>>()))),
        }
    }
    for c in lambda {
        parts.push(as_i64(&(c - last)).unwrap() as usize);
    }
    Ok((parts, last.clone()))
}

/// ch V(lambda) for gl(k), k = lambda.len(), as a character in k coordinates.
pub fn weyl_character(lambda: &[Rational]) -> Result<Character> {
    let k = lambda.len();
    let (parts, shift) = shape(lambda)?;
    let mut out = Character::new();
    if k == 0 {
        out.add_weight(Weight(vec![]), 1);
        return Ok(out);
    }
    // fill row by row; rows[r][c] in 1..=k, weakly increasing along rows,
    // strictly increasing down columns
    let cells: Vec<(usize, usize)> = parts.iter().enumerate().flat_map(|(r, &l)| (0..l).map(move |c| (r, c))).collect();
    let mut tab = vec![vec![0usize; parts.first().copied().unwrap_or(0)]; k];
    let mut content = vec![0u64; k];
    fn fill(
        idx: usize,
        cells: &[(usize, usize)],
        tab: &mut Vec<Vec<usize>>,
        content: &mut Vec<u64>,
        k: usize,
        shift: &Rational,
        out: &mut Character,
    ) {
        if idx == cells.len() {
            let w = content.iter().map(|&c| Rational::from_integer(BigInt::from(c)) + shift).collect();
            out.add_weight(Weight(w), 1);
            return;
        }
        let (r, c) = cells[idx];
        let lo_row = if c > 0 { tab[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { tab[r - 1][c] + 1 } else { 1 };
        // entry in row r is at least r + 1
        for v in lo_row.max(lo_col).max(r + 1)..=k {
            tab[r][c] = v;
            content[v - 1] += 1;
            fill(idx + 1, cells, tab, content, k, shift, out);
            content[v - 1] -= 1;
        }
        tab[r][c] = 0;
    }
    fill(0, &cells, &mut tab, &mut content, k, &shift, &mut out);
    Ok(out)
}

/// prod_{i<j} (l_i - l_j + j - i) / (j - i).
pub fn weyl_dimension(lambda: &[Rational]) -> Result<u64> {
    shape(lambda)?;
    let k = lambda.len();
    let mut num = Rational::one();
    for i in 0..k {
        for j in i + 1..k {
            let gap = Rational::from_integer(BigInt::from((j - i) as i64));
            num *= (&lambda[i] - &lambda[j] + &gap) / gap;
        }
    }
    as_i64(&num).map(|d| d as u64).ok_or_else(|| Error::Internal("non-integral Weyl dimension".into()))
}
