use crate::linalg::rational::{self, Rational};
use num::Zero;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Neg, Sub};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn from_odd(odd: bool) -> Parity {
        if odd {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn flip(self) -> Parity {
        Parity::from_odd(!self.is_odd())
    }

    /// `(-1)^{|self| |other|}`.
    pub fn sign_with(self, other: Parity) -> i64 {
        if self.is_odd() && other.is_odd() {
            -1
        } else {
            1
        }
    }

    pub fn bit(self) -> u8 {
        self as u8
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, o: Parity) -> Parity {
        Parity::from_odd(self.is_odd() != o.is_odd())
    }
}

/// Exact coordinate vector in the dual basis of the torus.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(#[serde(with = "rational::serde_vec")] pub Vec<Rational>);

impl Weight {
    pub fn zero(len: usize) -> Weight {
        Weight(vec![Rational::zero(); len])
    }

    pub fn from_ints(v: &[i64]) -> Weight {
        Weight(v.iter().map(|x| rational::int(*x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, c: &Rational) -> Weight {
        Weight(self.0.iter().map(|x| x * c).collect())
    }

    pub fn dot(&self, other: &[Rational]) -> Rational {
        self.0.iter().zip(other).map(|(a, b)| a * b).sum()
    }

    /// Formats as `(a,b|c)` with the bar after the first `split` coordinates.
    pub fn label(&self, split: Option<usize>) -> String {
        let mut s = String::from("(");
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                s.push(if Some(i) == split { '|' } else { ',' });
            }
            s.push_str(&rational::to_string(c));
        }
        s.push(')');
        s
    }

    /// Parses `(a,b|c)` or `a,b,c`.
    pub fn parse(s: &str) -> Option<Weight> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        if t.trim().is_empty() {
            return Some(Weight(Vec::new()));
        }
        t.split([',', '|'])
            .map(rational::parse)
            .collect::<Option<Vec<_>>>()
            .map(Weight)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label(None))
    }
}

impl<'a> Add<&'a Weight> for &'a Weight {
    type Output = Weight;
    fn add(self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl<'a> Sub<&'a Weight> for &'a Weight {
    type Output = Weight;
    fn sub(self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GradingKind {
    /// No grading installed yet.
    Ungraded,
    Principal,
    Compatible,
    /// The grading `deg e(i,j) = deg e'(i,j) = j - i` of q(n).
    #[serde(rename = "q")]
    QGrading,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum AlgebraKind {
    Gl { m: usize, n: usize },
    Q { n: usize },
}

/// JSON descriptor `{"type":"gl","m":2,"n":1,"grading":"compatible"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDescriptor {
    #[serde(flatten)]
    pub kind: AlgebraKind,
    pub grading: GradingKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub id: usize,
    pub parity: Parity,
    /// Z-degree under the installed grading.
    pub degree: i64,
    pub weight: Weight,
    pub label: String,
    /// Eigenvalue of the principal grading element; positive elements span
    /// the upper triangular Borel.
    pub height: i64,
}
