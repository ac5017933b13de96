//! Normal-ordered PBW arithmetic in U(g).

use crate::error::{Error, Result};
use crate::linalg::rational::{self, frac, Rational};
use crate::superalgebra::{LieSuperAlgebra, Parity, Weight};
use num::{One, Zero};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;
use std::sync::{Arc, Mutex};

pub const DEFAULT_CACHE_LIMIT: usize = 1 << 16;

/// A normal-ordered word: basis ids sorted by the straightener's order,
/// odd ids appearing at most once.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PBWMonomial {
    pub word: Vec<usize>,
}

impl PBWMonomial {
    pub fn unit() -> Self {
        PBWMonomial { word: Vec::new() }
    }

    pub fn new(word: Vec<usize>) -> Self {
        PBWMonomial { word }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Exponents aligned with the algebra basis.
    pub fn exponents(&self, dim: usize) -> Vec<u32> {
        let mut e = vec![0; dim];
        for &i in &self.word {
            e[i] += 1;
        }
        e
    }

    pub fn weight(&self, g: &LieSuperAlgebra) -> Weight {
        self.word.iter().fold(Weight::zero(g.rank()), |acc, i| &acc + g.weight(*i))
    }

    pub fn degree(&self, g: &LieSuperAlgebra) -> i64 {
        self.word.iter().map(|i| g.degree(*i)).sum()
    }

    pub fn height(&self, g: &LieSuperAlgebra) -> i64 {
        self.word.iter().map(|i| g.height(*i)).sum()
    }

    pub fn parity(&self, g: &LieSuperAlgebra) -> Parity {
        self.word.iter().fold(Parity::Even, |p, i| p + g.parity(*i))
    }

    /// `e(1,-1)^1 * e(2,-1)^1`; the unit prints as `1`.
    pub fn display(&self, g: &LieSuperAlgebra) -> String {
        if self.word.is_empty() {
            return "1".into();
        }
        let mut out = String::new();
        let mut i = 0;
        while i < self.word.len() {
            let mut j = i;
            while j < self.word.len() && self.word[j] == self.word[i] {
                j += 1;
            }
            if !out.is_empty() {
                out.push_str(" * ");
            }
            let _ = write!(out, "{}^{}", g.label(self.word[i]), j - i);
            i = j;
        }
        out
    }
}

/// Finite linear combination of normal-ordered monomials.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct EnvelopingElement {
    pub terms: BTreeMap<PBWMonomial, Rational>,
}

impl EnvelopingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(PBWMonomial::unit(), Rational::one())
    }

    pub fn monomial(m: PBWMonomial, c: Rational) -> Self {
        let mut e = Self::zero();
        e.add_term(m, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: PBWMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add_scaled(&mut self, c: &Rational, other: &EnvelopingElement) {
        for (m, x) in &other.terms {
            self.add_term(m.clone(), c * x);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        out.add_scaled(c, self);
        out
    }

    pub fn display(&self, g: &LieSuperAlgebra) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(m, c)| format!("{} {}", rational::to_string(c), m.display(g)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Rewrites words into PBW normal form for a fixed total order on the
/// basis. Results of left-multiplying a generator onto a normal monomial
/// are cached up to `cache_limit` entries.
pub struct Straightener {
    g: Arc<LieSuperAlgebra>,
    rank: Vec<usize>,
    order: Vec<usize>,
    cache: Mutex<HashMap<(usize, PBWMonomial), EnvelopingElement>>,
    cache_limit: usize,
    max_word: usize,
}

impl Straightener {
    /// Default order: ascending degree, then ascending id.
    pub fn new(g: Arc<LieSuperAlgebra>) -> Self {
        let mut order: Vec<usize> = (0..g.dim()).collect();
        order.sort_by_key(|&i| (g.degree(i), i));
        Self::with_order(g, order).expect("default order is a permutation")
    }

    /// `order` lists every basis id exactly once, smallest first.
    pub fn with_order(g: Arc<LieSuperAlgebra>, order: Vec<usize>) -> Result<Self> {
        let d = g.dim();
        let mut rank = vec![usize::MAX; d];
        for (r, &i) in order.iter().enumerate() {
            if i >= d || rank[i] != usize::MAX {
                return Err(Error::Precondition("basis order is not a permutation".into()));
            }
            rank[i] = r;
        }
        if order.len() != d {
            return Err(Error::Precondition("basis order is not a permutation".into()));
        }
        Ok(Straightener {
            g,
            rank,
            order,
            cache: Mutex::new(HashMap::new()),
            cache_limit: DEFAULT_CACHE_LIMIT,
            max_word: 64,
        })
    }

    pub fn with_limits(mut self, cache_limit: usize, max_word: usize) -> Self {
        self.cache_limit = cache_limit;
        self.max_word = max_word;
        self
    }

    pub fn algebra(&self) -> &Arc<LieSuperAlgebra> {
        &self.g
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn rank_of(&self, i: usize) -> usize {
        self.rank[i]
    }

    pub fn cache_len(&self) -> usize {
        self.cache.lock().map(|c| c.len()).unwrap_or(0)
    }

    /// Sorts `word` into this order. Only valid for words already known to
    /// be normal up to reordering, such as enumerated bases.
    pub fn sort_word(&self, word: &mut [usize]) {
        word.sort_by_key(|&i| self.rank[i]);
    }

    pub fn is_normal(&self, word: &[usize]) -> bool {
        word.windows(2).all(|p| {
            let (a, b) = (self.rank[p[0]], self.rank[p[1]]);
            a < b || (a == b && !self.g.parity(p[0]).is_odd())
        })
    }

    /// `x * m` in normal form for a normal monomial `m`.
    pub fn left_mul_monomial(&self, x: usize, m: &PBWMonomial) -> EnvelopingElement {
        let Some(&first) = m.word.first() else {
            return EnvelopingElement::monomial(PBWMonomial::new(vec![x]), Rational::one());
        };
        let (rx, rf) = (self.rank[x], self.rank[first]);
        if rx < rf || (x == first && !self.g.parity(x).is_odd()) {
            let mut w = Vec::with_capacity(m.len() + 1);
            w.push(x);
            w.extend_from_slice(&m.word);
            return EnvelopingElement::monomial(PBWMonomial::new(w), Rational::one());
        }
        let key = (x, m.clone());
        if let Some(hit) = self.cache.lock().ok().and_then(|c| c.get(&key).cloned()) {
            return hit;
        }
        let rest = PBWMonomial::new(m.word[1..].to_vec());
        let mut out = EnvelopingElement::zero();
        if x == first {
            // x odd: x x = [x,x]/2
            let half = frac(1, 2);
            for (z, c) in self.g.bracket_basis(x, x).iter() {
                out.add_scaled(&(&half * c), &self.left_mul_monomial(*z, &rest));
            }
        } else {
            // x f = (-1)^{|x||f|} f x + [x,f]
            let s = rational::int(self.g.parity(x).sign_with(self.g.parity(first)));
            let xr = self.left_mul_monomial(x, &rest);
            out.add_scaled(&s, &self.left_mul(first, &xr));
            for (z, c) in self.g.bracket_basis(x, first).iter() {
                out.add_scaled(c, &self.left_mul_monomial(*z, &rest));
            }
        }
        if let Ok(mut c) = self.cache.lock() {
            if c.len() < self.cache_limit {
                c.insert(key, out.clone());
            }
        }
        out
    }

    pub fn left_mul(&self, x: usize, e: &EnvelopingElement) -> EnvelopingElement {
        let mut out = EnvelopingElement::zero();
        for (m, c) in &e.terms {
            out.add_scaled(c, &self.left_mul_monomial(x, m));
        }
        out
    }

    /// Normal form of an arbitrary word in basis ids.
    pub fn straighten(&self, word: &[usize]) -> Result<EnvelopingElement> {
        if word.len() > self.max_word {
            return Err(Error::Resource(format!("word of length {} exceeds bound {}", word.len(), self.max_word)));
        }
        if let Some(&bad) = word.iter().find(|&&i| i >= self.g.dim()) {
            return Err(Error::Precondition(format!("basis id {bad} out of range")));
        }
        Ok(self.straighten_unchecked(word))
    }

    fn straighten_unchecked(&self, word: &[usize]) -> EnvelopingElement {
        word.iter()
            .rev()
            .fold(EnvelopingElement::one(), |acc, &x| self.left_mul(x, &acc))
    }

    pub fn multiply(&self, a: &EnvelopingElement, b: &EnvelopingElement) -> EnvelopingElement {
        let mut out = EnvelopingElement::zero();
        for (m, c) in &a.terms {
            let prod = m.word.iter().rev().fold(b.clone(), |acc, &x| self.left_mul(x, &acc));
            out.add_scaled(c, &prod);
        }
        out
    }
}

/// Normal monomials in `gens` (listed in the straightener's order) whose
/// total weight lies in `window`, or all of them when the span is finite.
pub fn monomials_in(
    g: &LieSuperAlgebra,
    gens: &[usize],
    window: Option<&BTreeSet<Weight>>,
) -> Result<Vec<PBWMonomial>> {
    let unbounded = gens.iter().find(|&&i| !g.parity(i).is_odd());
    let min_height = match (window, unbounded) {
        (None, Some(&i)) => {
            return Err(Error::Window(vec![format!("infinite monomial basis through {}", g.label(i))]));
        }
        (Some(w), _) if gens.iter().all(|&i| g.height(i) < 0) => w.iter().map(|x| g.weight_height(x)).min(),
        (Some(_), _) => None,
        (None, None) => None,
    };
    if let Some(&i) = gens.iter().find(|&&i| !g.parity(i).is_odd() && g.height(i) >= 0) {
        if window.is_some() {
            return Err(Error::Precondition(format!("generator {} does not lower height", g.label(i))));
        }
    }
    let mut out = Vec::new();
    let mut word = Vec::new();
    let mut weight = Weight::zero(g.rank());
    fn rec(
        g: &LieSuperAlgebra,
        gens: &[usize],
        k: usize,
        min_h: Option<&Rational>,
        word: &mut Vec<usize>,
        weight: &mut Weight,
        out: &mut Vec<PBWMonomial>,
        window: Option<&BTreeSet<Weight>>,
    ) {
        if k == gens.len() {
            if window.is_none_or(|w| w.contains(weight)) {
                out.push(PBWMonomial::new(word.clone()));
            }
            return;
        }
        let x = gens[k];
        let max_exp = if g.parity(x).is_odd() { 1 } else { usize::MAX };
        let mut e = 0;
        loop {
            rec(g, gens, k + 1, min_h, word, weight, out, window);
            if e == max_exp {
                break;
            }
            let next = &*weight + g.weight(x);
            if let Some(h) = min_h {
                if &g.weight_height(&next) < h {
                    break;
                }
            }
            *weight = next;
            word.push(x);
            e += 1;
        }
        for _ in 0..e {
            word.pop();
            *weight = &*weight - g.weight(x);
        }
    }
    let min_ref = min_height.as_ref();
    rec(g, gens, 0, min_ref, &mut word, &mut weight, &mut out, window);
    out.sort_by(|a, b| b.height(g).cmp(&a.height(g)).then_with(|| a.len().cmp(&b.len())).then_with(|| a.cmp(b)));
    Ok(out)
}

/// Normal monomials in `gens` of total height at least `min_height`.
/// Without a bound every generator must be odd.
pub fn monomials_above(g: &LieSuperAlgebra, gens: &[usize], min_height: Option<i64>) -> Result<Vec<PBWMonomial>> {
    if let Some(&i) = gens.iter().find(|&&i| !g.parity(i).is_odd() && (min_height.is_none() || g.height(i) >= 0)) {
        return Err(Error::Window(vec![format!("infinite monomial basis through {}", g.label(i))]));
    }
    // gain[k]: largest height still obtainable from gens[k..]
    let mut gain = vec![0i64; gens.len() + 1];
    for k in (0..gens.len()).rev() {
        let h = g.height(gens[k]);
        gain[k] = gain[k + 1] + if g.parity(gens[k]).is_odd() { h.max(0) } else { 0 };
    }
    let mut out = Vec::new();
    let mut word = Vec::new();
    fn rec(
        g: &LieSuperAlgebra,
        gens: &[usize],
        gain: &[i64],
        k: usize,
        h: i64,
        min: Option<i64>,
        word: &mut Vec<usize>,
        out: &mut Vec<PBWMonomial>,
    ) {
        if min.is_some_and(|m| h + gain[k] < m) {
            return;
        }
        if k == gens.len() {
            out.push(PBWMonomial::new(word.clone()));
            return;
        }
        let x = gens[k];
        let step = g.height(x);
        let max_exp = if g.parity(x).is_odd() { 1 } else { usize::MAX };
        let mut e = 0;
        let mut cur = h;
        loop {
            rec(g, gens, gain, k + 1, cur, min, word, out);
            if e == max_exp || min.is_some_and(|m| cur + step + gain[k + 1] < m) {
                break;
            }
            word.push(x);
            cur += step;
            e += 1;
        }
        word.truncate(word.len() - e);
    }
    rec(g, gens, &gain, 0, 0, min_height, &mut word, &mut out);
    out.sort_by(|a, b| b.height(g).cmp(&a.height(g)).then_with(|| a.len().cmp(&b.len())).then_with(|| a.cmp(b)));
    Ok(out)
}

/// PBW basis of U(n), n = g_{<0}, restricted to weights in the window.
pub fn negative_basis(g: &LieSuperAlgebra, window: Option<&BTreeSet<Weight>>) -> Result<Vec<PBWMonomial>> {
    g.ensure_graded()?;
    let mut gens = g.negative_ids();
    gens.sort_by_key(|&i| (g.degree(i), i));
    monomials_in(g, &gens, window)
}
