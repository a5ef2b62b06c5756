use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::crossings::{enumerate_crossings, Crossing};
use super::BraidError;
use crate::arith::{sigma_exact, Rational, Sign};
use crate::params::KnotParams;

/// One Artin generator `σ_i^{±1}`; `gen` is 1-based and swaps positions
/// `gen` and `gen + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub gen: usize,
    pub exp: Sign,
}

impl Letter {
    pub fn new(gen: usize, exp: Sign) -> Self {
        Letter { gen, exp }
    }

    pub fn inverse(self) -> Self {
        Letter { gen: self.gen, exp: -self.exp }
    }
}

/// A braid word on a fixed number of strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WordError {
    #[error("generator s{gen} is out of range for {strands} strands")]
    GeneratorOutOfRange { gen: usize, strands: usize },
    #[error("a braid needs at least one strand")]
    NoStrands,
    #[error("cannot parse braid letter {0:?}")]
    BadLetter(String),
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self, WordError> {
        if strands == 0 {
            return Err(WordError::NoStrands);
        }
        if let Some(bad) = letters.iter().find(|l| l.gen == 0 || l.gen >= strands) {
            return Err(WordError::GeneratorOutOfRange { gen: bad.gen, strands });
        }
        Ok(BraidWord { strands, letters })
    }

    /// Builds a word from signed generator indices, `[1, -2]` ↦ `σ₁σ₂⁻¹`.
    pub fn from_signed(strands: usize, gens: &[i64]) -> Result<Self, WordError> {
        let letters = gens
            .iter()
            .map(|&g| {
                if g == 0 {
                    Err(WordError::BadLetter("0".into()))
                } else {
                    Ok(Letter::new(g.unsigned_abs() as usize, if g > 0 { Sign::Plus } else { Sign::Minus }))
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        BraidWord::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.exp.to_i64()).sum()
    }

    /// `perm[i]` is the bottom position reached by the strand entering at top
    /// position `i` (0-based).
    pub fn permutation(&self) -> Vec<usize> {
        // at[pos] = starting position of the strand currently at pos
        let mut at: Vec<usize> = (0..self.strands).collect();
        for l in &self.letters {
            at.swap(l.gen - 1, l.gen);
        }
        let mut perm = vec![0; self.strands];
        for (end, &start) in at.iter().enumerate() {
            perm[start] = end;
        }
        perm
    }

    /// Number of components of the closure.
    pub fn components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut count = 0;
        for i in 0..self.strands {
            if !seen[i] {
                count += 1;
                let mut j = i;
                while !seen[j] {
                    seen[j] = true;
                    j = perm[j];
                }
            }
        }
        count
    }

    /// The closure is a knot, not a link.
    pub fn is_knot(&self) -> bool {
        self.components() == 1
    }

    /// Every exponent flipped: the closure is the mirror image.
    pub fn mirror(&self) -> Self {
        BraidWord { strands: self.strands, letters: self.letters.iter().map(|l| l.inverse()).collect() }
    }

    /// `σ_i^{e} · w · σ_i^{−e}`, same closure.
    pub fn conjugate(&self, letter: Letter) -> Self {
        let mut letters = Vec::with_capacity(self.letters.len() + 2);
        letters.push(letter);
        letters.extend_from_slice(&self.letters);
        letters.push(letter.inverse());
        BraidWord { strands: self.strands, letters }
    }

    /// `w · σ_n^{e}` on `n + 1` strands (Markov stabilization).
    pub fn stabilize(&self, exp: Sign) -> Self {
        let mut letters = self.letters.clone();
        letters.push(Letter::new(self.strands, exp));
        BraidWord { strands: self.strands + 1, letters }
    }
}

/// `s1 s2^-1 s1`; the empty word prints as `1`.
impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            match l.exp {
                Sign::Plus => write!(f, "s{}", l.gen)?,
                Sign::Minus => write!(f, "s{}^-1", l.gen)?,
            }
        }
        Ok(())
    }
}

impl BraidWord {
    /// Parses the `Display` form; the strand count is one more than the
    /// largest generator unless given explicitly.
    pub fn parse(s: &str, strands: Option<usize>) -> Result<Self, WordError> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let bad = || WordError::BadLetter(tok.to_string());
            let body = tok.strip_prefix('s').ok_or_else(bad)?;
            let (gen, exp) = match body.split_once('^') {
                Some((g, "-1")) => (g, Sign::Minus),
                Some((g, "1")) => (g, Sign::Plus),
                Some(_) => return Err(bad()),
                None => (body, Sign::Plus),
            };
            let gen: usize = gen.parse().map_err(|_| bad())?;
            letters.push(Letter::new(gen, exp));
        }
        let strands = strands.unwrap_or_else(|| letters.iter().map(|l| l.gen + 1).max().unwrap_or(1));
        BraidWord::new(strands, letters)
    }
}

impl FromStr for BraidWord {
    type Err = WordError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BraidWord::parse(s, None)
    }
}

/// Exact sign of `x_k(t) − x_l(t)` where `x_j(t) = sin(2πq(t+j)/N)`, at a
/// time `t` that is not a crossing time of the pair.
///
/// `x_k − x_l = 2 cos(πq(2t+k+l)/N) sin(πq(k−l)/N)`, and for non-integral
/// `u`, `sign(sin πu) = σ(u)` and `sign(cos πu) = σ(u + 1/2)`.
pub fn x_order_sign(params: &KnotParams, t: &Rational, k: usize, l: usize) -> Sign {
    let (n, q) = (params.n(), params.q());
    let sum = t * 2 + (k + l) as i64;
    let cos_arg = sum * Rational::new(q, n) + Rational::new(1, 2);
    let sin_arg = Rational::new(q * (k as i64 - l as i64), n);
    sigma_exact(&cos_arg) * sigma_exact(&sin_arg)
}

/// Strand labels sorted by ascending `x` at time `t`.
pub fn strand_order_at(params: &KnotParams, t: &Rational) -> Vec<usize> {
    let mut order: Vec<usize> = (0..params.strands()).collect();
    order.sort_by(|&a, &b| {
        if a == b {
            std::cmp::Ordering::Equal
        } else if x_order_sign(params, t, a, b).is_positive() {
            std::cmp::Ordering::Greater
        } else {
            std::cmp::Ordering::Less
        }
    });
    order
}

/// The minimal braid as a word in Artin generators, together with the
/// crossings it was swept from.
#[derive(Debug, Clone)]
pub struct SweptBraid {
    pub word: BraidWord,
    pub crossings: Vec<Crossing>,
    /// Strand labels by ascending `x` just after `η`.
    pub initial_order: Vec<usize>,
    /// Strand labels by ascending `x` at `1 + η`.
    pub final_order: Vec<usize>,
}

/// Sweeps the crossings in ascending `t`, tracking the `x`-order of the
/// strands, and emits `σ_i^{S}` for each crossing, where `i` is the lower of
/// the two (1-based) positions and `S` the crossing sign.
pub fn braid_word(params: &KnotParams) -> Result<SweptBraid, BraidError> {
    let crossings = enumerate_crossings(params);
    // Crossing times lie on the lattice (1/4q)ℤ, so stepping back 1/8q from
    // the first one lands strictly after every earlier crossing.
    let start = match crossings.first() {
        Some(c) => &c.t - Rational::new(1, 8 * params.q()),
        None => params.eta().std.clone(),
    };
    let initial_order = strand_order_at(params, &start);
    let mut order = initial_order.clone();
    let mut pos_of = vec![0usize; params.strands()];
    for (pos, &s) in order.iter().enumerate() {
        pos_of[s] = pos;
    }
    let mut letters = Vec::with_capacity(crossings.len());
    for c in &crossings {
        let (a, b) = (pos_of[c.k], pos_of[c.l]);
        let lo = a.min(b);
        if a.abs_diff(b) != 1 {
            return Err(BraidError::DegenerateConfiguration { t: c.t.clone(), k: c.k, l: c.l, positions: (a, b) });
        }
        letters.push(Letter::new(lo + 1, c.sign));
        order.swap(lo, lo + 1);
        pos_of[order[lo]] = lo;
        pos_of[order[lo + 1]] = lo + 1;
    }
    let word = BraidWord::new(params.strands(), letters).expect("positions are in range");
    Ok(SweptBraid { word, crossings, initial_order, final_order: order })
}
