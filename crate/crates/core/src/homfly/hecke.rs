//! The Hecke algebra `H_n` over `ℤ[v^±, z^±]` with `g_i² = z g_i + 1`, and
//! its Ocneanu trace.
//!
//! The trace is normalized so that `tr(1_1) = 1`, `tr(x ⊗ 1) = D tr(x)` with
//! `D = (v⁻¹ − v)/z`, and `tr(x g_{n−1}) = v⁻¹ tr(x)` for `x ∈ H_{n−1}`. On a
//! braid `β` it returns `v^{−w(β)} P(β̂)`.

use std::collections::BTreeMap;

use crate::arith::{LaurentPoly2, Sign};
use crate::braid::BraidWord;

/// A permutation in one-line form: position `i` holds `perm[i]`.
pub type Perm = Vec<u8>;

/// `Σ c_w g_w` over permutations `w` of `n` points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeElement {
    n: usize,
    terms: BTreeMap<Perm, LaurentPoly2>,
}

/// `D = (v⁻¹ − v) z⁻¹`.
pub fn loop_value() -> LaurentPoly2 {
    LaurentPoly2::from_terms([(-1, -1, 1), (1, -1, -1)])
}

fn identity(n: usize) -> Perm {
    (0..n as u8).collect()
}

impl HeckeElement {
    pub fn one(n: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(identity(n), LaurentPoly2::one());
        HeckeElement { n, terms }
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, perm: &[u8]) -> LaurentPoly2 {
        self.terms.get(perm).cloned().unwrap_or_else(LaurentPoly2::zero)
    }

    fn add(terms: &mut BTreeMap<Perm, LaurentPoly2>, perm: Perm, c: LaurentPoly2) {
        *terms.entry(perm).or_insert_with(LaurentPoly2::zero) += &c;
    }

    fn prune(terms: BTreeMap<Perm, LaurentPoly2>) -> BTreeMap<Perm, LaurentPoly2> {
        terms.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Right multiplication by `g_i` (0-based: swaps positions `i`, `i+1`).
    pub fn mul_gen(&self, i: usize) -> Self {
        debug_assert!(i + 1 < self.n);
        let mut out = BTreeMap::new();
        for (w, c) in &self.terms {
            let mut ws = w.clone();
            ws.swap(i, i + 1);
            if w[i] < w[i + 1] {
                Self::add(&mut out, ws, c.clone());
            } else {
                Self::add(&mut out, w.clone(), c.shift(0, 1));
                Self::add(&mut out, ws, c.clone());
            }
        }
        HeckeElement { n: self.n, terms: Self::prune(out) }
    }

    /// Right multiplication by `g_i⁻¹ = g_i − z`.
    pub fn mul_gen_inv(&self, i: usize) -> Self {
        let mut out = self.mul_gen(i).terms;
        for (w, c) in &self.terms {
            Self::add(&mut out, w.clone(), -c.shift(0, 1));
        }
        HeckeElement { n: self.n, terms: Self::prune(out) }
    }

    /// Image of a braid word: `σ_i^{±1}` (1-based) acts as `g_{i−1}^{±1}`.
    pub fn from_braid(word: &BraidWord) -> Self {
        word.letters().iter().fold(HeckeElement::one(word.strands()), |acc, l| match l.exp {
            Sign::Plus => acc.mul_gen(l.gen - 1),
            Sign::Minus => acc.mul_gen_inv(l.gen - 1),
        })
    }

    /// Pushes the trace from `H_n` down to `H_{n−1}`.
    ///
    /// With `j` the position of the largest value, `g_w = g_{w'} g_{n−2} ⋯ g_j`
    /// where `w'` drops that value. If `j = n−1` the term is `D g_{w'}`;
    /// otherwise the trace equals `v⁻¹ tr(g_{w'} g_{n−3} ⋯ g_j)`.
    fn reduce(&self) -> HeckeElement {
        let n = self.n;
        let top = (n - 1) as u8;
        let d = loop_value();
        let mut out = HeckeElement { n: n - 1, terms: BTreeMap::new() };
        let mut buckets: BTreeMap<usize, HeckeElement> = BTreeMap::new();
        for (w, c) in &self.terms {
            let j = w.iter().position(|&x| x == top).unwrap();
            let reduced: Perm = w.iter().copied().filter(|&x| x != top).collect();
            if j == n - 1 {
                Self::add(&mut out.terms, reduced, &d * c);
            } else {
                let bucket = buckets.entry(j).or_insert_with(|| HeckeElement { n: n - 1, terms: BTreeMap::new() });
                Self::add(&mut bucket.terms, reduced, c.shift(-1, 0));
            }
        }
        for (j, mut bucket) in buckets {
            bucket.terms = Self::prune(bucket.terms);
            for i in (j..n.saturating_sub(2)).rev() {
                bucket = bucket.mul_gen(i);
            }
            for (w, c) in bucket.terms {
                Self::add(&mut out.terms, w, c);
            }
        }
        out.terms = Self::prune(out.terms);
        out
    }

    /// Ocneanu trace.
    pub fn trace(&self) -> LaurentPoly2 {
        let mut x = self.clone();
        while x.n > 1 {
            x = x.reduce();
        }
        x.coeff(&identity(1))
    }
}

/// HOMFLY polynomial of the closure of any braid word (knot or link), with
/// `v⁻¹P₊ − vP₋ = zP₀` and the unknot normalized to 1.
pub fn homfly_polynomial(word: &BraidWord) -> LaurentPoly2 {
    HeckeElement::from_braid(word).trace().shift(word.exponent_sum(), 0)
}
