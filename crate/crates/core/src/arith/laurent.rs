use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// A Laurent polynomial in two variables `v`, `z` with integer coefficients.
///
/// Terms are keyed by `(e_v, e_z)`; zero coefficients are never stored, so
/// structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        LaurentPoly2::default()
    }

    pub fn one() -> Self {
        LaurentPoly2::monomial(1, 0, 0)
    }

    /// `coeff · v^e_v · z^e_z`.
    pub fn monomial(coeff: impl Into<BigInt>, e_v: i64, e_z: i64) -> Self {
        let mut p = LaurentPoly2::zero();
        p.add_term(e_v, e_z, coeff.into());
        p
    }

    pub fn v() -> Self {
        LaurentPoly2::monomial(1, 1, 0)
    }

    pub fn z() -> Self {
        LaurentPoly2::monomial(1, 0, 1)
    }

    /// Builds a polynomial from `(e_v, e_z, coeff)` triples, summing repeats.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = LaurentPoly2::zero();
        for (ev, ez, c) in terms {
            p.add_term(ev, ez, c.into());
        }
        p
    }

    pub fn add_term(&mut self, e_v: i64, e_z: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry((e_v, e_z)) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e_v: i64, e_z: i64) -> BigInt {
        self.terms.get(&(e_v, e_z)).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms as `((e_v, e_z), coeff)`, ordered by `e_v` then `e_z`.
    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &BigInt)> {
        self.terms.iter()
    }

    /// Minimal exponent of `v`; `None` for the zero polynomial.
    pub fn min_degree_v(&self) -> Option<i64> {
        self.terms.keys().map(|&(ev, _)| ev).min()
    }

    pub fn max_degree_v(&self) -> Option<i64> {
        self.terms.keys().map(|&(ev, _)| ev).max()
    }

    pub fn min_degree_z(&self) -> Option<i64> {
        self.terms.keys().map(|&(_, ez)| ez).min()
    }

    /// Multiplies every term by `v^a z^b`.
    pub fn shift(&self, a: i64, b: i64) -> Self {
        LaurentPoly2 { terms: self.terms.iter().map(|(&(ev, ez), c)| ((ev + a, ez + b), c.clone())).collect() }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return LaurentPoly2::zero();
        }
        LaurentPoly2 { terms: self.terms.iter().map(|(&e, c)| (e, c * k)).collect() }
    }

    /// Substitution `v → v⁻¹, z → −z`: the polynomial of the mirror image
    /// under the `v⁻¹P₊ − vP₋ = zP₀` convention.
    pub fn mirror(&self) -> Self {
        LaurentPoly2 {
            terms: self
                .terms
                .iter()
                .map(|(&(ev, ez), c)| ((-ev, ez), if ez % 2 == 0 { c.clone() } else { -c }))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = LaurentPoly2::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

impl AddAssign<&LaurentPoly2> for LaurentPoly2 {
    fn add_assign(&mut self, rhs: &LaurentPoly2) {
        for (&(ev, ez), c) in &rhs.terms {
            self.add_term(ev, ez, c.clone());
        }
    }
}

impl Add for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(mut self, rhs: LaurentPoly2) -> LaurentPoly2 {
        self += &rhs;
        self
    }
}

impl Neg for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        LaurentPoly2 { terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

impl Neg for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        -&self
    }
}

impl Sub for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        for (&(ev, ez), c) in &rhs.terms {
            out.add_term(ev, ez, -c);
        }
        out
    }
}

impl Sub for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: LaurentPoly2) -> LaurentPoly2 {
        &self - &rhs
    }
}

impl Mul for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = LaurentPoly2::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: LaurentPoly2) -> LaurentPoly2 {
        &self * &rhs
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, var: char, e: i64) -> fmt::Result {
    match e {
        0 => Ok(()),
        1 => write!(f, "{var}"),
        _ => write!(f, "{var}^{e}"),
    }
}

/// Terms are printed grouped by ascending power of `z`, then of `v`, e.g.
/// `2v^2 - v^4 + v^2z^2`.
impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(ev, ez)| (ez, ev));
        for (idx, (ev, ez)) in keys.into_iter().enumerate() {
            let c = &self.terms[&(ev, ez)];
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if !mag.is_one() || (ev == 0 && ez == 0) {
                write!(f, "{mag}")?;
            }
            write_power(f, 'v', ev)?;
            write_power(f, 'z', ez)?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly2({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct Term(i64, i64, String);

// Serialized as a list of `[e_v, e_z, "coeff"]`; coefficients are strings so
// that arbitrary-precision values survive JSON.
impl Serialize for LaurentPoly2 {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<Term> = self.terms.iter().map(|(&(ev, ez), c)| Term(ev, ez, c.to_string())).collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly2 {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let terms = Vec::<Term>::deserialize(deserializer)?;
        let mut p = LaurentPoly2::zero();
        for Term(ev, ez, c) in terms {
            let c: BigInt = c.parse().map_err(serde::de::Error::custom)?;
            p.add_term(ev, ez, c);
        }
        Ok(p)
    }
}
