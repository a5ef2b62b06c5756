//! HOMFLY polynomial of the braid closure and the degree bounds it obeys.
//!
//! Convention: `v⁻¹P(L₊) − vP(L₋) = zP(L₀)`, unknot = 1. Degrees are in `v`.
//! In this convention an `n`-strand braid of writhe `w` satisfies
//! `w − n + 1 ≤ min deg_v P ≤ max deg_v P ≤ w + n − 1`.

mod fixtures;
mod hecke;
mod skein;

pub use fixtures::{compare_fixture, FixtureMatch, Fixtures, BUNDLED_FIXTURES};
pub use hecke::{homfly_polynomial, loop_value, HeckeElement, Perm};
pub use skein::{skein_oracle, SKEIN_CROSSING_CAP};

use serde::{Deserialize, Serialize};

use crate::arith::LaurentPoly2;
use crate::braid::{braid_word, BraidError, BraidWord};
use crate::params::KnotParams;
use crate::writhe::direct_writhe;

pub const STRAND_CAP: usize = 7;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum HomflyError {
    #[error("{strands} strands exceeds the cap of {cap}")]
    StrandCapExceeded { strands: usize, cap: usize },
    #[error("closure has {components} components, expected a knot")]
    LinkNotKnot { components: usize },
    #[error("{crossings} crossings exceeds the skein cap of {cap}")]
    CrossingCapExceeded { crossings: usize, cap: usize },
    #[error("no fixture named {0:?}")]
    UnknownFixture(String),
    #[error("fixture line {line}: {message}")]
    FixtureParse { line: usize, message: String },
    #[error(transparent)]
    Braid(#[from] BraidError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomflyResult {
    pub polynomial: LaurentPoly2,
    pub p_min: i64,
    pub p_max: i64,
    pub writhe: i64,
    pub strands: usize,
}

/// HOMFLY of the closure of a knot braid on at most [`STRAND_CAP`] strands.
pub fn homfly_of_braid(word: &BraidWord) -> Result<HomflyResult, HomflyError> {
    if word.strands() > STRAND_CAP {
        return Err(HomflyError::StrandCapExceeded { strands: word.strands(), cap: STRAND_CAP });
    }
    let components = word.components();
    if components != 1 {
        return Err(HomflyError::LinkNotKnot { components });
    }
    let polynomial = homfly_polynomial(word);
    Ok(HomflyResult {
        p_min: polynomial.min_degree_v().expect("knot polynomial is nonzero"),
        p_max: polynomial.max_degree_v().expect("knot polynomial is nonzero"),
        polynomial,
        writhe: word.exponent_sum(),
        strands: word.strands(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FwmCheck {
    /// `−(d+1)(N−1)`.
    pub lower: i64,
    /// `(d+1)(N−1)`.
    pub upper: i64,
    pub p_min: i64,
    pub p_max: i64,
    pub writhe: i64,
    /// `lower ≤ p_min` and `p_max ≤ upper`.
    pub pass: bool,
    /// `w − N + 1 ≤ p_min ≤ p_max ≤ w + N − 1`.
    pub morton_pass: bool,
}

impl FwmCheck {
    /// Which of the two outer bounds is attained, for this chirality and for
    /// the mirror image: `[(lower, upper), (mirror lower, mirror upper)]`.
    pub fn equalities(&self) -> [(bool, bool); 2] {
        [(self.p_min == self.lower, self.p_max == self.upper), (-self.p_max == self.lower, -self.p_min == self.upper)]
    }
}

#[allow(clippy::int_plus_one)]
pub fn fwm_from_result(params: &KnotParams, result: &HomflyResult) -> FwmCheck {
    let n = params.n();
    let upper = (params.d() + 1) * (n - 1);
    let w = result.writhe;
    FwmCheck {
        lower: -upper,
        upper,
        p_min: result.p_min,
        p_max: result.p_max,
        writhe: w,
        pass: -upper <= result.p_min && result.p_max <= upper,
        morton_pass: w - n + 1 <= result.p_min && result.p_min <= result.p_max && result.p_max <= w + n - 1,
    }
}

/// HOMFLY of the minimal braid, checked against both layers of bounds.
pub fn fwm_check(params: &KnotParams) -> Result<(HomflyResult, FwmCheck), HomflyError> {
    let swept = braid_word(params)?;
    let result = homfly_of_braid(&swept.word)?;
    debug_assert_eq!(result.writhe, direct_writhe(params));
    let check = fwm_from_result(params, &result);
    Ok((result, check))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(n: usize, gens: &[i64]) -> BraidWord {
        BraidWord::from_signed(n, gens).unwrap()
    }

    #[test]
    fn result_fields() {
        let r = homfly_of_braid(&word(2, &[1, 1, 1])).unwrap();
        assert_eq!((r.p_min, r.p_max, r.writhe, r.strands), (2, 4, 3, 2));
        let u = homfly_of_braid(&word(1, &[])).unwrap();
        assert_eq!((u.p_min, u.p_max), (0, 0));
        assert_eq!(u.polynomial, LaurentPoly2::one());
    }

    #[test]
    fn rejects_links_and_wide_braids() {
        assert_eq!(homfly_of_braid(&word(2, &[1, 1])), Err(HomflyError::LinkNotKnot { components: 2 }));
        let wide = word(8, &[1, 2, 3, 4, 5, 6, 7]);
        assert!(matches!(homfly_of_braid(&wide), Err(HomflyError::StrandCapExceeded { strands: 8, cap: 7 })));
    }

    #[test]
    fn fwm_two_three_five() {
        let k = KnotParams::new(2, 3, 5).unwrap();
        let (r, c) = fwm_check(&k).unwrap();
        assert!(c.pass && c.morton_pass, "{c:?}");
        assert_eq!((c.lower, c.upper), (-2, 2));
        assert!(r.polynomial == LaurentPoly2::one() || r.p_min >= -2);
    }
}
