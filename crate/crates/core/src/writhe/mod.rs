//! Writhe of the minimal braid: by enumeration, by the closed form
//! `d Σ σ(ps/N)σ(qs/N)`, and the bound `|w| ≤ d(N−1)` with its sharpness
//! criterion.

mod lemmas;
mod phase;
mod support;

pub use lemmas::{verify_lemmas, verify_lemmas_with, LemmaOutcome, LemmaStatus};
pub use phase::{lemma5_factor, phase_sum, psi_zero, reduced_phase_sum};
pub use support::{
    crossing_support, realized_indices, s_one, s_sum, solutions_of_window, CrossingSupport, SupportError,
};

use serde::{Deserialize, Serialize};

use crate::arith::{sigma_frac, Sign};
use crate::braid::enumerate_crossings;
use crate::params::KnotParams;

/// Sum of the crossing signs.
pub fn direct_writhe(params: &KnotParams) -> i64 {
    enumerate_crossings(params).iter().map(|c| c.sign.to_i64()).sum()
}

/// `σ(ps/N) σ(qs/N)`.
pub fn inner_term(params: &KnotParams, s: i64) -> Sign {
    sigma_frac(params.p() * s, params.n()) * sigma_frac(params.q() * s, params.n())
}

/// `Σ_{s=1}^{N−1} σ(ps/N) σ(qs/N)`.
pub fn inner_sum(params: &KnotParams) -> i64 {
    (1..params.n()).map(|s| inner_term(params, s).to_i64()).sum()
}

/// `0` when `p̃ + q̃` is odd, otherwise `d · inner_sum`. Agrees with
/// [`direct_writhe`] up to sign.
pub fn closed_form_writhe(params: &KnotParams) -> i64 {
    if params.same_parity() {
        params.d() * inner_sum(params)
    } else {
        0
    }
}

/// `p + τq = 2Nμ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisibilityCertificate {
    pub tau: Sign,
    pub mu: i64,
}

impl DivisibilityCertificate {
    pub fn holds(&self, params: &KnotParams) -> bool {
        params.p() + self.tau.to_i64() * params.q() == 2 * params.n() * self.mu
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WritheBounds {
    pub bound: i64,
    pub sharp: bool,
    pub certificate: Option<DivisibilityCertificate>,
}

/// `d(N−1)` with a certificate when `2N` divides `p+q` or `p−q`, `d(N−3)`
/// otherwise.
pub fn writhe_bounds(params: &KnotParams) -> WritheBounds {
    let (n, p, q, d) = (params.n(), params.p(), params.q(), params.d());
    let certificate = [Sign::Plus, Sign::Minus].into_iter().find_map(|tau| {
        let lhs = p + tau.to_i64() * q;
        (lhs % (2 * n) == 0).then(|| DivisibilityCertificate { tau, mu: lhs / (2 * n) })
    });
    match certificate {
        Some(_) => WritheBounds { bound: d * (n - 1), sharp: true, certificate },
        None => WritheBounds { bound: d * (n - 3), sharp: false, certificate },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma7Flags {
    pub all_equal: bool,
    pub all_opposite: bool,
}

/// Compares `σ(qs/N)` with `σ(ps/N)` for `s = 1..N−1`.
pub fn lemma7_check(n: i64, p: i64, q: i64) -> Lemma7Flags {
    let mut flags = Lemma7Flags { all_equal: true, all_opposite: true };
    for s in 1..n {
        if sigma_frac(p * s, n) == sigma_frac(q * s, n) {
            flags.all_opposite = false;
        } else {
            flags.all_equal = false;
        }
    }
    flags
}

/// With `R₁ = p mod N`, `R₂ = q mod N`: `[R₁s/N] = [R₂s/N]` for every
/// `s = 1..N−1`, and `R₁ = R₂`.
pub fn lemma8_holds(n: i64, p: i64, q: i64) -> bool {
    let (r1, r2) = (p.rem_euclid(n), q.rem_euclid(n));
    (1..n).all(|s| (r1 * s).div_euclid(n) == (r2 * s).div_euclid(n)) && r1 == r2
}
