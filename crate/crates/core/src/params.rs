//! The parameter triple `(N, p, q)` of a simple minimal knot.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::arith::EpsRational;

/// Reasons a triple `(N, p, q)` does not define a simple minimal knot.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParamError {
    #[error("N must be at least 2 (got N={0})")]
    TooFewStrands(i64),
    #[error("N < p must hold (got N={n}, p={p})")]
    PNotAboveN { n: i64, p: i64 },
    #[error("N < q must hold (got N={n}, q={q})")]
    QNotAboveN { n: i64, q: i64 },
    #[error("gcd(N,p) must be 1 (got gcd({n},{p})={g})")]
    GcdNp { n: i64, p: i64, g: i64 },
    #[error("gcd(N,q) must be 1 (got gcd({n},{q})={g})")]
    GcdNq { n: i64, q: i64, g: i64 },
}

/// Validated parameters of `K(N, p, q)`.
///
/// `N` is the winding of the first coordinate (and the strand count of the
/// minimal braid), `q` the frequency of the sine term and `p` the frequency of
/// the cosine term. The derived `d = gcd(p, q)`, `p̃ = p/d`, `q̃ = q/d` are
/// cached.
///
/// `eps` is the phase and `eta` the shift of the parameter window
/// `(η, 1 + η]`; both default to the infinitesimal `δ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KnotParams {
    n: i64,
    p: i64,
    q: i64,
    d: i64,
    p_t: i64,
    q_t: i64,
    eps: EpsRational,
    eta: EpsRational,
}

impl KnotParams {
    pub fn new(n: i64, p: i64, q: i64) -> Result<Self, ParamError> {
        if n < 2 {
            return Err(ParamError::TooFewStrands(n));
        }
        if p <= n {
            return Err(ParamError::PNotAboveN { n, p });
        }
        if q <= n {
            return Err(ParamError::QNotAboveN { n, q });
        }
        let g = n.gcd(&p);
        if g != 1 {
            return Err(ParamError::GcdNp { n, p, g });
        }
        let g = n.gcd(&q);
        if g != 1 {
            return Err(ParamError::GcdNq { n, q, g });
        }
        let d = p.gcd(&q);
        Ok(KnotParams { n, p, q, d, p_t: p / d, q_t: q / d, eps: EpsRational::delta(), eta: EpsRational::delta() })
    }

    /// Replaces the phase `ε`.
    pub fn with_phase(mut self, eps: EpsRational) -> Self {
        self.eps = eps;
        self
    }

    /// Replaces the window shift `η`.
    pub fn with_shift(mut self, eta: EpsRational) -> Self {
        self.eta = eta;
        self
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn p_t(&self) -> i64 {
        self.p_t
    }

    pub fn q_t(&self) -> i64 {
        self.q_t
    }

    pub fn eps(&self) -> &EpsRational {
        &self.eps
    }

    pub fn eta(&self) -> &EpsRational {
        &self.eta
    }

    pub fn strands(&self) -> usize {
        self.n as usize
    }

    /// Number of crossing points of the minimal braid, `(N − 1)q`.
    pub fn expected_crossings(&self) -> usize {
        ((self.n - 1) * self.q) as usize
    }

    /// `p̃` and `q̃` are both odd (they cannot both be even).
    pub fn same_parity(&self) -> bool {
        (self.p_t + self.q_t) % 2 == 0
    }

    pub fn is_torus(&self) -> bool {
        self.p == self.q
    }
}

impl std::fmt::Display for KnotParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "K({},{},{})", self.n, self.p, self.q)
    }
}

/// All valid triples in the given inclusive ranges, in `(N, p, q)`
/// lexicographic order.
pub fn valid_triples(
    n_range: std::ops::RangeInclusive<i64>,
    p_range: std::ops::RangeInclusive<i64>,
    q_range: std::ops::RangeInclusive<i64>,
) -> Vec<KnotParams> {
    let mut out = Vec::new();
    for n in n_range {
        for p in p_range.clone() {
            for q in q_range.clone() {
                if let Ok(k) = KnotParams::new(n, p, q) {
                    out.push(k);
                }
            }
        }
    }
    out
}
