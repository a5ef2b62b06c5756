use serde::{Deserialize, Serialize};

use crate::arith::{sigma, sigma_frac, EpsRational, Rational, Sign};
use crate::params::KnotParams;

/// One crossing point of the minimal braid.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Crossing {
    /// Lower strand label.
    pub k: usize,
    /// Upper strand label, `k < l`.
    pub l: usize,
    /// Solution index in `t = −(k+l)/2 + N(2m+1)/(4q)`.
    pub m: i64,
    /// Exact crossing parameter.
    pub t: Rational,
    pub sign: Sign,
    /// Label of the strand passing over (`k` or `l`).
    pub over_strand: usize,
}

/// `t = −(k+l)/2 + N(2m+1)/(4q)`.
pub fn crossing_time(params: &KnotParams, m: i64, k: usize, l: usize) -> Rational {
    let s = (k + l) as i64;
    Rational::new(-s, 2) + Rational::new(params.n() * (2 * m + 1), 4 * params.q())
}

/// `η < t ≤ 1 + η` in the infinitesimal order.
pub fn in_window(params: &KnotParams, t: &Rational) -> bool {
    let t = EpsRational::exact(t.clone());
    let lo = params.eta().clone();
    let hi = params.eta().clone() + 1;
    lo < t && t <= hi
}

/// `pm/q + ε`.
fn phase_argument(params: &KnotParams, m: i64) -> EpsRational {
    params.eps() + &Rational::new(params.p() * m, params.q())
}

/// The sign `S(m,k,l) = (−1)^m σ(pm/q + ε) σ(p(k−l)/N) σ(q(k−l)/N)`.
///
/// Symmetric in `k` and `l`: swapping them negates both arguments of the
/// last two factors, and `σ(−x) = −σ(x)` for the non-integral values that
/// occur here.
pub fn crossing_sign(params: &KnotParams, m: i64, k: usize, l: usize) -> Sign {
    let diff = k as i64 - l as i64;
    let n = params.n();
    Sign::parity(m)
        * sigma(&phase_argument(params, m))
        * sigma_frac(params.p() * diff, n)
        * sigma_frac(params.q() * diff, n)
}

/// Which strand of the pair is over at the crossing indexed by `m`.
///
/// The cosine coordinate of strand `j` is `cos(2πp(t + j + φ)/N)` with the
/// phase `φ = −N/(4q) + Nε/(2p)`. At a crossing,
/// `sign(y_k − y_l) = −σ(pm/q + ε) σ(p(k−l)/N)`; the strand with the larger
/// cosine coordinate is over.
pub fn over_strand(params: &KnotParams, m: i64, k: usize, l: usize) -> usize {
    let diff = k as i64 - l as i64;
    let rel = -(sigma(&phase_argument(params, m)) * sigma_frac(params.p() * diff, params.n()));
    if rel.is_positive() {
        k
    } else {
        l
    }
}

/// Every crossing point of the minimal braid with `t` in `(η, 1 + η]`,
/// sorted by `t`, ties broken by `(k, l)`.
///
/// For a pair `(k, l)` the solutions of `sin(2πq(t+k)/N) = sin(2πq(t+l)/N)`
/// are `t = −(k+l)/2 + N(2m+1)/(4q)`; every integer `m` whose `t` falls in the
/// window is kept.
pub fn enumerate_crossings(params: &KnotParams) -> Vec<Crossing> {
    let n = params.n() as usize;
    let (nn, q) = (params.n(), params.q());
    let mut out = Vec::with_capacity(params.expected_crossings());
    for k in 0..n {
        for l in (k + 1)..n {
            let s = (k + l) as i64;
            // Solve t = η for m and scan a few integers either side.
            let start = (&params.eta().std + Rational::new(s, 2)) * Rational::new(4 * q, nn);
            let m_lo = ((start - 1) / 2).floor_i64() - 1;
            let m_hi = m_lo + (2 * q) / nn + 4;
            for m in m_lo..=m_hi {
                let t = crossing_time(params, m, k, l);
                if in_window(params, &t) {
                    out.push(Crossing {
                        k,
                        l,
                        m,
                        t,
                        sign: crossing_sign(params, m, k, l),
                        over_strand: over_strand(params, m, k, l),
                    });
                }
            }
        }
    }
    out.sort_by(|a, b| a.t.cmp(&b.t).then((a.k, a.l).cmp(&(b.k, b.l))));
    out
}
