//! Floating-point re-derivation of the crossing set, used as an independent
//! check on the exact enumeration.
//!
//! Strand `j` is `t ↦ (sin(2πq(t+j)/N), cos(2πp(t+j+φ)/N))`. Crossings are
//! located as sign changes of `x_k − x_l` on a uniform grid and refined by
//! bisection; the sign is read off the geometry (which strand is higher in
//! `y`, which one climbs faster in `x`), with no reference to the closed-form
//! sign formula.

use std::f64::consts::PI;

use num_traits::ToPrimitive;

use super::crossings::{enumerate_crossings, Crossing};
use super::BraidError;
use crate::arith::{EpsRational, Sign};
use crate::params::KnotParams;

/// Set once for the whole crate after checking that torus knots come out
/// all-positive under the right-handed rule. It did not need flipping.
pub const GEOMETRIC_SIGN_FLIP: bool = false;

/// Absolute tolerance of the bisection in `t`.
pub const BISECTION_TOL: f64 = 1e-12;

/// Minimum grid points per expected crossing.
pub const SAMPLES_PER_CROSSING: usize = 64;

#[derive(Debug, Clone, PartialEq)]
pub struct OracleCrossing {
    pub k: usize,
    pub l: usize,
    pub t: f64,
    pub sign: Sign,
    pub over_strand: usize,
}

/// A rational `std ± δ` replaced by `std ± h`, where `h` is half the
/// smallest gap `std` can have to a point of `(1/lattice)ℤ` other than
/// itself.
fn realize(x: &EpsRational, lattice: i64) -> f64 {
    let den = x.std.denom().to_f64().unwrap_or(1.0);
    let h = 1.0 / (2.0 * lattice as f64 * den);
    let sgn = if x.inf.is_positive() {
        1.0
    } else if x.inf.is_negative() {
        -1.0
    } else {
        0.0
    };
    x.std.to_f64() + sgn * h
}

/// Floating model of the strands with the phase that makes the geometric sign
/// agree with `S(m,k,l)`: `φ = −N/(4q) + Nε/(2p)`.
#[derive(Debug, Clone)]
pub struct StrandModel {
    n: f64,
    p: f64,
    q: f64,
    phase: f64,
}

impl StrandModel {
    pub fn new(params: &KnotParams) -> Self {
        let (n, p, q) = (params.n() as f64, params.p() as f64, params.q() as f64);
        let eps = realize(params.eps(), 2 * params.q());
        StrandModel { n, p, q, phase: -n / (4.0 * q) + n * eps / (2.0 * p) }
    }

    pub fn x(&self, j: usize, t: f64) -> f64 {
        (2.0 * PI * self.q * (t + j as f64) / self.n).sin()
    }

    pub fn dx(&self, j: usize, t: f64) -> f64 {
        2.0 * PI * self.q / self.n * (2.0 * PI * self.q * (t + j as f64) / self.n).cos()
    }

    pub fn y(&self, j: usize, t: f64) -> f64 {
        (2.0 * PI * self.p * (t + j as f64 + self.phase) / self.n).cos()
    }

    /// Right-handed rule: positive when the over-strand climbs faster in `x`.
    pub fn crossing(&self, k: usize, l: usize, t: f64) -> (Sign, usize) {
        let (over, under) = if self.y(k, t) > self.y(l, t) { (k, l) } else { (l, k) };
        let sign = if self.dx(over, t) > self.dx(under, t) { Sign::Plus } else { Sign::Minus };
        let sign = if GEOMETRIC_SIGN_FLIP { -sign } else { sign };
        (sign, over)
    }
}

fn bisect(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let mut fa = f(a);
    while b - a > BISECTION_TOL {
        let mid = 0.5 * (a + b);
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fa < 0.0) == (fm < 0.0) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    0.5 * (a + b)
}

/// Finds every crossing numerically on `samples` uniform grid intervals over
/// `(η, 1 + η]`.
pub fn geometric_oracle(params: &KnotParams, samples: usize) -> Result<Vec<OracleCrossing>, BraidError> {
    let need = SAMPLES_PER_CROSSING * params.expected_crossings();
    if samples < need {
        return Err(BraidError::TooFewSamples { samples, need });
    }
    let model = StrandModel::new(params);
    // Crossing times live on (1/4q)ℤ.
    let eta = realize(params.eta(), 4 * params.q());
    let n = params.strands();
    let step = 1.0 / samples as f64;
    let mut out = Vec::new();
    for k in 0..n {
        for l in (k + 1)..n {
            let f = |t: f64| model.x(k, t) - model.x(l, t);
            let mut a = eta;
            let mut fa = f(a);
            for i in 1..=samples {
                let b = eta + i as f64 * step;
                let fb = f(b);
                if fb == 0.0 || (fa < 0.0) != (fb < 0.0) && fa != 0.0 {
                    let t = if fb == 0.0 { b } else { bisect(f, a, b) };
                    let (sign, over_strand) = model.crossing(k, l, t);
                    out.push(OracleCrossing { k, l, t, sign, over_strand });
                }
                a = b;
                fa = fb;
            }
        }
    }
    out.sort_by(|a, b| a.t.total_cmp(&b.t).then((a.k, a.l).cmp(&(b.k, b.l))));
    let expected = params.expected_crossings();
    if out.len() != expected {
        return Err(BraidError::OracleMismatch(format!(
            "{params}: oracle found {} crossings, expected {expected}",
            out.len()
        )));
    }
    Ok(out)
}

/// Outcome of matching the oracle's crossings against the exact ones.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleAgreement {
    pub matched: usize,
    pub max_t_error: f64,
    pub sign_mismatches: usize,
    pub over_mismatches: usize,
}

impl OracleAgreement {
    pub fn is_perfect(&self, tol: f64) -> bool {
        self.max_t_error < tol && self.sign_mismatches == 0 && self.over_mismatches == 0
    }
}

/// Pairs each exact crossing with a numeric one on the same strand pair
/// within `tol` in `t`.
pub fn match_crossings(
    exact: &[Crossing],
    numeric: &[OracleCrossing],
    tol: f64,
) -> Result<OracleAgreement, BraidError> {
    if exact.len() != numeric.len() {
        return Err(BraidError::OracleMismatch(format!(
            "{} exact crossings vs {} numeric",
            exact.len(),
            numeric.len()
        )));
    }
    let mut used = vec![false; numeric.len()];
    let mut agreement = OracleAgreement { matched: 0, max_t_error: 0.0, sign_mismatches: 0, over_mismatches: 0 };
    for c in exact {
        let t = c.t.to_f64();
        let hit = numeric
            .iter()
            .enumerate()
            .filter(|(i, o)| !used[*i] && (o.k, o.l) == (c.k, c.l))
            .map(|(i, o)| (i, (o.t - t).abs()))
            .min_by(|a, b| a.1.total_cmp(&b.1));
        match hit {
            Some((i, err)) if err < tol => {
                used[i] = true;
                agreement.matched += 1;
                agreement.max_t_error = agreement.max_t_error.max(err);
                if numeric[i].sign != c.sign {
                    agreement.sign_mismatches += 1;
                }
                if numeric[i].over_strand != c.over_strand {
                    agreement.over_mismatches += 1;
                }
            }
            _ => {
                return Err(BraidError::OracleMismatch(format!(
                    "no numeric crossing for pair ({},{}) near t={}",
                    c.k, c.l, c.t
                )))
            }
        }
    }
    Ok(agreement)
}

/// Runs the oracle and matches it against the exact enumeration.
pub fn check_against_exact(params: &KnotParams, samples: usize, tol: f64) -> Result<OracleAgreement, BraidError> {
    let numeric = geometric_oracle(params, samples)?;
    match_crossings(&enumerate_crossings(params), &numeric, tol)
}
