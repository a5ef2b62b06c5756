//! The index set `A` of solution indices `m` that carry crossings, its split
//! into `A₀`, `A₁`, `A₁ + q`, and the per-index sums `s₀(m)`, `s₁(m)`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::arith::{sigma_frac, EpsRational, Rational};
use crate::braid::{enumerate_crossings, in_window};
use crate::params::KnotParams;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SupportError {
    #[error("m={0} is not in A0 or A1")]
    NotInSupport(i64),
}

/// `X(m) = N(2m+1)/(4q)`.
fn x_of(params: &KnotParams, m: i64) -> Rational {
    Rational::new(params.n() * (2 * m + 1), 4 * params.q())
}

/// `m` satisfies `η + 1/2 ≤ X(m) ≤ N − 1/2 + η`.
fn in_band(params: &KnotParams, m: i64) -> bool {
    let x = EpsRational::exact(x_of(params, m));
    let lo = params.eta().clone() + Rational::new(1, 2);
    let hi = params.eta().clone() + Rational::new(2 * params.n() - 1, 2);
    lo <= x && x <= hi
}

/// Every integer `S` with `η ≤ −S/2 + X(m) ≤ 1 + η`, found by scanning.
pub fn solutions_of_window(params: &KnotParams, m: i64) -> Vec<i64> {
    let two_x = (x_of(params, m) * 2).floor_i64();
    ((two_x - 6)..=(two_x + 6)).filter(|&s| in_window(params, &(x_of(params, m) - Rational::new(s, 2)))).collect()
}

/// `S₁(m)`, the smaller solution, if any.
pub fn s_one(params: &KnotParams, m: i64) -> Option<i64> {
    solutions_of_window(params, m).first().copied()
}

/// Indices `m` of the enumerated crossings.
pub fn realized_indices(params: &KnotParams) -> BTreeSet<i64> {
    enumerate_crossings(params).iter().map(|c| c.m).collect()
}

/// The sets `A`, `A₀`, `A₁` computed by brute force, with `m₀ = min A` and
/// `C = |A| − q − 1`.
///
/// `divergences` lists every way the computed sets differ from the interval
/// forms `A = [m₀, m₀+q+C]`, `A₁ = [m₀, m₀+C]`, `A₀ = [m₀+C+1, m₀+q−1]`
/// with `0 < C < q`, and from the claim that `A₁` is empty when `N = 3`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingSupport {
    pub a: Vec<i64>,
    pub a0: Vec<i64>,
    pub a1: Vec<i64>,
    pub m0: i64,
    pub c: i64,
    pub divergences: Vec<String>,
}

impl CrossingSupport {
    /// `A₀ ∪ A₁` in increasing order.
    pub fn a0_union_a1(&self) -> Vec<i64> {
        let mut all: Vec<i64> = self.a0.iter().chain(&self.a1).copied().collect();
        all.sort_unstable();
        all
    }

    pub fn in_a0(&self, m: i64) -> bool {
        self.a0.binary_search(&m).is_ok()
    }

    pub fn in_a1(&self, m: i64) -> bool {
        self.a1.binary_search(&m).is_ok()
    }

    pub fn in_a(&self, m: i64) -> bool {
        self.a.binary_search(&m).is_ok()
    }
}

pub fn crossing_support(params: &KnotParams) -> CrossingSupport {
    let q = params.q();
    // X(m) ∈ (1/2, N) means m ∈ (q/N − 1/2, 2q − 1/2).
    let lo = q / params.n() - 2;
    let hi = 2 * q + 2;
    let a: Vec<i64> = (lo..=hi).filter(|&m| in_band(params, m)).collect();
    let set: BTreeSet<i64> = a.iter().copied().collect();
    let a0: Vec<i64> = a.iter().copied().filter(|m| !set.contains(&(m + q)) && !set.contains(&(m - q))).collect();
    let a1: Vec<i64> = a.iter().copied().filter(|m| set.contains(&(m + q))).collect();
    let m0 = a[0];
    let c = a.len() as i64 - q - 1;

    let mut divergences = Vec::new();
    if !(0 < c && c < q) {
        divergences.push(format!("C={c} is outside (0, q={q})"));
    }
    if params.n() == 3 && !a1.is_empty() {
        divergences.push(format!("N=3 but A1={a1:?} is not empty"));
    }
    let interval = |from: i64, to: i64| (from..=to).collect::<Vec<_>>();
    if a != interval(m0, m0 + q + c) {
        divergences.push("A is not an interval".into());
    }
    if a1 != interval(m0, m0 + c) {
        divergences.push(format!("A1={a1:?} differs from [m0, m0+C]"));
    }
    if a0 != interval(m0 + c + 1, m0 + q - 1) {
        divergences.push(format!("A0={a0:?} differs from [m0+C+1, m0+q-1]"));
    }
    CrossingSupport { a, a0, a1, m0, c, divergences }
}

/// `s₀(m)` for `m ∈ A₀`, `s₁(m)` for `m ∈ A₁`: the sum of
/// `σ(p(k−l)/N) σ(q(k−l)/N)` over the crossings indexed by `m` (and by
/// `m + q` when `m ∈ A₁`).
pub fn s_sum(params: &KnotParams, m: i64) -> Result<i64, SupportError> {
    let support = crossing_support(params);
    let indices: Vec<i64> = if support.in_a0(m) {
        vec![m]
    } else if support.in_a1(m) {
        vec![m, m + params.q()]
    } else {
        return Err(SupportError::NotInSupport(m));
    };
    let n = params.n();
    Ok(enumerate_crossings(params)
        .iter()
        .filter(|c| indices.contains(&c.m))
        .map(|c| {
            let diff = c.k as i64 - c.l as i64;
            (sigma_frac(params.p() * diff, n) * sigma_frac(params.q() * diff, n)).to_i64()
        })
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::valid_triples;

    fn params(n: i64, p: i64, q: i64) -> KnotParams {
        KnotParams::new(n, p, q).unwrap()
    }

    #[test]
    fn band_matches_realized_indices() {
        for k in valid_triples(2..=6, 3..=16, 3..=16) {
            let support = crossing_support(&k);
            let realized: Vec<i64> = realized_indices(&k).into_iter().collect();
            assert_eq!(support.a, realized, "{k}");
        }
    }

    #[test]
    fn decomposition_of_a() {
        for k in valid_triples(2..=6, 3..=16, 3..=16) {
            let s = crossing_support(&k);
            let mut all: Vec<i64> = s.a0.clone();
            all.extend(&s.a1);
            all.extend(s.a1.iter().map(|m| m + k.q()));
            all.sort_unstable();
            assert_eq!(all, s.a, "{k}");
            assert_eq!(s.a0_union_a1(), (s.m0..s.m0 + k.q()).collect::<Vec<_>>(), "{k}");
            assert_eq!(s.a.len() as i64, k.q() + s.c + 1);
            assert_eq!(s.a1.len() as i64, (s.c + 1).max(0));
        }
    }

    #[test]
    fn example_3_7_5() {
        let s = crossing_support(&params(3, 7, 5));
        assert_eq!(s.a, vec![2, 3, 4, 5, 6, 7]);
        assert_eq!(s.a1, vec![2]);
        assert_eq!(s.a0, vec![3, 4, 5, 6]);
        assert_eq!((s.m0, s.c), (2, 0));
        assert!(s.divergences.iter().any(|d| d.contains("N=3")));
    }

    #[test]
    fn interval_forms() {
        for k in valid_triples(2..=2, 3..=25, 3..=25) {
            assert_eq!(crossing_support(&k).c, -1, "{k}");
        }
        for k in valid_triples(3..=6, 4..=25, 4..=25) {
            let s = crossing_support(&k);
            let unexpected: Vec<_> =
                s.divergences.iter().filter(|d| !d.starts_with("C=") && !d.starts_with("N=3")).collect();
            assert!(unexpected.is_empty(), "{k}: {unexpected:?}");
        }
    }

    #[test]
    fn two_consecutive_solutions() {
        let k = params(5, 9, 7);
        for m in crossing_support(&k).a {
            let sols = solutions_of_window(&k, m);
            assert_eq!(sols.len(), 2);
            assert_eq!(sols[1], sols[0] + 1);
        }
    }

    #[test]
    fn s_sum_equals_inner_sum() {
        for (n, p, q, expected) in [(5, 9, 7, 0), (3, 7, 5, -2), (2, 3, 5, -1)] {
            let k = params(n, p, q);
            let s = crossing_support(&k);
            for m in s.a0_union_a1() {
                assert_eq!(s_sum(&k, m).unwrap(), expected, "{k} m={m}");
            }
        }
    }

    #[test]
    fn s_sum_rejects_outside() {
        let k = params(3, 7, 5);
        assert_eq!(s_sum(&k, 7), Err(SupportError::NotInSupport(7)));
        assert_eq!(s_sum(&k, 100), Err(SupportError::NotInSupport(100)));
    }
}
