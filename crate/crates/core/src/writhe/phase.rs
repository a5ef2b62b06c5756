//! Alternating sums `Σ σ(pu/q + ψ)(−1)^u`.

use num_integer::Integer;

use crate::arith::{sigma, EpsRational, Rational, Sign};
use crate::params::KnotParams;

fn alternating(p: i64, q: i64, psi: &EpsRational) -> i64 {
    (1..=q).map(|u| (sigma(&(psi + &Rational::new(p * u, q))) * Sign::parity(u)).to_i64()).sum()
}

/// `Σ_{u=1}^{q} σ(pu/q + ψ)(−1)^u`.
pub fn phase_sum(p: i64, q: i64, psi: &EpsRational) -> i64 {
    alternating(p, q, psi)
}

/// The same sum for the reduced pair `p̃ = p/d`, `q̃ = q/d`.
pub fn reduced_phase_sum(p: i64, q: i64, psi: &EpsRational) -> i64 {
    let d = p.gcd(&q);
    alternating(p / d, q / d, psi)
}

/// `Σ_{a=0}^{d−1} (−1)^{a(p̃+q̃)}`, which is `d` when `p̃ + q̃` is even.
pub fn lemma5_factor(p: i64, q: i64) -> i64 {
    let d = p.gcd(&q);
    (0..d).map(|a| Sign::parity(a * (p / d + q / d)).to_i64()).sum()
}

/// `ψ = p(m₀−1)/q + (m₀−1) + ε`, which turns the sum over `A₀ ∪ A₁` into a
/// phase sum.
pub fn psi_zero(params: &KnotParams, m0: i64) -> EpsRational {
    params.eps() + &(Rational::new(params.p() * (m0 - 1), params.q()) + (m0 - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(phase_sum(3, 5, &EpsRational::delta()), 1);
        assert_eq!(phase_sum(22, 6, &EpsRational::delta()).abs(), 2);
        assert_eq!(lemma5_factor(22, 6), 2);
        assert_eq!(lemma5_factor(10, 5), 1);
    }

    #[test]
    fn two_periodic_in_psi() {
        let psi = EpsRational::just_above(Rational::new(3, 7));
        let shifted = psi.clone() + 2;
        assert_eq!(phase_sum(9, 7, &psi), phase_sum(9, 7, &shifted));
    }

    #[test]
    fn reduced_sum_is_unit() {
        for (p, q) in [(3, 5), (9, 7), (22, 6), (15, 9), (21, 35)] {
            for num in -12..12 {
                for psi in
                    [EpsRational::just_above(Rational::new(num, 11)), EpsRational::just_below(Rational::new(num, 11))]
                {
                    assert_eq!(reduced_phase_sum(p, q, &psi).abs(), 1, "({p},{q}) psi={psi}");
                    assert_eq!(phase_sum(p, q, &psi), lemma5_factor(p, q) * reduced_phase_sum(p, q, &psi));
                }
            }
        }
    }
}
