//! The minimal braid of `K(N, p, q)`: exact crossing points, their signs,
//! the Artin word, and a floating-point geometric cross-check.

mod crossings;
mod oracle;
mod word;

pub use crossings::{crossing_sign, crossing_time, enumerate_crossings, in_window, over_strand, Crossing};
pub use oracle::{
    check_against_exact, geometric_oracle, match_crossings, OracleAgreement, OracleCrossing, StrandModel,
    BISECTION_TOL, GEOMETRIC_SIGN_FLIP, SAMPLES_PER_CROSSING,
};
pub use word::{braid_word, strand_order_at, x_order_sign, BraidWord, Letter, SweptBraid, WordError};

use crate::arith::Rational;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum BraidError {
    #[error("crossing of strands {k},{l} at t={t} is between non-adjacent positions {positions:?}")]
    DegenerateConfiguration { t: Rational, k: usize, l: usize, positions: (usize, usize) },
    #[error("geometric oracle disagrees with the exact enumeration: {0}")]
    OracleMismatch(String),
    #[error("oracle needs at least {need} samples, got {samples}")]
    TooFewSamples { samples: usize, need: usize },
}
