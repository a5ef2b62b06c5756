use std::fmt;
use std::ops::{Mul, Neg};

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{EpsRational, Rational};

/// A sign in `{+1, −1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    /// `(−1)^n`.
    pub fn parity(n: i64) -> Sign {
        if n.is_even() {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn of(n: i64) -> Option<Sign> {
        match n.signum() {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_positive(self) -> bool {
        self == Sign::Plus
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl From<Sign> for i64 {
    fn from(s: Sign) -> i64 {
        s.to_i64()
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_i64(self.to_i64())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let n = i64::deserialize(deserializer)?;
        match n {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(serde::de::Error::custom(format!("sign must be ±1, got {other}"))),
        }
    }
}

/// `σ(r) = (−1)^⌊r⌋`.
pub fn sigma(r: &EpsRational) -> Sign {
    let f = r.floor();
    if f.is_even() {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// `σ` on an exact rational (no infinitesimal offset).
pub fn sigma_exact(r: &Rational) -> Sign {
    if r.floor().is_even() {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// `σ(a/b)` for machine integers, without allocating a rational.
pub fn sigma_frac(a: i64, b: i64) -> Sign {
    assert!(b != 0, "sigma_frac with zero denominator");
    Sign::parity(num_integer::Integer::div_floor(&a, &b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(&EpsRational::exact(q(1, 2))), Sign::Plus);
        assert_eq!(sigma(&EpsRational::exact(q(3, 2))), Sign::Minus);
        assert_eq!(sigma(&EpsRational::exact(q(-1, 2))), Sign::Minus);
        assert_eq!(sigma(&EpsRational::just_above(q(2, 1))), Sign::Plus);
        assert_eq!(sigma(&EpsRational::just_below(q(2, 1))), Sign::Minus);
    }

    #[test]
    fn sigma_frac_agrees_with_rational() {
        for a in -40..40 {
            for b in [-7i64, -3, 1, 2, 5, 9] {
                assert_eq!(sigma_frac(a, b), sigma_exact(&q(a, b)), "{a}/{b}");
            }
        }
    }

    fn arb_eps() -> impl Strategy<Value = EpsRational> {
        (-500i64..500, 1i64..60, -2i64..=2).prop_map(|(n, d, e)| EpsRational::new(q(n, d), Rational::from(e)))
    }

    proptest! {
        // Holds whenever the argument is not an integer.
        #[test]
        fn sigma_is_odd(n in -500i64..500, d in 2i64..60) {
            prop_assume!(n % d != 0);
            let x = EpsRational::exact(q(n, d));
            prop_assert_eq!(sigma(&-x.clone()), -sigma(&x));
        }

        #[test]
        fn sigma_is_two_periodic(x in arb_eps(), n in -30i64..30) {
            prop_assert_eq!(sigma(&(x.clone() + 2 * n)), sigma(&x));
        }
    }
}
