use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::Rational;

/// A rational number plus a multiple of a formal positive infinitesimal `δ`.
///
/// `δ` is smaller than every positive rational, so comparisons are
/// lexicographic: first on the standard part, then on the coefficient of `δ`.
/// This is the exact stand-in for "a very small positive irrational" offset:
/// `x + δ` never lands on an integer, and its floor is always determined.
///
/// The derived ordering compares `std` first and `inf` second, which is
/// exactly the lexicographic order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct EpsRational {
    /// Standard part.
    pub std: Rational,
    /// Coefficient of `δ`.
    pub inf: Rational,
}

impl EpsRational {
    pub fn new(std: Rational, inf: Rational) -> Self {
        EpsRational { std, inf }
    }

    /// An exact rational with no infinitesimal part.
    pub fn exact(std: Rational) -> Self {
        EpsRational { std, inf: Rational::zero() }
    }

    /// The infinitesimal `δ` itself.
    pub fn delta() -> Self {
        EpsRational { std: Rational::zero(), inf: Rational::one() }
    }

    /// `r + δ`.
    pub fn just_above(r: Rational) -> Self {
        EpsRational { std: r, inf: Rational::one() }
    }

    /// `r − δ`.
    pub fn just_below(r: Rational) -> Self {
        EpsRational { std: r, inf: -Rational::one() }
    }

    pub fn zero() -> Self {
        EpsRational::default()
    }

    /// The unique integer `n` with `n ≤ self < n + 1`.
    pub fn floor(&self) -> BigInt {
        let f = self.std.floor();
        if self.std.is_integer() && self.inf.is_negative() {
            f - BigInt::one()
        } else {
            f
        }
    }

    pub fn floor_i64(&self) -> i64 {
        use num_traits::ToPrimitive;
        self.floor().to_i64().expect("floor does not fit in i64")
    }

    /// True when the value sits exactly on an integer (standard part integral
    /// and no infinitesimal offset).
    pub fn is_integer(&self) -> bool {
        self.std.is_integer() && self.inf.is_zero()
    }
}

impl From<Rational> for EpsRational {
    fn from(r: Rational) -> Self {
        EpsRational::exact(r)
    }
}

impl From<i64> for EpsRational {
    fn from(n: i64) -> Self {
        EpsRational::exact(Rational::from(n))
    }
}

impl Add for EpsRational {
    type Output = EpsRational;
    fn add(self, rhs: EpsRational) -> EpsRational {
        EpsRational { std: self.std + rhs.std, inf: self.inf + rhs.inf }
    }
}

impl<'a> Add<&'a EpsRational> for &'a EpsRational {
    type Output = EpsRational;
    fn add(self, rhs: &'a EpsRational) -> EpsRational {
        EpsRational { std: &self.std + &rhs.std, inf: &self.inf + &rhs.inf }
    }
}

impl Add<Rational> for EpsRational {
    type Output = EpsRational;
    fn add(self, rhs: Rational) -> EpsRational {
        EpsRational { std: self.std + rhs, inf: self.inf }
    }
}

impl<'a> Add<&'a Rational> for &'a EpsRational {
    type Output = EpsRational;
    fn add(self, rhs: &'a Rational) -> EpsRational {
        EpsRational { std: &self.std + rhs, inf: self.inf.clone() }
    }
}

impl Add<i64> for EpsRational {
    type Output = EpsRational;
    fn add(self, rhs: i64) -> EpsRational {
        EpsRational { std: self.std + rhs, inf: self.inf }
    }
}

impl Sub for EpsRational {
    type Output = EpsRational;
    fn sub(self, rhs: EpsRational) -> EpsRational {
        EpsRational { std: self.std - rhs.std, inf: self.inf - rhs.inf }
    }
}

impl Sub<Rational> for EpsRational {
    type Output = EpsRational;
    fn sub(self, rhs: Rational) -> EpsRational {
        EpsRational { std: self.std - rhs, inf: self.inf }
    }
}

impl Neg for EpsRational {
    type Output = EpsRational;
    fn neg(self) -> EpsRational {
        EpsRational { std: -self.std, inf: -self.inf }
    }
}

/// Scaling by a rational; a negative factor flips the side of `δ`.
impl Mul<&Rational> for &EpsRational {
    type Output = EpsRational;
    fn mul(self, rhs: &Rational) -> EpsRational {
        EpsRational { std: &self.std * rhs, inf: &self.inf * rhs }
    }
}

impl fmt::Display for EpsRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inf.is_zero() {
            return write!(f, "{}", self.std);
        }
        if !self.std.is_zero() {
            write!(f, "{}", self.std)?;
            if self.inf.is_positive() {
                write!(f, "+")?;
            }
        }
        if self.inf == Rational::one() {
            write!(f, "δ")
        } else if self.inf == -Rational::one() {
            write!(f, "-δ")
        } else {
            write!(f, "{}δ", self.inf)
        }
    }
}

impl fmt::Debug for EpsRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn floor_examples() {
        assert_eq!(EpsRational::exact(q(7, 3)).floor(), BigInt::from(2));
        assert_eq!(EpsRational::just_above(q(2, 1)).floor(), BigInt::from(2));
        assert_eq!(EpsRational::just_below(q(2, 1)).floor(), BigInt::from(1));
        assert_eq!(EpsRational::just_below(q(-3, 1)).floor(), BigInt::from(-4));
    }

    #[test]
    fn order_is_lexicographic() {
        let a = EpsRational::just_below(q(1, 2));
        let b = EpsRational::exact(q(1, 2));
        let c = EpsRational::just_above(q(1, 2));
        assert!(a < b && b < c);
        assert!(c < EpsRational::exact(q(1_000_001, 2_000_000)));
        assert!(EpsRational::delta() > EpsRational::zero());
    }

    #[test]
    fn negative_scaling_flips_delta() {
        let x = &EpsRational::just_above(q(1, 3)) * &q(-3, 1);
        assert_eq!(x, EpsRational::new(q(-1, 1), q(-3, 1)));
        assert_eq!(x.floor(), BigInt::from(-2));
    }

    fn arb_eps() -> impl Strategy<Value = EpsRational> {
        (-500i64..500, 1i64..60, -2i64..=2).prop_map(|(n, d, e)| EpsRational::new(q(n, d), Rational::from(e)))
    }

    proptest! {
        #[test]
        fn floor_brackets(x in arb_eps()) {
            let f = Rational::from(x.floor());
            prop_assert!(EpsRational::exact(f.clone()) <= x);
            prop_assert!(x < EpsRational::exact(f + 1));
        }

        #[test]
        fn floor_shifts_with_integers(x in arb_eps(), n in -50i64..50) {
            prop_assert_eq!((x.clone() + n).floor(), x.floor() + n);
        }
    }
}
