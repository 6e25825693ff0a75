//! Coefficient ring: arbitrary-precision rationals, always in lowest terms
//! with positive denominator (maintained by `num`).

pub use num::BigRational as Rational;

use num::BigInt;

/// n/d as an exact rational; panics if d is zero.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}
