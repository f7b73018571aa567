//! Exact arithmetic kernel: integers, rationals, Laurent polynomials and
//! polynomials in `x` over Laurent polynomials.

mod laurent;
mod ring;
mod xpoly;

pub use laurent::{LaurentPoly, ParseLaurentError};
pub(crate) use laurent::rational_pow;
pub use num_bigint::BigInt;
pub use ring::Ring;
pub use xpoly::XPoly;

/// Reduced fraction of arbitrary-precision integers with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
