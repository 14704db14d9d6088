//! Exact arithmetic shared by the rest of the crate: rationals, integer and
//! rational matrices, Smith normal form, and modular helpers.

mod matrix;
mod modular;
mod snf;

pub use matrix::{solve_exact, IntMatrix, RatMatrix};
pub use modular::{crt_solve, mod_inverse};
pub use snf::{smith_normal_form, SmithForm};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Arbitrary precision reduced fraction. Denominator is always positive.
pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Greatest integer not exceeding `r`.
pub fn floor(r: &Rational) -> BigInt {
    r.numer().div_floor(r.denom())
}

/// `r` as an `i64` if it is an integer that fits.
pub fn as_small_integer(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        r.numer().to_i64()
    } else {
        None
    }
}

/// Renders `p/q`, or just `p` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

pub(crate) fn is_zero(r: &Rational) -> bool {
    r.is_zero()
}
