//! Exact rational arithmetic.
//!
//! Every quantity in the solvers (weights after shifting, probabilities,
//! slopes, expected horizons) is a [`Rational`]: an arbitrary-precision,
//! always-reduced fraction with a positive denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use num_rational::BigRational as Rational;

/// `n / 1`.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p / q`, reduced. Panics if `q == 0`.
pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn from_usize(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn from_u64(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Largest natural `t` with `t <= x`, for `x >= 0`.
pub fn floor_nat(x: &Rational) -> u64 {
    debug_assert!(!x.is_negative());
    x.floor()
        .to_integer()
        .to_u64()
        .expect("time does not fit in u64")
}

/// Smallest natural `t` with `t >= x`, for `x >= 0`.
pub fn ceil_nat(x: &Rational) -> u64 {
    debug_assert!(!x.is_negative());
    x.ceil()
        .to_integer()
        .to_u64()
        .expect("time does not fit in u64")
}

pub fn lcm_denominators<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

/// Formats a rational as `p/q`, always with an explicit denominator.
pub fn to_fraction_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p`, `-p` or `p/q`. Whitespace around the parts is not allowed.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let valid = |part: &str, signed: bool| {
        let digits = if signed {
            part.strip_prefix('-').unwrap_or(part)
        } else {
            part
        };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(num, true) || !valid(den, false) {
        return None;
    }
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}
