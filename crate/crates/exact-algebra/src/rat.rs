//! Arbitrary-precision rational numbers.
//!
//! `Rat` is a reduced fraction of two big integers with positive denominator;
//! `num-rational` maintains exactly the invariants we need (coprime numerator
//! and denominator, denominator > 0, zero stored as 0/1).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

/// Rational from a numerator/denominator pair of machine integers.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// Rational from a machine integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Decimal rendering with `digits` digits after the point, truncated toward
/// zero. Exact values are authoritative; this is for display only.
pub fn decimal_string(x: &Rat, digits: usize) -> String {
    let sign = if x.is_negative() { "-" } else { "" };
    let ax = x.abs();
    let scale = Int::from(10u32).pow(digits as u32);
    let scaled = (ax.numer() * &scale) / ax.denom();
    let int_part = &scaled / &scale;
    let frac_part = &scaled % &scale;
    if digits == 0 {
        return format!("{}{}", sign, int_part);
    }
    let frac_str = format!("{:0>width$}", frac_part.to_string(), width = digits);
    format!("{}{}.{}", sign, int_part, frac_str)
}

/// Closest `f64`, for plot data export only.
pub fn to_f64(x: &Rat) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        let digits = 30usize;
        decimal_string(x, digits).parse().unwrap_or(f64::NAN)
    })
}

/// Bitsize of an integer: number of bits of |k|, plus one.
pub fn bitsize(k: &Int) -> u64 {
    k.abs().bits() + 1
}

/// 10^-digits as a rational, used as a refinement target.
pub fn pow10_inv(digits: usize) -> Rat {
    Rat::new(Int::one(), Int::from(10u32).pow(digits as u32))
}

pub fn is_integer(x: &Rat) -> bool {
    x.denom().is_one()
}

pub fn rat_is_zero(x: &Rat) -> bool {
    x.is_zero()
}
