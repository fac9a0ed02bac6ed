//! Exact rational numbers and correctly rounded decimal rendering.
//!
//! [`Rational`] is kept in canonical form by construction (positive
//! denominator, fully reduced), so equality and ordering are structural.
//! Rationals serialize as decimal-integer strings `"p/q"` (or a bare integer
//! when the denominator is one) in every machine-readable output; they are
//! never rendered as floating point there.

use num_bigint::{BigInt, Sign};
use num_traits::{Signed, Zero};

/// Exact arbitrary-precision fraction; the atom of all exact computation.
pub type Rational = num_rational::BigRational;

/// Shorthand for building a rational from machine integers.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Renders `x` rounded to `digits` significant decimal digits (round half to
/// even). Zero renders as `"0."` followed by `digits` zeros, matching the
/// fixed-width style of the coefficient tables.
pub fn decimal_string(x: &Rational, digits: usize) -> String {
    assert!(digits >= 1, "digits must be >= 1");
    if x.is_zero() {
        return format!("0.{}", "0".repeat(digits));
    }
    let neg = x.is_negative();
    let n = x.numer().abs();
    let d = x.denom().clone();

    // Decimal exponent e with 10^e <= |x| < 10^(e+1).
    let mut exp10: i64 = 0;
    let ten = BigInt::from(10);
    let mut scaled_n = n.clone();
    let mut scaled_d = d.clone();
    while scaled_n >= scaled_d {
        scaled_d *= &ten;
        exp10 += 1;
    }
    while scaled_n < scaled_d {
        scaled_n *= &ten;
        exp10 -= 1;
    }
    // Loop above overshoots by one: now 10^exp10 <= |x| holds again.

    // Round |x| * 10^(digits-1-exp10) to an integer mantissa.
    let shift = digits as i64 - 1 - exp10;
    let (mut num, mut den) = (n, d);
    if shift >= 0 {
        num *= ten.pow(shift as u32);
    } else {
        den *= ten.pow((-shift) as u32);
    }
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    let mut mant = q;
    let twice_r: BigInt = &r * BigInt::from(2);
    let round_up = match twice_r.cmp(&den) {
        std::cmp::Ordering::Greater => true,
        std::cmp::Ordering::Less => false,
        std::cmp::Ordering::Equal => num_integer::Integer::is_odd(&mant),
    };
    if round_up {
        mant += 1;
    }
    if mant == ten.pow(digits as u32) {
        // Rounding carried into an extra digit, e.g. 0.999 -> 1.00.
        mant = ten.pow(digits as u32 - 1);
        exp10 += 1;
    }

    let mant_str = mant.to_str_radix(10);
    debug_assert_eq!(mant_str.len(), digits);
    debug_assert_eq!(mant.sign(), Sign::Plus);

    let body = if exp10 >= digits as i64 - 1 {
        // Integer with trailing zeros.
        let zeros = exp10 as usize + 1 - digits;
        format!("{}{}", mant_str, "0".repeat(zeros))
    } else if exp10 >= 0 {
        let point = exp10 as usize + 1;
        format!("{}.{}", &mant_str[..point], &mant_str[point..])
    } else {
        format!("0.{}{}", "0".repeat((-exp10) as usize - 1), mant_str)
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}
