//! Exact rational scalars and parsing helpers.
//!
//! All rational quantities in the crate (family parameters, fraction
//! elements, convergents) are `num_rational::BigRational` values: reduced,
//! arbitrary precision, denominator always positive. This module adds the
//! construction and string-format helpers the rest of the crate and the
//! CLI scheme files rely on.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

pub type BigRational = num_rational::BigRational;

/// Shorthand for a rational from machine integers. Panics on `den == 0`.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an integer-valued rational.
pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `"num/den"` or `"int"` with optional sign, e.g. `-3/4`, `7`.
pub fn parse_ratio(s: &str) -> Result<BigRational, ParseRationalError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRationalError::new(s, "empty string"));
    }
    match s.split_once('/') {
        None => {
            let n: BigInt = s
                .parse()
                .map_err(|_| ParseRationalError::new(s, "invalid integer"))?;
            Ok(BigRational::from_integer(n))
        }
        Some((num, den)) => {
            let n: BigInt = num
                .trim()
                .parse()
                .map_err(|_| ParseRationalError::new(s, "invalid numerator"))?;
            let d: BigInt = den
                .trim()
                .parse()
                .map_err(|_| ParseRationalError::new(s, "invalid denominator"))?;
            if d.is_zero() {
                return Err(ParseRationalError::new(s, "zero denominator"));
            }
            Ok(BigRational::new(n, d))
        }
    }
}

/// Parses a decimal or scientific literal (`0.25`, `1e-12`, `2.5e3`) into
/// the exact rational it denotes.
pub fn parse_decimal(s: &str) -> Result<BigRational, ParseRationalError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRationalError::new(s, "empty string"));
    }
    if s.contains('/') {
        return parse_ratio(s);
    }
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        None => (s, 0i64),
        Some((m, e)) => (
            m,
            e.parse()
                .map_err(|_| ParseRationalError::new(s, "invalid exponent"))?,
        ),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        None => (mantissa, ""),
        Some((i, f)) => (i, f),
    };
    let digits = format!("{int_part}{frac_part}");
    let digits = if digits.is_empty() || digits == "-" || digits == "+" {
        return Err(ParseRationalError::new(s, "no digits"));
    } else {
        digits
    };
    let n: BigInt = digits
        .parse()
        .map_err(|_| ParseRationalError::new(s, "invalid mantissa"))?;
    let scale = exp - frac_part.len() as i64;
    let ten = BigInt::from(10);
    Ok(if scale >= 0 {
        BigRational::from_integer(n * ten.pow(scale as u32))
    } else {
        BigRational::new(n, ten.pow((-scale) as u32))
    })
}

/// Renders an integer-valued rational without the `/1` suffix; fractions
/// render as `num/den`.
pub fn display_ratio(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// True when the affine form `p + q*k` has a root at some integer `k >= from`.
pub fn affine_integer_root_at_least(p: &BigRational, q: &BigRational, from: u64) -> Option<u64> {
    if q.is_zero() {
        return None; // constant: root everywhere or nowhere, handled by caller
    }
    let root = -(p / q);
    if !root.is_integer() || root.is_negative() {
        return None;
    }
    let root = root.to_integer();
    if root >= BigInt::from(from) {
        // the roots we care about are small level indices
        let (_, digits) = root.to_u64_digits();
        match digits.len() {
            0 => Some(0),
            1 => Some(digits[0]),
            _ => None, // astronomically deep; unreachable in practice
        }
    } else {
        None
    }
}

/// Evaluates `p + q*k`.
pub fn affine_eval(p: &BigRational, q: &BigRational, k: u64) -> BigRational {
    p + q * BigRational::from_integer(BigInt::from(k))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse rational `{input}`: {reason}")]
pub struct ParseRationalError {
    input: String,
    reason: &'static str,
}

impl ParseRationalError {
    fn new(input: &str, reason: &'static str) -> Self {
        Self {
            input: input.to_string(),
            reason,
        }
    }
}
