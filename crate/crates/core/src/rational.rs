//! Exact rational scalars and parsing helpers.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Arbitrary-precision rational number used for all weights and coordinates.
pub type Rational = num_rational::BigRational;

/// Error returned by [`parse_rational`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseRationalError {
    input: String,
}

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational literal {:?}", self.input)
    }
}

impl core::error::Error for ParseRationalError {}

fn parse_bigint(s: &str) -> Option<BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Parses `"p/q"` (integers, `q > 0`), an integer, or a finite decimal such
/// as `"1.25"`. No exponents, no whitespace inside the number.
pub fn parse_rational(input: &str) -> Result<Rational, ParseRationalError> {
    let err = || ParseRationalError {
        input: String::from(input),
    };
    let s = input.trim();
    let (neg, s) = match s.as_bytes().first() {
        Some(b'-') => (true, &s[1..]),
        Some(b'+') => (false, &s[1..]),
        _ => (false, s),
    };
    let magnitude = if let Some((num, den)) = s.split_once('/') {
        let num = parse_bigint(num).ok_or_else(err)?;
        let den = parse_bigint(den).ok_or_else(err)?;
        if den.is_zero() {
            return Err(err());
        }
        Rational::new(num, den)
    } else if let Some((int, frac)) = s.split_once('.') {
        if int.is_empty() && frac.is_empty() {
            return Err(err());
        }
        let int = if int.is_empty() {
            BigInt::zero()
        } else {
            parse_bigint(int).ok_or_else(err)?
        };
        let frac_digits = frac.len() as u32;
        let frac = if frac.is_empty() {
            BigInt::zero()
        } else {
            parse_bigint(frac).ok_or_else(err)?
        };
        let scale = BigInt::from(10u8).pow(frac_digits);
        Rational::new(int * &scale + frac, scale)
    } else {
        Rational::from(parse_bigint(s).ok_or_else(err)?)
    };
    Ok(if neg { -magnitude } else { magnitude })
}

/// Formats a rational as `p` or `p/q` in lowest terms, `q > 0`.
pub fn format_rational(r: &Rational) -> String {
    use alloc::format;
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Scales a nonzero rational vector by a positive factor to the unique
/// primitive integer vector with the same direction. Returns `None` for the
/// zero vector.
///
/// Two vectors are positive multiples of each other exactly when their
/// primitive directions are equal, which makes this the canonical form for
/// comparing vertex directions across different weightings.
pub fn primitive_direction(v: &[Rational]) -> Option<Vec<BigInt>> {
    if v.iter().all(|x| x.is_zero()) {
        return None;
    }
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let mut gcd = BigInt::zero();
    for x in &ints {
        gcd = gcd.gcd(x);
    }
    Some(ints.into_iter().map(|x| x / &gcd).collect())
}

/// Convenience constructor for small rationals.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}
