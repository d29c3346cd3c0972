use num_bigint::BigInt;
use num_rational::BigRational;

use crate::AlgebraError;

/// Exact rational number, always normalized with a positive denominator.
pub type Rational = BigRational;

/// Builds `n / d`.
///
/// # Panics
/// Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Builds the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p` or `p/q` with optional leading sign.
pub fn parse_rational(s: &str) -> Result<Rational, AlgebraError> {
    let err = |msg: &str| AlgebraError::Parse { pos: 0, msg: format!("{msg}: {s:?}") };
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| err("bad numerator"))?;
    let d: BigInt = den.parse().map_err(|_| err("bad denominator"))?;
    if d == BigInt::from(0) {
        return Err(err("zero denominator"));
    }
    Ok(Rational::new(n, d))
}
