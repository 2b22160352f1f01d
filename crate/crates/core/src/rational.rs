//! Exact rationals serialized as `"p/q"` strings so reports never contain
//! floats.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::Error;

/// Canonical form: reduced, positive denominator, always with the `/q` part
/// (`"3/1"`, `"-1/2"`).
pub fn format_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `"p/q"` or a bare integer `"p"`.
pub fn parse_rational(s: &str, index: usize) -> Result<BigRational, Error> {
    let invalid = || Error::InvalidRational {
        index,
        text: s.to_string(),
    };
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.trim().parse().map_err(|_| invalid())?;
    let den: BigInt = den.trim().parse().map_err(|_| invalid())?;
    if den == BigInt::from(0) {
        return Err(invalid());
    }
    Ok(BigRational::new(num, den))
}

pub fn rational_int(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

pub fn rational_frac(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn one() -> BigRational {
    BigRational::one()
}
