//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses `"p"` or `"p/q"`. Accepts the Unicode minus sign as well as `-`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let cleaned: String = text.trim().replace('\u{2212}', "-");
    let bad = || Error::parse(format!("rational {text:?}"), "expected \"p\" or \"p/q\"");
    let (num, den) = match cleaned.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (cleaned.as_str(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::parse(format!("rational {text:?}"), "zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn factorial(n: usize) -> Rational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Rational::from_integer(acc)
}

pub(crate) fn is_negative_half_integer(r: &Rational) -> bool {
    // r = -1/2 - n for some n >= 0  <=>  2r is an odd negative integer
    let twice = r * int(2);
    twice.is_integer() && twice.is_negative() && twice.numer() % BigInt::from(2) != BigInt::zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-1/2").unwrap(), frac(-1, 2));
        assert_eq!(parse_rational("\u{2212}1/2").unwrap(), frac(-1, 2));
        assert_eq!(parse_rational("4/6").unwrap(), frac(2, 3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("0.5").is_err());
    }

    #[test]
    fn canonical_text() {
        assert_eq!(format_rational(&frac(-2, 4)), "-1/2");
        assert_eq!(format_rational(&int(0)), "0");
        assert_eq!(format_rational(&frac(6, 3)), "2");
    }

    #[test]
    fn half_integer_lattice() {
        assert!(is_negative_half_integer(&frac(-1, 2)));
        assert!(is_negative_half_integer(&frac(-7, 2)));
        assert!(!is_negative_half_integer(&frac(1, 2)));
        assert!(!is_negative_half_integer(&int(-1)));
        assert!(!is_negative_half_integer(&frac(-1, 3)));
    }
}
