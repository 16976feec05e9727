//! Exact rational values.
//!
//! Every value in the system is a [`Rat`]: an arbitrary-precision fraction
//! kept in lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `num / den` reduced to lowest terms. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn is_integer(x: &Rat) -> bool {
    x.denom().is_one()
}

pub fn is_half_integer(x: &Rat) -> bool {
    let d = x.denom();
    d.is_one() || *d == BigInt::from(2)
}

/// Parses the literal grammar used by the file format and CLI:
/// an optionally signed integer, optionally followed by `/q` with `q > 0`.
pub fn parse_rat(text: &str) -> Result<Rat, RatSyntaxError> {
    let (num_text, den_text) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let num = parse_signed(num_text).ok_or(RatSyntaxError::Malformed)?;
    let den = match den_text {
        None => BigInt::one(),
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(RatSyntaxError::Malformed);
            }
            let d: BigInt = d.parse().map_err(|_| RatSyntaxError::Malformed)?;
            if d.is_zero() {
                return Err(RatSyntaxError::ZeroDenominator);
            }
            d
        }
    };
    Ok(Rat::new(num, den))
}

fn parse_signed(text: &str) -> Option<BigInt> {
    let digits = text.strip_prefix(['+', '-']).unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let magnitude: BigInt = digits.parse().ok()?;
    Some(if text.starts_with('-') {
        -magnitude
    } else {
        magnitude
    })
}

/// Canonical text: `p` for integers, `p/q` otherwise, always in lowest terms.
pub fn format_rat(x: &Rat) -> String {
    if is_integer(x) {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum RatSyntaxError {
    #[error("malformed rational")]
    Malformed,
    #[error("zero denominator")]
    ZeroDenominator,
}

/// Least common multiple of the denominators of `values` (1 for an empty slice).
pub(crate) fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

pub(crate) fn is_positive(x: &Rat) -> bool {
    x.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rat("3").unwrap(), int(3));
        assert_eq!(parse_rat("-3").unwrap(), int(-3));
        assert_eq!(parse_rat("+7").unwrap(), int(7));
        assert_eq!(parse_rat("2/4").unwrap(), ratio(1, 2));
        assert_eq!(parse_rat("-6/3").unwrap(), int(-2));
        assert_eq!(parse_rat("007").unwrap(), int(7));
    }

    #[test]
    fn rejects_bad_literals() {
        assert_eq!(parse_rat("3/0"), Err(RatSyntaxError::ZeroDenominator));
        for bad in [
            "", "-", "1/", "/2", "1/-2", "1.5", "a", "1 /2", "--1", "1/2/3",
        ] {
            assert_eq!(parse_rat(bad), Err(RatSyntaxError::Malformed), "{bad:?}");
        }
    }

    #[test]
    fn formats_in_lowest_terms() {
        assert_eq!(format_rat(&ratio(2, 2)), "1");
        assert_eq!(format_rat(&ratio(-3, 6)), "-1/2");
        assert_eq!(format_rat(&int(0)), "0");
    }

    #[test]
    fn half_integrality() {
        assert!(is_half_integer(&ratio(3, 2)));
        assert!(is_half_integer(&int(4)));
        assert!(!is_half_integer(&ratio(1, 3)));
        assert!(!is_integer(&ratio(1, 2)));
    }

    #[test]
    fn common_denominator_is_lcm() {
        let vals = [ratio(1, 2), ratio(1, 3), int(5), ratio(3, 4)];
        assert_eq!(common_denominator(&vals), BigInt::from(12));
    }
}
