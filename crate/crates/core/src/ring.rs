//! The base coefficient field (arbitrary-precision rationals) and the ring
//! abstraction shared by matrices over rationals and over polynomials.

use std::fmt::Display;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. `num`'s `BigRational` already keeps the canonical
/// form we require: positive denominator, gcd(|num|, den) = 1.
pub type Rational = num_rational::BigRational;

/// Commutative ring with identity, the coefficient bound for `Matrix<R>`.
/// Implemented by `Rational` and by `MPoly` through the blanket impl.
pub trait Ring:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Display
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Display
{
}

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Rational p/q. Panics on q = 0; for user input go through `parse_rational`.
pub fn ratio(p: i64, q: i64) -> Rational {
    assert!(q != 0, "zero denominator");
    Rational::new(p.into(), q.into())
}

/// Parse `-?digits(/digits)?` into a canonical rational. Column numbers in
/// errors are 1-based offsets into `text`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    parse_rational_at(text, 1, 1)
}

/// Same as `parse_rational` but reporting positions relative to a host file.
pub fn parse_rational_at(text: &str, line: usize, col: usize) -> Result<Rational> {
    let bad = |offset: usize, msg: &str| Error::Parse {
        line,
        col: col + offset,
        msg: msg.to_string(),
    };
    let (num_str, den_str) = match text.find('/') {
        Some(i) => (&text[..i], Some((&text[i + 1..], i + 1))),
        None => (text, None),
    };
    let numer: num_bigint::BigInt = num_str
        .parse()
        .map_err(|_| bad(0, "expected integer numerator"))?;
    let denom: num_bigint::BigInt = match den_str {
        Some((s, off)) => {
            let d: num_bigint::BigInt = s
                .parse()
                .map_err(|_| bad(off, "expected integer denominator"))?;
            if d.is_zero() {
                return Err(bad(off, "zero denominator"));
            }
            d
        }
        None => One::one(),
    };
    Ok(Rational::new(numer, denom))
}

/// Canonical text form: `p/q`, or `p` when the denominator is 1.
/// This is exactly what `BigRational`'s `Display` prints; the function exists
/// so formats spell out the invariant they rely on.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_canonicalizes() {
        assert_eq!(parse_rational("3/6").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("-4").unwrap(), rat(-4));
        assert_eq!(parse_rational("0/5").unwrap(), rat(0));
    }

    #[test]
    fn parse_rejects_zero_denominator() {
        let err = parse_rational("1/0").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("a/2").is_err());
        assert!(parse_rational("1/2/3").is_err());
        assert!(parse_rational("1.5").is_err());
    }

    #[test]
    fn roundtrip_display() {
        for s in ["5/3", "-7/2", "4", "0", "-1"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
    }
}
