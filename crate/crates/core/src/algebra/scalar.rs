//! Exact rational scalars.
//!
//! Everything numeric in the crate is a [`Scalar`]: an arbitrary-precision
//! rational kept in lowest terms with a positive denominator. The textual
//! form is `num/den`, with `/den` omitted for integers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn from_bigint(n: BigInt) -> Scalar {
    Scalar::from_integer(n)
}

pub fn format_scalar(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let s = s.trim();
    let parse_int = |t: &str| {
        t.trim()
            .parse::<BigInt>()
            .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
    };
    match s.split_once('/') {
        None => Ok(Scalar::from_integer(parse_int(s)?)),
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(Error::Parse(format!("{s:?}: zero denominator")));
            }
            Ok(Scalar::new(parse_int(n)?, den))
        }
    }
}

/// Serde adapter writing a [`Scalar`] as its `num/den` string.
pub mod as_string {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Scalar, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_scalar(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Scalar, D::Error> {
        let s = String::deserialize(d)?;
        parse_scalar(&s).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for `Vec<Scalar>` as an array of `num/den` strings.
pub mod vec_as_strings {
    use super::*;
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(xs: &[Scalar], s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(xs.len()))?;
        for x in xs {
            seq.serialize_element(&format_scalar(x))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Scalar>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|s| parse_scalar(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lowest_terms_positive_denominator() {
        let x = ratio(6, -4);
        assert_eq!(format_scalar(&x), "-3/2");
        assert_eq!(format_scalar(&int(42)), "42");
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("abc").is_err());
        assert!(parse_scalar("").is_err());
    }

    proptest! {
        #[test]
        fn string_round_trip(n in any::<i64>(), d in 1i64..1_000_000) {
            let x = ratio(n, d);
            prop_assert_eq!(parse_scalar(&format_scalar(&x)).unwrap(), x);
        }
    }
}
