//! Integer types that can carry spectral numbers.
//!
//! Spectral numbers are exact fractions `Ratio<T>`. Everything in the crate is
//! written against [`SpectralInt`], so the same code runs over `BigInt` (the
//! default, see [`crate::Rational`]) or a machine integer such as `i64` when
//! the caller knows the denominators stay small.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, ToPrimitive};
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub trait SpectralInt:
    Integer + Signed + Clone + Hash + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    fn from_i64_exact(v: i64) -> Self {
        Self::from_i64(v).expect("spectral integer type cannot hold an i64 value")
    }
}

impl<T> SpectralInt for T where
    T: Integer + Signed + Clone + Hash + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

/// `num / den` as a reduced ratio. Panics on a zero denominator.
pub fn frac<T: SpectralInt>(num: i64, den: i64) -> Ratio<T> {
    assert!(den != 0, "zero denominator");
    Ratio::new(T::from_i64_exact(num), T::from_i64_exact(den))
}

pub fn int<T: SpectralInt>(v: i64) -> Ratio<T> {
    Ratio::from_integer(T::from_i64_exact(v))
}

/// Parses `p/q`, `p` or `-p/q`. Accepts the unicode minus sign.
pub fn parse_rational<T: SpectralInt>(s: &str) -> Result<Ratio<T>> {
    let cleaned: String = s.trim().replace('\u{2212}', "-");
    let bad = || Error::Parse(format!("malformed rational `{s}`"));
    let parse_int = |t: &str| -> Result<T> {
        let t = t.trim();
        let t = t.strip_prefix('+').unwrap_or(t);
        if t.is_empty() || !t.trim_start_matches('-').chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        T::from_str_radix(t, 10).map_err(|_| bad())
    };
    match cleaned.split_once('/') {
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(Ratio::new(parse_int(p)?, den))
        }
        None => Ok(Ratio::from_integer(parse_int(&cleaned)?)),
    }
}

/// Formats a ratio as `p/q`, or `p` for integers.
pub fn fmt_rational<T: SpectralInt>(q: &Ratio<T>) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Integers in JSON: a number when it fits in an `i64`, a decimal string otherwise.
pub(crate) fn serialize_int<T: SpectralInt, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    match v.to_i64() {
        Some(x) => s.serialize_i64(x),
        None => s.serialize_str(&v.to_string()),
    }
}

pub(crate) fn deserialize_int<'de, T: SpectralInt, D: Deserializer<'de>>(d: D) -> Result<T, D::Error> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Int(i64),
        Text(String),
    }
    match Repr::deserialize(d)? {
        Repr::Int(v) => T::from_i64(v).ok_or_else(|| de::Error::custom("integer out of range")),
        Repr::Text(t) => T::from_str_radix(t.trim(), 10).map_err(|_| de::Error::custom(format!("bad integer `{t}`"))),
    }
}

/// JSON shape `{"num":…, "den":…}` of a rational.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct RationalJson<T: SpectralInt> {
    #[serde(serialize_with = "serialize_int", deserialize_with = "deserialize_int")]
    pub num: T,
    #[serde(serialize_with = "serialize_int", deserialize_with = "deserialize_int")]
    pub den: T,
}

impl<T: SpectralInt> From<&Ratio<T>> for RationalJson<T> {
    fn from(q: &Ratio<T>) -> Self {
        RationalJson { num: q.numer().clone(), den: q.denom().clone() }
    }
}

impl<T: SpectralInt> TryFrom<RationalJson<T>> for Ratio<T> {
    type Error = Error;

    fn try_from(j: RationalJson<T>) -> Result<Self> {
        if j.den.is_zero() {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        Ok(Ratio::new(j.num, j.den))
    }
}

/// Serde adapter for `Ratio<T>` fields, used with `#[serde(with = "crate::scalar::rational_serde")]`.
pub mod rational_serde {
    use super::*;

    pub fn serialize<T: SpectralInt, S: Serializer>(q: &Ratio<T>, s: S) -> Result<S::Ok, S::Error> {
        RationalJson::from(q).serialize(s)
    }

    pub fn deserialize<'de, T: SpectralInt, D: Deserializer<'de>>(d: D) -> Result<Ratio<T>, D::Error> {
        let j = RationalJson::<T>::deserialize(d)?;
        Ratio::try_from(j).map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn parses_fractions_and_integers() {
        let q: Ratio<BigInt> = parse_rational("-2/6").unwrap();
        assert_eq!(q, frac(-1, 3));
        assert_eq!(parse_rational::<i64>("4").unwrap(), int(4));
        assert_eq!(parse_rational::<i64>("\u{2212}1/2").unwrap(), frac(-1, 2));
        assert_eq!(parse_rational::<i64>("+3/9").unwrap(), frac(1, 3));
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "1/0", "a/2", "1/2/3", "1.5", "--1"] {
            assert!(parse_rational::<i64>(s).is_err(), "{s}");
        }
    }

    #[test]
    fn big_values_serialize_as_strings() {
        let big: BigInt = BigInt::from(1u8) << 80;
        let j = RationalJson { num: big.clone(), den: BigInt::from(3) };
        let text = serde_json::to_string(&j).unwrap();
        assert_eq!(text, format!("{{\"num\":\"{big}\",\"den\":3}}"));
        let back: RationalJson<BigInt> = serde_json::from_str(&text).unwrap();
        assert_eq!(back, j);
    }
}
