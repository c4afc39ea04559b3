//! Exact integer and rational helpers, including the JSON encodings used by
//! every serialized report: integers are decimal strings and rationals are
//! `{"num": "...", "den": "..."}` objects in lowest terms.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub type Int = BigInt;
pub type Rational = BigRational;

pub fn int(v: i64) -> Int {
    BigInt::from(v)
}

pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(v: Int) -> Rational {
    BigRational::from_integer(v)
}

pub fn factorial(n: u64) -> Int {
    (1..=n).fold(Int::one(), |acc, i| acc * i)
}

pub fn binomial(n: u64, k: u64) -> Int {
    if k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Exact integer square root when `v` is a perfect square.
pub fn integer_sqrt_exact(v: &Int) -> Option<Int> {
    if v.is_negative() {
        return None;
    }
    let root = v.sqrt();
    (&root * &root == *v).then_some(root)
}

/// A rational in lowest terms is a square iff numerator and denominator are.
pub fn rational_sqrt_exact(v: &Rational) -> Option<Rational> {
    let num = integer_sqrt_exact(v.numer())?;
    let den = integer_sqrt_exact(v.denom())?;
    Some(BigRational::new(num, den))
}

pub fn fmt_rational(v: &Rational) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

#[derive(Serialize, Deserialize)]
struct RationalRepr {
    num: String,
    den: String,
}

fn parse_int<E: serde::de::Error>(s: &str) -> Result<Int, E> {
    s.parse::<Int>()
        .map_err(|_| E::custom(format!("invalid integer {s:?}")))
}

fn to_repr(v: &Rational) -> RationalRepr {
    RationalRepr {
        num: v.numer().to_string(),
        den: v.denom().to_string(),
    }
}

fn from_repr<E: serde::de::Error>(r: RationalRepr) -> Result<Rational, E> {
    let den = parse_int::<E>(&r.den)?;
    if den.is_zero() {
        return Err(E::custom("zero denominator"));
    }
    Ok(BigRational::new(parse_int::<E>(&r.num)?, den))
}

/// `#[serde(with = "exact::int_str")]` for `BigInt` fields.
pub mod int_str {
    use super::*;

    pub fn serialize<S: Serializer>(v: &Int, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Int, D::Error> {
        let s = String::deserialize(d)?;
        parse_int(&s)
    }
}

/// `#[serde(with = "exact::opt_int_str")]` for `Option<BigInt>` fields.
pub mod opt_int_str {
    use super::*;

    pub fn serialize<S: Serializer>(v: &Option<Int>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => s.serialize_some(&v.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Int>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| parse_int(&s))
            .transpose()
    }
}

/// `#[serde(with = "exact::rational")]` for `BigRational` fields.
pub mod rational {
    use super::*;

    pub fn serialize<S: Serializer>(v: &Rational, s: S) -> Result<S::Ok, S::Error> {
        to_repr(v).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        from_repr(RationalRepr::deserialize(d)?)
    }
}

/// `#[serde(with = "exact::rational_matrix")]` for `Vec<Vec<BigRational>>` fields.
pub mod rational_matrix {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<RationalRepr>> = v
            .iter()
            .map(|row| row.iter().map(to_repr).collect())
            .collect();
        rows.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Rational>>, D::Error> {
        let rows = Vec::<Vec<RationalRepr>>::deserialize(d)?;
        rows.into_iter()
            .map(|row| row.into_iter().map(from_repr).collect())
            .collect()
    }
}

/// `#[serde(with = "exact::rational_vec")]` for `Vec<BigRational>` fields.
pub mod rational_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let items: Vec<RationalRepr> = v.iter().map(to_repr).collect();
        items.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        Vec::<RationalRepr>::deserialize(d)?
            .into_iter()
            .map(from_repr)
            .collect()
    }
}
