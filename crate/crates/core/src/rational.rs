//! Exact rational degrees.
//!
//! Degrees are kept in lowest terms with a positive denominator, so equal
//! values have one representation and compare exactly.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(Ratio<i64>);

impl Rational {
    pub const ZERO: Rational = Rational(Ratio::new_raw(0, 1));
    pub const ONE: Rational = Rational(Ratio::new_raw(1, 1));
    pub const MINUS_ONE: Rational = Rational(Ratio::new_raw(-1, 1));

    /// Builds `numer/denom` in canonical form. Panics on a zero denominator.
    pub fn new(numer: i64, denom: i64) -> Self {
        Rational(Ratio::new(numer, denom))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(Ratio::from_integer(n))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn min(self, other: Self) -> Self {
        std::cmp::min(self, other)
    }

    pub fn max(self, other: Self) -> Self {
        std::cmp::max(self, other)
    }

    /// Range check for positive degrees: `0 <= self <= 1`.
    pub fn in_unit(&self) -> bool {
        *self >= Self::ZERO && *self <= Self::ONE
    }

    /// Range check for negative degrees: `-1 <= self <= 0`.
    pub fn in_neg_unit(&self) -> bool {
        *self >= Self::MINUS_ONE && *self <= Self::ZERO
    }

    /// Parses `p/q`, an integer, or an exact decimal such as `-0.35`.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = || Error::BadDegreeLiteral(text.to_string());
        let s = text.trim();
        if s.is_empty() {
            return Err(bad());
        }
        if let Some((n, d)) = s.split_once('/') {
            let numer = parse_signed_int(n).ok_or_else(bad)?;
            let denom: i64 = parse_unsigned(d).ok_or_else(bad)?;
            if denom == 0 {
                return Err(bad());
            }
            return Ok(Rational::new(numer, denom));
        }
        let (negative, body) = match s.as_bytes()[0] {
            b'-' => (true, &s[1..]),
            b'+' => (false, &s[1..]),
            _ => (false, s),
        };
        let (int_part, frac_part) = match body.split_once('.') {
            Some((i, f)) => (i, f),
            None => (body, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        let int_val = if int_part.is_empty() { 0 } else { parse_unsigned(int_part).ok_or_else(bad)? };
        let mut numer = int_val;
        let mut denom: i64 = 1;
        if !frac_part.is_empty() {
            if !frac_part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            for b in frac_part.bytes() {
                numer = numer.checked_mul(10).and_then(|n| n.checked_add(i64::from(b - b'0'))).ok_or_else(bad)?;
                denom = denom.checked_mul(10).ok_or_else(bad)?;
            }
        }
        if negative {
            numer = -numer;
        }
        Ok(Rational::new(numer, denom))
    }
}

fn parse_unsigned(s: &str) -> Option<i64> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

fn parse_signed_int(s: &str) -> Option<i64> {
    match s.strip_prefix('-') {
        Some(rest) => parse_unsigned(rest).map(|v| -v),
        None => parse_unsigned(s.strip_prefix('+').unwrap_or(s)),
    }
}

impl Default for Rational {
    fn default() -> Self {
        Self::ZERO
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Rational::parse(s)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Rational::parse(&s).map_err(serde::de::Error::custom)
    }
}
