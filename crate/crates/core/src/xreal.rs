//! Exact arithmetic on the extended half-line `[0, ∞]`.
//!
//! Values are nonnegative rationals in lowest terms or the top element `∞`,
//! with the degenerate-case conventions used throughout the crate:
//! `∞ - ∞ = 0` (inside truncated subtraction) and `∞·0 = 0` (when scaling
//! by infinity). Everything is exact; there are no floats anywhere, so
//! zero-tests such as "is this distance value exactly 0?" are sound.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::Ratio;
use num::traits::{One, Signed, Zero};

use crate::Error;

pub type Rational = Ratio<BigInt>;

/// An exact value in `[0, ∞]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtReal {
    Finite(Rational),
    Infinite,
}

use ExtReal::{Finite, Infinite};

impl ExtReal {
    pub fn zero() -> Self {
        Finite(Rational::zero())
    }

    pub fn infinity() -> Self {
        Infinite
    }

    pub fn from_int(n: u64) -> Self {
        Finite(Rational::from_integer(BigInt::from(n)))
    }

    /// Builds `numer/denom`. Fails on a zero denominator.
    pub fn ratio(numer: u64, denom: u64) -> Self {
        assert!(denom != 0, "zero denominator");
        Finite(Ratio::new(BigInt::from(numer), BigInt::from(denom)))
    }

    /// Wraps a rational, rejecting negatives.
    pub fn from_rational(r: Rational) -> Result<Self, Error> {
        if r.is_negative() {
            Err(Error::NegativeValue(r.to_string()))
        } else {
            Ok(Finite(r))
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Finite(r) if r.is_zero())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Finite(_))
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Finite(r) => Some(r),
            Infinite => None,
        }
    }

    /// Truncated subtraction `(self - other)₊`, with `∞ - ∞ = 0`,
    /// `∞ - r = ∞` and `r - ∞ = 0` for finite `r`.
    pub fn truncated_sub(&self, other: &ExtReal) -> ExtReal {
        match (self, other) {
            (Infinite, Infinite) => ExtReal::zero(),
            (Infinite, Finite(_)) => Infinite,
            (Finite(_), Infinite) => ExtReal::zero(),
            (Finite(a), Finite(b)) => {
                if a <= b {
                    ExtReal::zero()
                } else {
                    Finite(a - b)
                }
            }
        }
    }

    /// Multiplication by `∞`: sends `0` to `0` and everything else to `∞`.
    /// Collapses a value table to its zero-set.
    pub fn times_infinity(&self) -> ExtReal {
        if self.is_zero() {
            ExtReal::zero()
        } else {
            Infinite
        }
    }

    /// Doubles the value (`∞` stays `∞`).
    pub fn double(&self) -> ExtReal {
        match self {
            Infinite => Infinite,
            Finite(r) => Finite(r + r),
        }
    }

    /// Halves the value (`∞` stays `∞`).
    pub fn halve(&self) -> ExtReal {
        match self {
            Infinite => Infinite,
            Finite(r) => Finite(r / Rational::from_integer(BigInt::from(2))),
        }
    }

    /// Exact supremum of an iterator, with `sup ∅ = 0`.
    pub fn sup<T, I>(values: I) -> ExtReal
    where
        T: std::borrow::Borrow<ExtReal>,
        I: IntoIterator<Item = T>,
    {
        values.into_iter().fold(ExtReal::zero(), |acc, v| {
            let v = v.borrow();
            if *v > acc {
                v.clone()
            } else {
                acc
            }
        })
    }

    /// Exact infimum of an iterator, with `inf ∅ = ∞`.
    pub fn inf<T, I>(values: I) -> ExtReal
    where
        T: std::borrow::Borrow<ExtReal>,
        I: IntoIterator<Item = T>,
    {
        values.into_iter().fold(Infinite, |acc, v| {
            let v = v.borrow();
            if *v < acc {
                v.clone()
            } else {
                acc
            }
        })
    }
}

impl Add for &ExtReal {
    type Output = ExtReal;

    fn add(self, rhs: &ExtReal) -> ExtReal {
        match (self, rhs) {
            (Infinite, _) | (_, Infinite) => Infinite,
            (Finite(a), Finite(b)) => Finite(a + b),
        }
    }
}

impl Add for ExtReal {
    type Output = ExtReal;

    fn add(self, rhs: ExtReal) -> ExtReal {
        &self + &rhs
    }
}

impl PartialOrd for ExtReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtReal {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Infinite, Infinite) => Ordering::Equal,
            (Infinite, Finite(_)) => Ordering::Greater,
            (Finite(_), Infinite) => Ordering::Less,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Infinite => write!(f, "inf"),
            Finite(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

impl FromStr for ExtReal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") || s == "∞" {
            return Ok(Infinite);
        }
        let parse_int = |t: &str| -> Result<BigInt, Error> {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("not a rational: `{s}`")))
        };
        let r = match s.split_once('/') {
            Some((n, d)) => {
                let denom = parse_int(d)?;
                if denom.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in `{s}`")));
                }
                Ratio::new(parse_int(n)?, denom)
            }
            None => Ratio::from_integer(parse_int(s)?),
        };
        ExtReal::from_rational(r)
    }
}

impl serde::Serialize for ExtReal {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for ExtReal {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
