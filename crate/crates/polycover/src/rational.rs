//! Exact rational scalars.
//!
//! [`Rat`] wraps an arbitrary-precision rational kept in lowest terms with a
//! positive denominator; the sign lives on the numerator and the canonical
//! zero is 0/1. All arithmetic is exact — there is no floating-point path
//! anywhere in this crate.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::bigint::Sign;
use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::Error;

/// Arbitrary-precision integer re-export used across the crate.
pub type Int = BigInt;

/// An exact rational number, always in lowest terms with denominator > 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    /// Builds p/q in lowest terms. Panics if q = 0.
    pub fn new(p: impl Into<Int>, q: impl Into<Int>) -> Self {
        let q = q.into();
        assert!(!q.is_zero(), "rational with zero denominator");
        Rat(BigRational::new(p.into(), q))
    }

    pub fn from_int(p: impl Into<Int>) -> Self {
        Rat(BigRational::from_integer(p.into()))
    }

    pub fn numer(&self) -> &Int {
        self.0.numer()
    }

    pub fn denom(&self) -> &Int {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rat(self.0.recip())
    }

    /// Largest integer ≤ self.
    pub fn floor(&self) -> Int {
        self.0.floor().to_integer()
    }

    /// Smallest integer ≥ self.
    pub fn ceil(&self) -> Int {
        self.0.ceil().to_integer()
    }

    /// Parses "p/q" or "p" (q = 1); accepts a leading minus on p.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = || Error::Invalid(format!("malformed rational {s:?} (expected \"p/q\" or \"p\")"));
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p, q),
            None => (s, "1"),
        };
        let p: Int = p.trim().parse().map_err(|_| bad())?;
        let q: Int = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() || q.sign() == Sign::Minus {
            return Err(Error::Invalid(format!(
                "malformed rational {s:?} (denominator must be a positive integer)"
            )));
        }
        Ok(Rat(BigRational::new(p, q)))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Rat::parse(s)
    }
}

impl From<i64> for Rat {
    fn from(v: i64) -> Self {
        Rat::from_int(v)
    }
}

impl From<Int> for Rat {
    fn from(v: Int) -> Self {
        Rat::from_int(v)
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        // JSON inputs may spell integers as numbers; everything else is "p/q".
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(i64),
            Str(String),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Int(v) => Ok(Rat::from(v)),
            Repr::Str(s) => Rat::parse(&s).map_err(D::Error::custom),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign_method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((self.0).$method(rhs.0))
            }
        }
        impl $trait for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((self.0).$method(&rhs.0))
            }
        }
        impl $assign_trait<&Rat> for Rat {
            fn $assign_method(&mut self, rhs: &Rat) {
                (self.0).$assign_method(&rhs.0);
            }
        }
        impl $assign_trait for Rat {
            fn $assign_method(&mut self, rhs: Rat) {
                (self.0).$assign_method(rhs.0);
            }
        }
    };
}

forward_binop!(Add, add, AddAssign, add_assign);
forward_binop!(Sub, sub, SubAssign, sub_assign);
forward_binop!(Mul, mul, MulAssign, mul_assign);
forward_binop!(Div, div, DivAssign, div_assign);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

/// gcd of the absolute values of a slice, 0 for the empty/zero slice.
pub fn gcd_all<'a>(values: impl IntoIterator<Item = &'a Int>) -> Int {
    values
        .into_iter()
        .fold(Int::zero(), |acc, v| acc.gcd(v))
}

/// lcm of a nonempty iterator of positive integers.
pub fn lcm_all<'a>(values: impl IntoIterator<Item = &'a Int>) -> Int {
    values
        .into_iter()
        .fold(Int::one(), |acc, v| acc.lcm(v))
}

/// Scales a rational vector to a primitive integer vector (entries coprime),
/// preserving direction. Returns the zero vector unchanged.
pub fn primitive_integer(v: &[Rat]) -> Vec<Int> {
    let lcm = lcm_all(v.iter().map(|x| x.denom()));
    let ints: Vec<Int> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let g = gcd_all(ints.iter());
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.into_iter().map(|x| x / &g).collect()
    }
}

/// Comparison helper: lexicographic order on rational vectors.
pub fn lex_cmp(a: &[Rat], b: &[Rat]) -> Ordering {
    a.cmp(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["0", "7", "-3", "1/2", "-22/7", "55/110"] {
            let r = Rat::parse(s).unwrap();
            let back = Rat::parse(&r.to_string()).unwrap();
            assert_eq!(r, back);
        }
        assert_eq!(Rat::parse("55/110").unwrap().to_string(), "1/2");
        assert_eq!(Rat::parse("4/2").unwrap().to_string(), "2");
        assert_eq!(Rat::parse("-0").unwrap(), Rat::zero());
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "1/0", "1/-2", "a/b", "1.5", "1/2/3"] {
            assert!(Rat::parse(s).is_err(), "accepted {s:?}");
        }
    }

    #[test]
    fn lowest_terms_invariant() {
        let r = Rat::new(6, -4);
        assert_eq!(r.numer(), &Int::from(-3));
        assert_eq!(r.denom(), &Int::from(2));
    }

    #[test]
    fn floors_and_ceils() {
        assert_eq!(Rat::new(7, 2).floor(), Int::from(3));
        assert_eq!(Rat::new(7, 2).ceil(), Int::from(4));
        assert_eq!(Rat::new(-7, 2).floor(), Int::from(-4));
        assert_eq!(Rat::new(-7, 2).ceil(), Int::from(-3));
        assert_eq!(Rat::from(5).floor(), Int::from(5));
    }

    #[test]
    fn primitive_integer_clears_and_reduces() {
        let v = vec![Rat::new(1, 2), Rat::new(1, 5), Rat::new(1, 11), Rat::from(-1)];
        assert_eq!(
            primitive_integer(&v),
            [55, 22, 10, -110].map(Int::from).to_vec()
        );
        let w = vec![Rat::from(2), Rat::from(4)];
        assert_eq!(primitive_integer(&w), [1, 2].map(Int::from).to_vec());
    }

    #[test]
    fn serde_uses_pq_strings() {
        let r = Rat::new(4, 6);
        assert_eq!(serde_json::to_string(&r).unwrap(), "\"2/3\"");
        let back: Rat = serde_json::from_str("\"2/3\"").unwrap();
        assert_eq!(back, r);
        let from_int: Rat = serde_json::from_str("3").unwrap();
        assert_eq!(from_int, Rat::from(3));
    }
}
