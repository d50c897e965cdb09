//! Exact half-integer arithmetic.
//!
//! Segment endpoints, Jacquet exponents and L-function shifts are all of the
//! form `k/2` with `k` an integer.  Storing the doubled value keeps every
//! comparison and every shift exact; no floating point appears anywhere in
//! this crate.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::error::{Error, Result};

/// A number of the form `k/2` with `k: i64`, stored as `k`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt {
    doubled: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { doubled: 0 };
    pub const ONE: HalfInt = HalfInt { doubled: 2 };
    pub const HALF: HalfInt = HalfInt { doubled: 1 };

    /// Builds `k/2` from the doubled value `k`.
    pub fn from_doubled(doubled: i64) -> Self {
        HalfInt { doubled }
    }

    pub fn from_int(n: i64) -> Self {
        HalfInt { doubled: 2 * n }
    }

    /// `n/2` as a half-integer.
    pub fn half_of(n: i64) -> Self {
        HalfInt { doubled: n }
    }

    pub fn doubled(self) -> i64 {
        self.doubled
    }

    pub fn is_integer(self) -> bool {
        self.doubled % 2 == 0
    }

    pub fn as_integer(self) -> Option<i64> {
        if self.is_integer() {
            Some(self.doubled / 2)
        } else {
            None
        }
    }

    pub fn abs(self) -> Self {
        HalfInt { doubled: self.doubled.abs() }
    }

    pub fn is_positive(self) -> bool {
        self.doubled > 0
    }

    /// True when `self - other` is an integer, i.e. both live on the same
    /// step-1 lattice.
    pub fn same_lattice(self, other: HalfInt) -> bool {
        (self.doubled - other.doubled) % 2 == 0
    }

    /// Parses `"2"`, `"-1"`, `"3/2"`, `"-1/2"`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Document(format!("cannot parse half-integer `{s}`"));
        if let Some((num, den)) = s.split_once('/') {
            if den.trim() != "2" {
                return Err(bad());
            }
            let n: i64 = num.trim().parse().map_err(|_| bad())?;
            if n % 2 == 0 {
                return Err(bad());
            }
            Ok(HalfInt::half_of(n))
        } else {
            let n: i64 = s.parse().map_err(|_| bad())?;
            Ok(HalfInt::from_int(n))
        }
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt { doubled: self.doubled + rhs.doubled }
    }
}

impl AddAssign for HalfInt {
    fn add_assign(&mut self, rhs: HalfInt) {
        self.doubled += rhs.doubled;
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt { doubled: self.doubled - rhs.doubled }
    }
}

impl SubAssign for HalfInt {
    fn sub_assign(&mut self, rhs: HalfInt) {
        self.doubled -= rhs.doubled;
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt { doubled: -self.doubled }
    }
}

impl Mul<i64> for HalfInt {
    type Output = HalfInt;
    fn mul(self, rhs: i64) -> HalfInt {
        HalfInt { doubled: self.doubled * rhs }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.doubled % 2 == 0 {
            write!(f, "{}", self.doubled / 2)
        } else {
            write!(f, "{}/2", self.doubled)
        }
    }
}

impl fmt::Debug for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_is_exact() {
        let a = HalfInt::half_of(3); // 3/2
        let b = HalfInt::from_int(2);
        assert_eq!((a + b).doubled(), 7);
        assert_eq!((b - a), HalfInt::HALF);
        assert_eq!(-a, HalfInt::half_of(-3));
        assert!(a < b);
        assert!(!a.is_integer());
        assert!(b.is_integer());
        assert_eq!(b.as_integer(), Some(2));
        assert_eq!(a.as_integer(), None);
    }

    #[test]
    fn display_and_parse_round_trip() {
        for d in -9i64..=9 {
            let x = HalfInt::from_doubled(d);
            let s = x.to_string();
            assert_eq!(HalfInt::parse(&s).unwrap(), x, "through `{s}`");
        }
        assert_eq!(HalfInt::parse("3/2").unwrap(), HalfInt::half_of(3));
        assert_eq!(HalfInt::parse("-1/2").unwrap(), HalfInt::half_of(-1));
        assert!(HalfInt::parse("1/3").is_err());
        assert!(HalfInt::parse("2/2").is_err());
    }

    #[test]
    fn lattice_test() {
        assert!(HalfInt::from_int(2).same_lattice(HalfInt::from_int(-5)));
        assert!(HalfInt::half_of(1).same_lattice(HalfInt::half_of(5)));
        assert!(!HalfInt::half_of(1).same_lattice(HalfInt::from_int(1)));
    }
}
