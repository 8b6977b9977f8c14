use core::fmt;
use core::iter::Sum;
use core::ops::{Add, AddAssign, Mul};
use core::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// An exact, arbitrary-precision, nonnegative count.
///
/// Serializes as a plain decimal string; `Display` and `FromStr` round-trip.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Count(BigUint);

impl Count {
    pub fn zero() -> Self {
        Count(BigUint::zero())
    }

    pub fn one() -> Self {
        Count(BigUint::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `self - rhs`, clamped at zero.
    pub fn saturating_sub(&self, rhs: &Count) -> Count {
        if self.0 > rhs.0 {
            Count(&self.0 - &rhs.0)
        } else {
            Count::zero()
        }
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }

    /// The value as a `u64`, if it fits.
    pub fn to_u64(&self) -> Option<u64> {
        num_traits::ToPrimitive::to_u64(&self.0)
    }
}

impl From<BigUint> for Count {
    fn from(v: BigUint) -> Self {
        Count(v)
    }
}

macro_rules! from_unsigned {
    ($($t:ty),*) => {$(
        impl From<$t> for Count {
            fn from(v: $t) -> Self {
                Count(BigUint::from(v))
            }
        }
        impl PartialEq<$t> for Count {
            fn eq(&self, other: &$t) -> bool {
                self.0 == BigUint::from(*other)
            }
        }
    )*};
}
from_unsigned!(u8, u16, u32, u64, u128, usize);

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// A string that is not a plain nonnegative decimal integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseCountError;

impl fmt::Display for ParseCountError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("count must be a nonnegative decimal integer")
    }
}

impl core::error::Error for ParseCountError {}

impl FromStr for Count {
    type Err = ParseCountError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        // BigUint accepts a leading '+' and '_' separators; counts do not.
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseCountError);
        }
        BigUint::parse_bytes(s.as_bytes(), 10)
            .map(Count)
            .ok_or(ParseCountError)
    }
}

impl Add for Count {
    type Output = Count;
    fn add(self, rhs: Count) -> Count {
        Count(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a Count> for Count {
    type Output = Count;
    fn add(self, rhs: &'a Count) -> Count {
        Count(self.0 + &rhs.0)
    }
}

impl AddAssign for Count {
    fn add_assign(&mut self, rhs: Count) {
        self.0 += rhs.0;
    }
}

impl<'a> AddAssign<&'a Count> for Count {
    fn add_assign(&mut self, rhs: &'a Count) {
        self.0 += &rhs.0;
    }
}

impl Mul for Count {
    type Output = Count;
    fn mul(self, rhs: Count) -> Count {
        Count(self.0 * rhs.0)
    }
}

impl<'a> Mul<&'a Count> for &'a Count {
    type Output = Count;
    fn mul(self, rhs: &'a Count) -> Count {
        Count(&self.0 * &rhs.0)
    }
}

impl Mul<u64> for Count {
    type Output = Count;
    fn mul(self, rhs: u64) -> Count {
        Count(self.0 * rhs)
    }
}

impl Sum for Count {
    fn sum<I: Iterator<Item = Count>>(iter: I) -> Count {
        iter.fold(Count::zero(), |acc, c| acc + c)
    }
}

impl<'a> Sum<&'a Count> for Count {
    fn sum<I: Iterator<Item = &'a Count>>(iter: I) -> Count {
        iter.fold(Count::zero(), |acc, c| acc + c)
    }
}
