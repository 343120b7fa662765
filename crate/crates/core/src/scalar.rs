//! Numeric abstraction shared by every module.
//!
//! All algorithms are written against [`Scalar`]. The exact instantiation
//! ([`crate::Rational`]) is what the guarantees are stated for; `f64` is
//! accepted for quick experiments on integer-coordinate input.

use std::cmp::Ordering;
use std::fmt::{Debug, Display};

use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

/// Ordered field element usable as a coordinate, weight or LP value.
pub trait Scalar:
    Clone + Debug + Display + PartialOrd + Num + Signed + FromPrimitive + ToPrimitive + Send + Sync
{
}

impl<T> Scalar for T where
    T: Clone
        + Debug
        + Display
        + PartialOrd
        + Num
        + Signed
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
{
}

pub fn int<T: Scalar>(n: i64) -> T {
    T::from_i64(n).expect("small integer is representable")
}

/// `num / den` in `T`.
pub fn ratio<T: Scalar>(num: i64, den: i64) -> T {
    int::<T>(num) / int::<T>(den)
}

/// Total comparison; panics on unordered values (NaN).
pub fn cmp<T: Scalar>(a: &T, b: &T) -> Ordering {
    a.partial_cmp(b).expect("scalar values must be totally ordered")
}

/// Strictly greater than zero. Unlike `Signed::is_positive`, false for `+0.0`.
pub fn positive<T: Scalar>(v: &T) -> bool {
    v > &T::zero()
}

/// Strictly less than zero. Unlike `Signed::is_negative`, false for `-0.0`.
pub fn negative<T: Scalar>(v: &T) -> bool {
    v < &T::zero()
}

pub fn to_f64<T: Scalar>(v: &T) -> f64 {
    v.to_f64().unwrap_or(f64::NAN)
}

pub fn sum<'a, T: Scalar + 'a>(values: impl IntoIterator<Item = &'a T>) -> T {
    values.into_iter().fold(T::zero(), |acc, v| acc + v.clone())
}
