//! Scalar abstractions.
//!
//! [`Field`] is what sequences are evaluated over: anything `num_traits::Num`
//! with negation (`BigRational`, `Ratio<i64>`, `f64`, `f32`). [`Scalar`] is the
//! weaker commutative-ring interface the hybrid algebra needs; it is also
//! implemented by [`QuadExt`](crate::QuadExt), whose zero and one depend on the
//! radicand and so cannot come from `num_traits::Zero`/`One`.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Num;

pub trait Field: Num + Clone + Neg<Output = Self> + Debug + Send + Sync {}

impl<T> Field for T where T: Num + Clone + Neg<Output = T> + Debug + Send + Sync {}

/// Commutative ring element with value-derived identities.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Additive identity in the same ring as `self`.
    fn zero_like(&self) -> Self;
    /// Multiplicative identity in the same ring as `self`.
    fn one_like(&self) -> Self;
    /// Exact test for the additive identity.
    fn vanishes(&self) -> bool;
    /// Whether `self` and `other` may be combined. Always true for plain fields.
    fn compatible(&self, _other: &Self) -> bool {
        true
    }
}

impl<T: Field> Scalar for T {
    fn zero_like(&self) -> Self {
        T::zero()
    }

    fn one_like(&self) -> Self {
        T::one()
    }

    fn vanishes(&self) -> bool {
        self.is_zero()
    }
}

/// `x^n` for any integer `n`, by binary exponentiation. Negative powers invert
/// `x` first, so `x` must be nonzero when `n < 0`.
pub fn powi<T: Field>(x: &T, n: i64) -> T {
    if n < 0 {
        let inv = T::one() / x.clone();
        return pow_u(&inv, n.unsigned_abs());
    }
    pow_u(x, n as u64)
}

pub(crate) fn pow_u<T: Field>(x: &T, mut n: u64) -> T {
    let mut acc = T::one();
    let mut base = x.clone();
    while n > 0 {
        if n & 1 == 1 {
            acc = acc * base.clone();
        }
        n >>= 1;
        if n > 0 {
            base = base.clone() * base;
        }
    }
    acc
}

/// Lifts a small integer into any field.
pub fn from_int<T: Field>(n: i64) -> T {
    let one = T::one();
    let mut acc = T::zero();
    let mut base = one;
    let mut m = n.unsigned_abs();
    while m > 0 {
        if m & 1 == 1 {
            acc = acc + base.clone();
        }
        m >>= 1;
        if m > 0 {
            base = base.clone() + base;
        }
    }
    if n < 0 {
        -acc
    } else {
        acc
    }
}
