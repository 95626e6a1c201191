//! Formal quadratic extensions `p + q·√Δ`.
//!
//! `√Δ` is a symbol subject only to `(√Δ)² = Δ`; nothing assumes `Δ > 0` or
//! that `Δ` is not a perfect square. Every value carries its radicand and
//! combining values with different radicands is an error: the `checked_*`
//! methods report it, the operator impls panic.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::ArithError;
use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt<T> {
    rat: T,
    rad: T,
    radicand: T,
}

impl<T: Field> QuadExt<T> {
    pub fn new(rat: T, rad: T, radicand: T) -> Result<Self, ArithError> {
        if radicand.is_zero() {
            return Err(ArithError::ZeroRadicand);
        }
        Ok(Self { rat, rad, radicand })
    }

    /// `x + 0·√Δ`.
    pub fn from_base(x: T, radicand: &T) -> Self {
        Self::trusted(x, T::zero(), radicand.clone())
    }

    /// The formal symbol `√Δ` itself.
    pub fn sqrt_radicand(radicand: &T) -> Result<Self, ArithError> {
        Self::new(T::zero(), T::one(), radicand.clone())
    }

    fn trusted(rat: T, rad: T, radicand: T) -> Self {
        debug_assert!(!radicand.is_zero());
        Self { rat, rad, radicand }
    }

    pub fn rat(&self) -> &T {
        &self.rat
    }

    pub fn rad(&self) -> &T {
        &self.rad
    }

    pub fn radicand(&self) -> &T {
        &self.radicand
    }

    pub fn into_parts(self) -> (T, T) {
        (self.rat, self.rad)
    }

    pub fn is_rational(&self) -> bool {
        self.rad.is_zero()
    }

    /// The rational part, if the `√Δ` part vanishes.
    pub fn to_base(&self) -> Option<T> {
        self.is_rational().then(|| self.rat.clone())
    }

    fn check(&self, other: &Self) -> Result<(), ArithError> {
        if self.radicand == other.radicand {
            Ok(())
        } else {
            Err(ArithError::RadicandMismatch {
                left: format!("{:?}", self.radicand),
                right: format!("{:?}", other.radicand),
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ArithError> {
        self.check(other)?;
        Ok(Self::trusted(
            self.rat.clone() + other.rat.clone(),
            self.rad.clone() + other.rad.clone(),
            self.radicand.clone(),
        ))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, ArithError> {
        self.check(other)?;
        Ok(Self::trusted(
            self.rat.clone() - other.rat.clone(),
            self.rad.clone() - other.rad.clone(),
            self.radicand.clone(),
        ))
    }

    /// `(p₁ + q₁√Δ)(p₂ + q₂√Δ) = (p₁p₂ + q₁q₂Δ) + (p₁q₂ + q₁p₂)√Δ`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, ArithError> {
        self.check(other)?;
        let (p1, q1) = (&self.rat, &self.rad);
        let (p2, q2) = (&other.rat, &other.rad);
        let rat = p1.clone() * p2.clone() + q1.clone() * q2.clone() * self.radicand.clone();
        let rad = p1.clone() * q2.clone() + q1.clone() * p2.clone();
        Ok(Self::trusted(rat, rad, self.radicand.clone()))
    }

    /// `p² − q²Δ`.
    pub fn norm(&self) -> T {
        self.rat.clone() * self.rat.clone()
            - self.rad.clone() * self.rad.clone() * self.radicand.clone()
    }

    /// Image under `√Δ ↦ −√Δ`.
    pub fn conjugate(&self) -> Self {
        Self::trusted(self.rat.clone(), -self.rad.clone(), self.radicand.clone())
    }

    /// `(p − q√Δ)/(p² − q²Δ)`.
    pub fn inv(&self) -> Result<Self, ArithError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(ArithError::DegenerateSplit {
                value: format!("{:?} + {:?}*sqrt({:?})", self.rat, self.rad, self.radicand),
            });
        }
        Ok(Self::trusted(
            self.rat.clone() / n.clone(),
            -self.rad.clone() / n,
            self.radicand.clone(),
        ))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ArithError> {
        self.check(other)?;
        self.checked_mul(&other.inv()?)
    }

    /// Multiplication by an element of the base field.
    pub fn scale(&self, k: &T) -> Self {
        Self::trusted(
            self.rat.clone() * k.clone(),
            self.rad.clone() * k.clone(),
            self.radicand.clone(),
        )
    }

    /// `self^n` by repeated squaring; `x⁰ = 1`.
    pub fn pow(&self, mut n: u64) -> Self {
        let mut acc = self.one_like();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power; negative exponents go through [`QuadExt::inv`].
    pub fn powi(&self, n: i64) -> Result<Self, ArithError> {
        if n < 0 {
            Ok(self.inv()?.pow(n.unsigned_abs()))
        } else {
            Ok(self.pow(n as u64))
        }
    }
}

impl<T: Field> Scalar for QuadExt<T> {
    fn zero_like(&self) -> Self {
        Self::trusted(T::zero(), T::zero(), self.radicand.clone())
    }

    fn one_like(&self) -> Self {
        Self::trusted(T::one(), T::zero(), self.radicand.clone())
    }

    fn vanishes(&self) -> bool {
        self.rat.is_zero() && self.rad.is_zero()
    }

    fn compatible(&self, other: &Self) -> bool {
        self.radicand == other.radicand
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<T: Field> $tr<&QuadExt<T>> for &QuadExt<T> {
            type Output = QuadExt<T>;
            fn $method(self, rhs: &QuadExt<T>) -> QuadExt<T> {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("{e}"),
                }
            }
        }

        impl<T: Field> $tr for QuadExt<T> {
            type Output = QuadExt<T>;
            fn $method(self, rhs: QuadExt<T>) -> QuadExt<T> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl<T: Field> Neg for QuadExt<T> {
    type Output = QuadExt<T>;
    fn neg(self) -> QuadExt<T> {
        QuadExt::trusted(-self.rat, -self.rad, self.radicand)
    }
}

impl<T: Field + fmt::Display> fmt::Display for QuadExt<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rad.is_zero() {
            write!(f, "{}", self.rat)
        } else {
            write!(f, "({} + {}*sqrt({}))", self.rat, self.rad, self.radicand)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use crate::Rational;
    use proptest::prelude::*;

    fn q(p: Rational, r: Rational, d: i64) -> QuadExt<Rational> {
        QuadExt::new(p, r, int(d)).unwrap()
    }

    fn roots(a: i64, b: i64, c: i64) -> (QuadExt<Rational>, QuadExt<Rational>) {
        let d = a * a * b * b + 4 * a * b * c;
        (
            q(frac(a * b, 2), frac(1, 2), d),
            q(frac(a * b, 2), frac(-1, 2), d),
        )
    }

    #[test]
    fn sqrt_squared_is_radicand() {
        let s = QuadExt::sqrt_radicand(&int(5)).unwrap();
        assert_eq!(&s * &s, QuadExt::from_base(int(5), &int(5)));
    }

    #[test]
    fn golden_roots_multiply_to_minus_one() {
        let (alpha, beta) = roots(1, 1, 1);
        let prod = &alpha * &beta;
        assert!(prod.is_rational());
        assert_eq!(prod.rat(), &int(-1));
    }

    #[test]
    fn root_sum_is_ab() {
        let (alpha, beta) = roots(2, 3, 1);
        let s = &alpha + &beta;
        assert_eq!(s.to_base(), Some(int(6)));
    }

    #[test]
    fn zero_radicand_rejected() {
        assert_eq!(QuadExt::new(int(1), int(1), int(0)), Err(ArithError::ZeroRadicand));
    }

    #[test]
    fn mismatched_radicands() {
        let x = q(int(1), int(1), 5);
        let y = q(int(1), int(1), 7);
        assert!(matches!(x.checked_mul(&y), Err(ArithError::RadicandMismatch { .. })));
        assert!(matches!(x.checked_add(&y), Err(ArithError::RadicandMismatch { .. })));
    }

    #[test]
    #[should_panic(expected = "radicand mismatch")]
    fn operator_panics_on_mismatch() {
        let _ = q(int(1), int(1), 5) * q(int(1), int(1), 7);
    }

    #[test]
    fn inverses() {
        let one = q(int(1), int(0), 5);
        assert_eq!(one.inv().unwrap(), one);
        let s = q(int(0), int(1), 5);
        assert_eq!(s.inv().unwrap(), q(int(0), frac(1, 5), 5));
        // 3 + √9 is a zero divisor: (3 + √9)(3 − √9) = 9 − 9 = 0
        let split = q(int(3), int(1), 9);
        assert!(matches!(split.inv(), Err(ArithError::DegenerateSplit { .. })));
    }

    #[test]
    fn powers() {
        let (alpha, _) = roots(1, 1, 1);
        assert_eq!(alpha.pow(0), alpha.one_like());
        // α² = abα + abc with a = b = c = 1
        assert_eq!(alpha.pow(2), q(frac(3, 2), frac(1, 2), 5));
        assert_eq!(alpha.pow(2), &alpha + &alpha.one_like());
        assert_eq!(alpha.powi(-1).unwrap(), alpha.inv().unwrap());
    }

    #[test]
    fn beta_cubed_via_fibonacci_like_coefficients() {
        // a=2, b=3, c=1: u₂ = 2, u₃ = 7; β³ = a⁻¹a²bβu₃ + c·a·b²·u₂
        let (_, beta) = roots(2, 3, 1);
        let rhs = beta.scale(&(frac(1, 2) * int(4) * int(3) * int(7))) + QuadExt::from_base(int(2 * 9 * 2), beta.radicand());
        assert_eq!(beta.pow(3), rhs);
    }

    #[test]
    fn negative_and_square_radicands_are_formal() {
        let x = q(int(2), int(3), -7);
        assert_eq!((&x * &x).rat(), &(int(4) + int(9) * int(-7)));
        let y = q(int(1), int(2), 4);
        assert_eq!(&y * &y.inv().unwrap(), y.one_like());
    }

    fn arb_quad() -> impl Strategy<Value = QuadExt<Rational>> {
        (-50i64..50, 1i64..20, -50i64..50, 1i64..20)
            .prop_map(|(p, pd, r, rd)| q(frac(p, pd), frac(r, rd), 5))
    }

    proptest! {
        #[test]
        fn commutative_ring(x in arb_quad(), y in arb_quad(), z in arb_quad()) {
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        }

        #[test]
        fn inverse_when_defined(x in arb_quad()) {
            if let Ok(inv) = x.inv() {
                prop_assert_eq!(&x * &inv, x.one_like());
            }
        }

        #[test]
        fn root_relations(a in prop::sample::select(vec![1i64, 2, 3, -1, -2, 4]),
                          b in prop::sample::select(vec![1i64, 2, 3, -1, 5]),
                          c in prop::sample::select(vec![1i64, 2, -1, 3, -3])) {
            let d = a * a * b * b + 4 * a * b * c;
            prop_assume!(d != 0);
            let (alpha, beta) = roots(a, b, c);
            prop_assert_eq!((&alpha + &beta).to_base(), Some(int(a * b)));
            prop_assert_eq!((&alpha * &beta).to_base(), Some(int(-a * b * c)));
            let diff = &alpha - &beta;
            prop_assert_eq!((&diff * &diff).to_base(), Some(int(d)));
        }
    }
}
