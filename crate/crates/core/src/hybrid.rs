//! Hybrid numbers `a + b·i + c·ε + d·h` with `i² = −1`, `ε² = 0`, `h² = 1`,
//! `ih = −hi = ε + i`.
//!
//! The algebra is generic over a commutative [`Scalar`] ring so that the same
//! product serves rational values and values with `√Δ` coefficients. It is
//! associative but not commutative.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::ArithError;
use crate::quad::QuadExt;
use crate::scalar::{Field, Scalar};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hybrid<S> {
    pub re: S,
    pub i: S,
    pub eps: S,
    pub h: S,
}

impl<S: Scalar> Hybrid<S> {
    pub fn new(re: S, i: S, eps: S, h: S) -> Self {
        Self { re, i, eps, h }
    }

    /// `s + 0i + 0ε + 0h`.
    pub fn real(s: S) -> Self {
        let z = s.zero_like();
        Self::new(s, z.clone(), z.clone(), z)
    }

    pub fn zero_like(&self) -> Self {
        Self::real(self.re.zero_like())
    }

    pub fn one_like(&self) -> Self {
        Self::real(self.re.one_like())
    }

    /// The four basis units `1, i, ε, h` over the ring of `sample`.
    pub fn units(sample: &S) -> [Self; 4] {
        let z = sample.zero_like();
        let o = sample.one_like();
        [
            Self::new(o.clone(), z.clone(), z.clone(), z.clone()),
            Self::new(z.clone(), o.clone(), z.clone(), z.clone()),
            Self::new(z.clone(), z.clone(), o.clone(), z.clone()),
            Self::new(z.clone(), z.clone(), z, o),
        ]
    }

    pub fn components(&self) -> [&S; 4] {
        [&self.re, &self.i, &self.eps, &self.h]
    }

    pub fn map<U, F: FnMut(&S) -> U>(&self, mut f: F) -> Hybrid<U> {
        Hybrid {
            re: f(&self.re),
            i: f(&self.i),
            eps: f(&self.eps),
            h: f(&self.h),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components().iter().all(|c| c.vanishes())
    }

    /// `s·k`, componentwise.
    pub fn scale(&self, s: &S) -> Self {
        self.map(|x| s.clone() * x.clone())
    }

    /// `k̄ = a − bi − cε − dh`.
    pub fn conj(&self) -> Self {
        Self::new(
            self.re.clone(),
            -self.i.clone(),
            -self.eps.clone(),
            -self.h.clone(),
        )
    }

    fn product(&self, rhs: &Self) -> Self {
        let (a1, b1, c1, d1) = (&self.re, &self.i, &self.eps, &self.h);
        let (a2, b2, c2, d2) = (&rhs.re, &rhs.i, &rhs.eps, &rhs.h);
        let m = |x: &S, y: &S| x.clone() * y.clone();
        let re = m(a1, a2) - m(b1, b2) + m(d1, d2) + m(b1, c2) + m(c1, b2);
        let i = m(a1, b2) + m(b1, a2) + m(b1, d2) - m(d1, b2);
        let eps = m(a1, c2) + m(c1, a2) + m(b1, d2) - m(d1, b2) + m(d1, c2) - m(c1, d2);
        let h = m(a1, d2) + m(d1, a2) + m(c1, b2) - m(b1, c2);
        Self::new(re, i, eps, h)
    }

    /// Product with a ring-compatibility check on every component.
    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, ArithError> {
        let ok = self
            .components()
            .iter()
            .chain(rhs.components().iter())
            .all(|c| c.compatible(&self.re));
        if !ok {
            return Err(ArithError::RadicandMismatch {
                left: format!("{:?}", self.re),
                right: format!("{:?}", rhs.re),
            });
        }
        Ok(self.product(rhs))
    }

    /// Character `C(k) = k·k̄`, taken from the real part of the product.
    pub fn character(&self) -> S {
        self.product(&self.conj()).re
    }

    /// `a² + (b − c)² − c² − d²`.
    pub fn character_closed_form(&self) -> S {
        let sq = |x: &S| x.clone() * x.clone();
        let bc = self.i.clone() - self.eps.clone();
        sq(&self.re) + sq(&bc) - sq(&self.eps) - sq(&self.h)
    }
}

impl<T: Field> Hybrid<T> {
    pub fn zero() -> Self {
        Self::real(T::zero())
    }

    pub fn one() -> Self {
        Self::real(T::one())
    }

    /// Embeds into `Hybrid<QuadExt<T>>` with zero `√Δ` parts.
    pub fn lift(&self, radicand: &T) -> Hybrid<QuadExt<T>> {
        self.map(|x| QuadExt::from_base(x.clone(), radicand))
    }
}

impl Hybrid<Rational> {
    /// Least common denominator of the four components.
    fn common_denominator(&self) -> BigInt {
        self.components()
            .iter()
            .fold(BigInt::one(), |d, c| d.lcm(c.denom()))
    }

    /// Numerators over [`Self::common_denominator`].
    fn scaled_numerators(&self, den: &BigInt) -> Hybrid<BigInt> {
        self.map(|c| c.numer() * (den / c.denom()))
    }

    /// The same value as `self * rhs`, computed on integer numerators over a
    /// common denominator and reduced once per component. Avoids a gcd per
    /// intermediate operation, which dominates for large rationals.
    pub fn mul_exact(&self, rhs: &Self) -> Self {
        let (dx, dy) = (self.common_denominator(), rhs.common_denominator());
        let p = &self.scaled_numerators(&dx) * &rhs.scaled_numerators(&dy);
        let d = dx * dy;
        p.map(|n| Rational::new(n.clone(), d.clone()))
    }
}

impl<T: Field + Signed + ToPrimitive> Hybrid<T> {
    /// `√|C(k)|` as a float. Inexact; the exact quantity is [`Hybrid::character`].
    pub fn norm_f64(&self) -> f64 {
        self.character().abs().to_f64().unwrap_or(f64::NAN).sqrt()
    }
}

impl<T: Field> Hybrid<QuadExt<T>> {
    /// Multiplication by a base-field scalar.
    pub fn scale_base(&self, k: &T) -> Self {
        self.map(|x| x.scale(k))
    }

    /// `Some` when all four components have zero `√Δ` part.
    pub fn to_base(&self) -> Option<Hybrid<T>> {
        Some(Hybrid::new(
            self.re.to_base()?,
            self.i.to_base()?,
            self.eps.to_base()?,
            self.h.to_base()?,
        ))
    }

    /// Rational and `√Δ` parts as two base-field hybrids.
    pub fn split(&self) -> (Hybrid<T>, Hybrid<T>) {
        (self.map(|x| x.rat().clone()), self.map(|x| x.rad().clone()))
    }

    /// Applies `√Δ ↦ −√Δ` to every component.
    pub fn radical_conjugate(&self) -> Self {
        self.map(QuadExt::conjugate)
    }
}

impl<S: Scalar> Add for Hybrid<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(
            self.re + rhs.re,
            self.i + rhs.i,
            self.eps + rhs.eps,
            self.h + rhs.h,
        )
    }
}

impl<S: Scalar> Sub for Hybrid<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(
            self.re - rhs.re,
            self.i - rhs.i,
            self.eps - rhs.eps,
            self.h - rhs.h,
        )
    }
}

impl<S: Scalar> Add<&Hybrid<S>> for &Hybrid<S> {
    type Output = Hybrid<S>;
    fn add(self, rhs: &Hybrid<S>) -> Hybrid<S> {
        self.clone() + rhs.clone()
    }
}

impl<S: Scalar> Sub<&Hybrid<S>> for &Hybrid<S> {
    type Output = Hybrid<S>;
    fn sub(self, rhs: &Hybrid<S>) -> Hybrid<S> {
        self.clone() - rhs.clone()
    }
}

impl<S: Scalar> Add<&Hybrid<S>> for Hybrid<S> {
    type Output = Hybrid<S>;
    fn add(self, rhs: &Hybrid<S>) -> Hybrid<S> {
        self + rhs.clone()
    }
}

impl<S: Scalar> Sub<&Hybrid<S>> for Hybrid<S> {
    type Output = Hybrid<S>;
    fn sub(self, rhs: &Hybrid<S>) -> Hybrid<S> {
        self - rhs.clone()
    }
}

impl<S: Scalar> Neg for Hybrid<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.i, -self.eps, -self.h)
    }
}

impl<S: Scalar> Mul<&Hybrid<S>> for &Hybrid<S> {
    type Output = Hybrid<S>;
    fn mul(self, rhs: &Hybrid<S>) -> Hybrid<S> {
        self.product(rhs)
    }
}

impl<S: Scalar> Mul for Hybrid<S> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.product(&rhs)
    }
}

impl<S: fmt::Display> fmt::Display for Hybrid<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.re)?;
        for (c, unit) in [(&self.i, "i"), (&self.eps, "ε"), (&self.h, "h")] {
            let s = c.to_string();
            match s.strip_prefix('-') {
                Some(rest) => write!(f, " - {rest} {unit}")?,
                None => write!(f, " + {s} {unit}")?,
            }
        }
        Ok(())
    }
}
