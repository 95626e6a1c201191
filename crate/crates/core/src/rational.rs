//! Arbitrary-precision rationals.
//!
//! [`Rational`] is `num_rational::BigRational`, which already keeps values in
//! lowest terms with a positive denominator. This module adds the checked
//! arithmetic entry point and the `"p/q"` text form used on every external
//! surface.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::ArithError;

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact `x op y`; division by zero is an error rather than a panic.
pub fn rat_arith(x: &Rational, y: &Rational, op: RatOp) -> Result<Rational, ArithError> {
    Ok(match op {
        RatOp::Add => x + y,
        RatOp::Sub => x - y,
        RatOp::Mul => x * y,
        RatOp::Div => {
            if y.is_zero() {
                return Err(ArithError::DivisionByZero);
            }
            x / y
        }
    })
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num/den` reduced. Panics when `den == 0`.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Renders as `"p/q"`, or `"p"` when the denominator is 1.
pub fn format_rational(x: &Rational) -> String {
    x.to_string()
}

/// Parses `"p"`, `"p/q"` or a finite decimal such as `"-2.5"`.
pub fn parse_rational(s: &str) -> Result<Rational, ArithError> {
    let t = s.trim();
    let err = || ArithError::Parse(s.to_string());
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| err())?;
        let d: BigInt = d.trim().parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((whole, fraction)) = t.split_once('.') {
        if fraction.is_empty() || !fraction.bytes().all(|c| c.is_ascii_digit()) {
            return Err(err());
        }
        let negative = whole.trim_start().starts_with('-');
        let whole: BigInt = match whole {
            "" | "-" | "+" => BigInt::zero(),
            w => w.parse().map_err(|_| err())?,
        };
        let digits: BigInt = fraction.parse().map_err(|_| err())?;
        let scale = num_traits::pow(BigInt::from(10), fraction.len());
        let magnitude = Rational::new(whole.abs() * &scale + digits, scale);
        return Ok(if negative { -magnitude } else { magnitude });
    }
    let n: BigInt = t.parse().map_err(|_| err())?;
    Ok(Rational::from_integer(n))
}
