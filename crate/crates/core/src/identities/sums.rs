//! Finite sums of hybrid terms.

use num_bigint::BigInt;
use num_integer::binomial;

use super::{IdentityContext, IdentityReport, ReportPart, Residual};
use crate::error::IdentityError;
use crate::hybrid::Hybrid;
use crate::rational::{format_rational, int};
use crate::scalar::powi;
use crate::seq::parity;
use crate::{HybridRat, Params, Rational};

/// `c² − ab − 2c + 1`.
pub fn summation_denominator(p: &Params) -> Rational {
    let (a, b, c) = (p.a(), p.b(), p.c());
    c * c - a * b - int(2) * c + int(1)
}

/// `Σ_{r=1}^{n} K_r` against
/// `(c²(K_n + K_{n−1} − K_0 − K_{−1}) − K_{n+2} − K_{n+1} + K_2 + K_1) / (c² − ab − 2c + 1)`.
pub fn check_summation(ctx: &IdentityContext, n: i64) -> Result<IdentityReport, IdentityError> {
    let p = ctx.params();
    let den = summation_denominator(p);
    if den == int(0) {
        return Err(IdentityError::SummationDenominatorZero {
            a: format_rational(p.a()),
            b: format_rational(p.b()),
            c: format_rational(p.c()),
        });
    }
    let lhs = (1..=n).fold(Hybrid::zero(), |acc: HybridRat, r| acc + ctx.k(r));
    let c2 = p.c() * p.c();
    let num = (ctx.k(n) + ctx.k(n - 1) - ctx.k(0) - ctx.k(-1)).scale(&c2) - ctx.k(n + 2) - ctx.k(n + 1)
        + ctx.k(2)
        + ctx.k(1);
    let rhs = num.scale(&(int(1) / den));
    let parts = vec![ReportPart::new("summation", Residual::hybrid(lhs - rhs, ctx.radicand()))];
    Ok(IdentityReport::new("summation", p, vec![n], parts))
}

fn choose(n: i64, k: i64) -> Rational {
    Rational::from_integer(binomial(BigInt::from(n), BigInt::from(k)))
}

/// `e / 2`, refusing odd `e`.
fn half_exponent(e: i64, what: &str) -> Result<i64, IdentityError> {
    if e % 2 != 0 {
        return Err(IdentityError::Precondition {
            identity: "binomial_sums",
            detail: format!("exponent {what} = {e} is odd"),
        });
    }
    Ok(e / 2)
}

/// `a^{(k + ξ(k+r) − ξ(r))/2} b^{(k − ξ(k+r) + ξ(r))/2}`.
fn mixed_power(p: &Params, k: i64, r: i64) -> Result<Rational, IdentityError> {
    let shift = parity(k + r) - parity(r);
    let ea = half_exponent(k + shift, "of a")?;
    let eb = half_exponent(k - shift, "of b")?;
    Ok(powi(p.a(), ea) * powi(p.b(), eb))
}

/// (i) `Σ_i C(n,i)(−c)^{n−i}K_{2i+r} = a^{(n+ξ(n+r)−ξ(r))/2}b^{(n−ξ(n+r)+ξ(r))/2}K_{n+r}`;
/// (ii) `Σ_i C(n,i)c^{n−i}a^{(i+ξ(i+r)−ξ(r))/2}b^{(i−ξ(i+r)+ξ(r))/2}K_{i+r} = K_{2n+r}`.
///
/// Fails with a precondition error if any exponent comes out odd.
pub fn check_binomial_sums(ctx: &IdentityContext, n: i64, r: i64) -> Result<IdentityReport, IdentityError> {
    let p = ctx.params();
    let c = p.c();
    let mut sum_i = Hybrid::zero();
    let mut sum_ii = Hybrid::zero();
    for i in 0..=n {
        let nc = choose(n, i);
        sum_i = sum_i + ctx.k(2 * i + r).scale(&(&nc * powi(&-c.clone(), n - i)));
        let w = nc * powi(c, n - i) * mixed_power(p, i, r)?;
        sum_ii = sum_ii + ctx.k(i + r).scale(&w);
    }
    let rhs_i = ctx.k(n + r).scale(&mixed_power(p, n, r)?);
    let rhs_ii = ctx.k(2 * n + r);
    let rad = ctx.radicand();
    let parts = vec![
        ReportPart::new("i", Residual::hybrid(sum_i - rhs_i, rad)),
        ReportPart::new("ii", Residual::hybrid(sum_ii - rhs_ii, rad)),
    ];
    Ok(IdentityReport::new("binomial_sums", p, vec![n, r], parts))
}
