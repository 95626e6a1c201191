//! Sequence-level identities: closed forms, negative indices, characters.

use super::{IdentityContext, IdentityReport, ReportPart, Residual};
use crate::hybrid::Hybrid;
use crate::quad::QuadExt;
use crate::rational::int;
use crate::scalar::powi;
use crate::seq::parity;
use crate::Rational;

fn lifted(ctx: &IdentityContext, x: Rational) -> QuadExt<Rational> {
    QuadExt::from_base(x, ctx.radicand())
}

/// `w_n` against its closed form, `n ≥ 0`.
pub fn check_binet(ctx: &IdentityContext, n: i64) -> IdentityReport {
    let p = ctx.params();
    let lhs = lifted(ctx, ctx.w.scalar(n));
    let parts = vec![ReportPart::new("binet", Residual::Scalar(&p.term_binet(n) - &lhs))];
    IdentityReport::new("binet", p, vec![n], parts)
}

/// `K_n` against the hybrid closed form built on `α_ξ, β_ξ`, `n ≥ 0`.
pub fn check_hybrid_binet(ctx: &IdentityContext, n: i64) -> IdentityReport {
    let lhs = ctx.k(n).lift(ctx.radicand());
    let rhs = ctx.w.term_binet(n);
    let parts = vec![ReportPart::new("hybrid_binet", Residual::Hybrid(&lhs - &rhs))];
    IdentityReport::new("hybrid_binet", ctx.params(), vec![n], parts)
}

/// `αᵐ` and `βᵐ` against their linear expansions in the root, `m ≥ 1`.
pub fn check_root_powers(ctx: &IdentityContext, m: i64) -> IdentityReport {
    let p = ctx.params();
    let (ra, rb) = p.root_power_expansions(m);
    let k = m as u64;
    let parts = vec![
        ReportPart::new("alpha", Residual::Scalar(&p.alpha().pow(k) - &ra)),
        ReportPart::new("beta", Residual::Scalar(&p.beta().pow(k) - &rb)),
    ];
    IdentityReport::new("root_powers", p, vec![m], parts)
}

/// Closed forms of `u_n`, `v_n` and the hatted rescalings
/// `û_n = (b/a)^{ξ(n+1)} u_n`, `v̂_n = (a/b)^{ξ(n)} v_n`, `n ≥ 0`.
pub fn check_u_v_closed_forms(ctx: &IdentityContext, n: i64) -> IdentityReport {
    let p = ctx.params();
    let (a, b) = (p.a(), p.b());
    let u = ctx.u.term(n);
    let v = ctx.v.term(n);
    let uh = powi(&(b / a), parity(n + 1)) * &u;
    let vh = powi(&(a / b), parity(n)) * &v;
    let parts = vec![
        ReportPart::new("u", Residual::Scalar(&p.u_closed(n) - &lifted(ctx, u))),
        ReportPart::new("v", Residual::Scalar(&p.v_closed(n) - &lifted(ctx, v))),
        ReportPart::new("u_hat", Residual::rational(ctx.u_hat.term(n) - uh, ctx.radicand())),
        ReportPart::new("v_hat", Residual::rational(ctx.v_hat.term(n) - vh, ctx.radicand())),
    ];
    IdentityReport::new("u_v_closed_forms", p, vec![n], parts)
}

/// `w_{−m}` from the backward recurrence against the closed form in `u`, and
/// the same for `K_{−m}` componentwise, `m ≥ 0`.
pub fn check_negative_index(ctx: &IdentityContext, m: i64) -> IdentityReport {
    let seq = ctx.w.sequence();
    let scalar = seq.term(-m) - seq.term_negative_closed(m);
    let closed = |k: i64| {
        if k <= 0 {
            seq.term_negative_closed(-k)
        } else {
            seq.term(k)
        }
    };
    let k_closed = Hybrid::new(closed(-m), closed(1 - m), closed(2 - m), closed(3 - m));
    let parts = vec![
        ReportPart::new("w", Residual::rational(scalar, ctx.radicand())),
        ReportPart::new("k", Residual::hybrid(ctx.k(-m) - k_closed, ctx.radicand())),
    ];
    IdentityReport::new("negative_index", ctx.params(), vec![m], parts)
}

/// `K_n·K̄_n` is the real scalar `w_n² + (w_{n+1} − w_{n+2})² − w_{n+2}² − w_{n+3}²`.
pub fn check_character(ctx: &IdentityContext, n: i64) -> IdentityReport {
    let k = ctx.k(n);
    let prod = k.mul_exact(&k.conj());
    let closed = k.character_closed_form();
    let parts = vec![
        ReportPart::new("character", Residual::rational(prod.re.clone() - &closed, ctx.radicand())),
        ReportPart::new("product_is_real", Residual::hybrid(prod - Hybrid::real(closed), ctx.radicand())),
    ];
    IdentityReport::new("character", ctx.params(), vec![n], parts)
}

/// `K_n = (ab + 2c)K_{n−2} − c²K_{n−4}`.
pub fn check_four_term_recurrence(ctx: &IdentityContext, n: i64) -> IdentityReport {
    let p = ctx.params();
    let k1 = p.a() * p.b() + int(2) * p.c();
    let k2 = p.c() * p.c();
    let rhs = ctx.k(n - 2).scale(&k1) - ctx.k(n - 4).scale(&k2);
    let parts = vec![ReportPart::new(
        "four_term",
        Residual::hybrid(ctx.k(n) - rhs, ctx.radicand()),
    )];
    IdentityReport::new("four_term_recurrence", p, vec![n], parts)
}
