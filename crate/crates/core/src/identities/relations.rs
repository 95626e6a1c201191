//! Relations between the Fibonacci-kind and Lucas-kind hybrid numbers
//! `K_{u,n}` and `K_{v,n}` over the same `(a, b, c)`.

use super::{Branch, IdentityContext, IdentityReport, ReportPart, Residual};
use crate::error::IdentityError;
use crate::hybrid::Hybrid;
use crate::rational::int;
use crate::scalar::powi;
use crate::seq::parity;
use crate::{HybridRat, Rational};

/// `2(−c)ᵐu_{n−m}(K_{v,0} − θ)` on the even branch,
/// `2(a/b)^{−ξ(m)}(−c)ᵐu_{n−m}(K_{v̂,0} − θ̂)` on the odd one.
pub fn relation_iii_rhs(ctx: &IdentityContext, branch: Branch, n: i64, m: i64) -> HybridRat {
    let p = ctx.params();
    let mut k = int(2) * powi(&-p.c().clone(), m) * ctx.u.term(n - m);
    if branch == Branch::Odd {
        k *= powi(&(p.a() / p.b()), -parity(m));
    }
    ctx.lucas_shift(branch).scale(&k)
}

/// Closed form of `K_{v,n}² − K_{u,n}²`:
/// even `((Δ²−a²)/Δ²)(K_{v,0}+μ_e)v_{2n} + ((Δ²−a²)/a²)(K_{u,0}+γ_e)u_{2n}
/// + 2(−c)ⁿ((Δ²+a²)/Δ²)(K_{v,0}−θ)`; odd the same with hatted constants,
/// `(b/a)v_{2n}` in the first term and `2(b/a)` in the last.
pub fn relation_iv_rhs(ctx: &IdentityContext, branch: Branch, n: i64) -> HybridRat {
    let p = ctx.params();
    let (a, b, c) = (p.a(), p.b(), p.c());
    let d = p.delta_sq();
    let a2 = a * a;
    let minus_over_d = (d - &a2) / d;
    let minus_over_a2 = (d - &a2) / &a2;
    let plus_over_d = (d + &a2) / d;
    let consts = &ctx.consts;
    let (kv, ku, mu, gamma, ratio) = match branch {
        Branch::Even => (ctx.v.hybrid_term(0), ctx.u.hybrid_term(0), &consts.mu_e, &consts.gamma_e, int(1)),
        Branch::Odd => (
            ctx.v_hat.hybrid_term(0),
            ctx.u_hat.hybrid_term(0),
            &consts.mu_o,
            &consts.gamma_o,
            b / a,
        ),
    };
    let t1 = (kv + Hybrid::real(mu.clone())).scale(&(&minus_over_d * &ratio * ctx.v.term(2 * n)));
    let t2 = (ku + Hybrid::real(gamma.clone())).scale(&(minus_over_a2 * ctx.u.term(2 * n)));
    let t3 = ctx
        .lucas_shift(branch)
        .scale(&(int(2) * ratio * powi(&-c.clone(), n) * plus_over_d));
    t1 + t2 + t3
}

/// (i) `K_{u,n+1} + cK_{u,n−1} = (a/b)^{ξ(n)}K_{v,n}`;
/// (ii) `K_{v,n+1} + cK_{v,n−1} = (a/b)^{ξ(n)}Δ²K_{u,n}`;
/// (iii) `K_{u,n}K_{v,m} − K_{u,m}K_{v,n}` against [`relation_iii_rhs`], `n > m`;
/// (iv) `K_{v,n}² − K_{u,n}²` against [`relation_iv_rhs`].
pub fn check_fib_lucas_relations(ctx: &IdentityContext, n: i64, m: i64) -> Result<IdentityReport, IdentityError> {
    if n <= m || m < 0 {
        return Err(IdentityError::Precondition {
            identity: "fib_lucas_relations",
            detail: format!("need n > m >= 0, got n = {n}, m = {m}"),
        });
    }
    let p = ctx.params();
    let c = p.c();
    let rad = ctx.radicand();
    let ratio: Rational = powi(&(p.a() / p.b()), parity(n));
    let branch = Branch::of(n);

    let lhs_i = ctx.k_u(n + 1) + ctx.k_u(n - 1).scale(c);
    let rhs_i = ctx.k_v(n).scale(&ratio);
    let lhs_ii = ctx.k_v(n + 1) + ctx.k_v(n - 1).scale(c);
    let rhs_ii = ctx.k_u(n).scale(&(&ratio * p.delta_sq()));
    let lhs_iii = ctx.k_u(n).mul_exact(&ctx.k_v(m)) - ctx.k_u(m).mul_exact(&ctx.k_v(n));
    let rhs_iii = relation_iii_rhs(ctx, branch, n, m);
    let (kv, ku) = (ctx.k_v(n), ctx.k_u(n));
    let lhs_iv = kv.mul_exact(&kv) - ku.mul_exact(&ku);
    let rhs_iv = relation_iv_rhs(ctx, branch, n);

    let parts = vec![
        ReportPart::new("i", Residual::hybrid(lhs_i - rhs_i, rad)),
        ReportPart::new("ii", Residual::hybrid(lhs_ii - rhs_ii, rad)),
        ReportPart::new("iii", Residual::hybrid(lhs_iii - rhs_iii, rad)),
        ReportPart::new("iv", Residual::hybrid(lhs_iv - rhs_iv, rad)),
    ];
    Ok(IdentityReport::new("fib_lucas_relations", p, vec![n, m], parts))
}
