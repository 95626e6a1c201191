//! Products and squares of the hybrid roots `α_ξ, β_ξ`.

use super::{Branch, IdentityContext, IdentityReport, ReportPart, Residual};
use crate::hybrid::Hybrid;
use crate::quad::QuadExt;
use crate::scalar::Scalar;
use crate::{HybridQuad, Rational};

fn rational_parts(x: &HybridQuad, radicand: &Rational) -> HybridQuad {
    x.map(|q| QuadExt::from_base(q.rat().clone(), radicand))
}

fn radical_parts(x: &HybridQuad, radicand: &Rational) -> HybridQuad {
    x.map(|q| QuadExt::from_base(q.rad().clone(), radicand))
}

/// `(P, Q)` with `α_ξβ_ξ = P + Q` and `β_ξα_ξ = P − Q`:
/// `P = K_{v,0} − θ`, `Q = (Δ/a)c(K_{u,0} − η)` for the even branch, and the
/// hatted constants with `Δ/b` for the odd branch.
fn product_halves(ctx: &IdentityContext, branch: Branch) -> (HybridQuad, HybridQuad) {
    let rad = ctx.radicand();
    let k = ctx.params().c() / ctx.lemma_divisor(branch);
    let p = ctx.lucas_shift(branch).lift(rad);
    let q = ctx.fibonacci_shift(branch).lift(rad).scale(&ctx.params().delta().scale(&k));
    (p, q)
}

/// Right-hand sides of `α_ξβ_ξ` and `β_ξα_ξ` on the given branch.
pub fn lemma_products_rhs(ctx: &IdentityContext, branch: Branch) -> (HybridQuad, HybridQuad) {
    let (p, q) = product_halves(ctx, branch);
    (&p + &q, &p - &q)
}

/// Right-hand sides of `α_ξ²` and `β_ξ²`: `K_{v,0} + μ_e ± (Δ/a)(K_{u,0} + γ_e)`
/// (even) or `K_{v̂,0} + μ_o ± (Δ/b)(K_{û,0} + γ_o)` (odd).
pub fn lemma_squares_rhs(ctx: &IdentityContext, branch: Branch) -> (HybridQuad, HybridQuad) {
    let rad = ctx.radicand();
    let c = &ctx.consts;
    let (kv, ku, mu, gamma) = match branch {
        Branch::Even => (ctx.v.hybrid_term(0), ctx.u.hybrid_term(0), &c.mu_e, &c.gamma_e),
        Branch::Odd => (ctx.v_hat.hybrid_term(0), ctx.u_hat.hybrid_term(0), &c.mu_o, &c.gamma_o),
    };
    let inv = Rational::from_integer(1.into()) / ctx.lemma_divisor(branch);
    let s = (kv + Hybrid::real(mu.clone())).lift(rad);
    let t = (ku + Hybrid::real(gamma.clone())).lift(rad).scale(&ctx.params().delta().scale(&inv));
    (&s + &t, &s - &t)
}

/// Closed forms of `α_ξβ_ξ`, `β_ξα_ξ`, their sum `2P` and difference `2Q`, plus the
/// structural facts that the sum has no `√Δ` part and the difference no
/// rational part.
pub fn check_lemma_products(ctx: &IdentityContext, xi: i64) -> IdentityReport {
    let branch = Branch::of(xi);
    let rad = ctx.radicand();
    let roots = ctx.roots();
    let (al, be) = (roots.alpha_xi(xi), roots.beta_xi(xi));
    let ab = al * be;
    let ba = be * al;
    let (r5, r6) = lemma_products_rhs(ctx, branch);
    let (p, q) = product_halves(ctx, branch);
    let two = QuadExt::from_base(Rational::from_integer(2.into()), rad);
    let sum = &ab + &ba;
    let diff = &ab - &ba;
    let parts = vec![
        ReportPart::new("alpha_beta", Residual::Hybrid(&ab - &r5)),
        ReportPart::new("beta_alpha", Residual::Hybrid(&ba - &r6)),
        ReportPart::new("sum", Residual::Hybrid(&sum - &p.scale(&two))),
        ReportPart::new("difference", Residual::Hybrid(&diff - &q.scale(&two))),
        ReportPart::new("sum_has_no_sqrt_part", Residual::Hybrid(radical_parts(&sum, rad))),
        ReportPart::new("difference_has_no_rational_part", Residual::Hybrid(rational_parts(&diff, rad))),
    ];
    IdentityReport::new("lemma_products", ctx.params(), vec![xi], parts)
}

/// `2x − C(x)` with the character as a real hybrid.
fn square_via_character(x: &HybridQuad) -> HybridQuad {
    let two = x.re.one_like() + x.re.one_like();
    x.scale(&two) - Hybrid::real(x.character())
}

/// `α_ξ²`, `β_ξ²` against their closed forms, against `2x − C(x)`, and `β_ξ²`
/// against the `√Δ ↦ −√Δ` image of `α_ξ²`.
pub fn check_lemma_squares(ctx: &IdentityContext, xi: i64) -> IdentityReport {
    let branch = Branch::of(xi);
    let roots = ctx.roots();
    let (al, be) = (roots.alpha_xi(xi), roots.beta_xi(xi));
    let aa = al * al;
    let bb = be * be;
    let (r9, r10) = lemma_squares_rhs(ctx, branch);
    let parts = vec![
        ReportPart::new("alpha_squared", Residual::Hybrid(&aa - &r9)),
        ReportPart::new("beta_squared", Residual::Hybrid(&bb - &r10)),
        ReportPart::new("alpha_squared_via_character", Residual::Hybrid(&aa - &square_via_character(al))),
        ReportPart::new("beta_squared_via_character", Residual::Hybrid(&bb - &square_via_character(be))),
        ReportPart::new("beta_is_conjugate_of_alpha", Residual::Hybrid(&bb - &aa.radical_conjugate())),
    ];
    IdentityReport::new("lemma_squares", ctx.params(), vec![xi], parts)
}
