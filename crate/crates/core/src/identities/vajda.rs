//! Vajda, Catalan and Cassini product differences, the matrix form of
//! Cassini and its ordered determinants.

use super::{Branch, IdentityContext, IdentityReport, ReportPart, Residual};
use crate::rational::int;
use crate::scalar::powi;
use crate::{HybridRat, Rational};

fn neg_c_pow(ctx: &IdentityContext, n: i64) -> Rational {
    powi(&-ctx.params().c().clone(), n)
}

/// `u_{2s}` on the Lucas shift, with the extra `b/a` on the odd branch.
fn lucas_weight(ctx: &IdentityContext, branch: Branch, k: i64) -> Rational {
    let u = ctx.u.term(k);
    match branch {
        Branch::Even => u,
        Branch::Odd => ctx.params().b() / ctx.params().a() * u,
    }
}

/// `K_{n+2r}K_{n+2s} − K_nK_{n+2(r+s)}` closed form:
/// `(−c)ⁿABΔ²u_{2r}((K_{v,0} − θ)u_{2s} − c(K_{u,0} − η)v_{2s})` on the even
/// branch; hatted constants and `(b/a)u_{2s}` on the odd one.
pub fn vajda_rhs(ctx: &IdentityContext, branch: Branch, n: i64, r: i64, s: i64) -> HybridRat {
    let c = ctx.params().c();
    let inner = ctx.lucas_shift(branch).scale(&lucas_weight(ctx, branch, 2 * s))
        - ctx.fibonacci_shift(branch).scale(&(c * ctx.v.term(2 * s)));
    let k = neg_c_pow(ctx, n) * ctx.ab_delta_sq_rat() * ctx.u.term(2 * r);
    inner.scale(&k)
}

pub fn check_vajda(ctx: &IdentityContext, n: i64, r: i64, s: i64) -> IdentityReport {
    let lhs = ctx.k(n + 2 * r).mul_exact(&ctx.k(n + 2 * s)) - ctx.k(n).mul_exact(&ctx.k(n + 2 * (r + s)));
    let rhs = vajda_rhs(ctx, Branch::of(n), n, r, s);
    let parts = vec![
        ReportPart::new("vajda", Residual::hybrid(lhs - rhs, ctx.radicand())),
        ctx.ab_rational_part(),
    ];
    IdentityReport::new("vajda", ctx.params(), vec![n, r, s], parts)
}

/// `K_{n+2r}K_{n−2r} − K_n²` closed form:
/// `(−1)^{n+1}c^{n−2r}ABΔ²u_{2r}((K_{v,0} − θ)u_{2r} + c(K_{u,0} − η)v_{2r})`,
/// hatted with `(b/a)u_{2r}` on the odd branch. `c^{n−2r}` may be a negative power.
pub fn catalan_rhs(ctx: &IdentityContext, branch: Branch, n: i64, r: i64) -> HybridRat {
    let c = ctx.params().c();
    let inner = ctx.lucas_shift(branch).scale(&lucas_weight(ctx, branch, 2 * r))
        + ctx.fibonacci_shift(branch).scale(&(c * ctx.v.term(2 * r)));
    let sign = if (n + 1).rem_euclid(2) == 0 { int(1) } else { int(-1) };
    let k = sign * powi(c, n - 2 * r) * ctx.ab_delta_sq_rat() * ctx.u.term(2 * r);
    inner.scale(&k)
}

pub fn check_catalan(ctx: &IdentityContext, n: i64, r: i64) -> IdentityReport {
    let kn = ctx.k(n);
    let lhs = ctx.k(n + 2 * r).mul_exact(&ctx.k(n - 2 * r)) - kn.mul_exact(&kn);
    let rhs = catalan_rhs(ctx, Branch::of(n), n, r);
    let parts = vec![
        ReportPart::new("catalan", Residual::hybrid(lhs - rhs, ctx.radicand())),
        ctx.ab_rational_part(),
    ];
    IdentityReport::new("catalan", ctx.params(), vec![n, r], parts)
}

/// `K_{m+2}K_{m−2} − K_m²` closed form:
/// `(−1)^{m+1}ac^{m−2}ABΔ²((K_{v,0} − θ)a + c(ab+2c)(K_{u,0} − η))`, with
/// `b` and hatted constants on the odd branch.
pub fn cassini_rhs(ctx: &IdentityContext, branch: Branch, m: i64) -> HybridRat {
    let p = ctx.params();
    let (a, b, c) = (p.a(), p.b(), p.c());
    let lead = match branch {
        Branch::Even => a,
        Branch::Odd => b,
    };
    let inner = ctx.lucas_shift(branch).scale(lead)
        + ctx.fibonacci_shift(branch).scale(&(c * (a * b + int(2) * c)));
    let sign = if (m + 1).rem_euclid(2) == 0 { int(1) } else { int(-1) };
    inner.scale(&(sign * a * powi(c, m - 2) * ctx.ab_delta_sq_rat()))
}

fn cassini_lhs(ctx: &IdentityContext, m: i64) -> HybridRat {
    let km = ctx.k(m);
    ctx.k(m + 2).mul_exact(&ctx.k(m - 2)) - km.mul_exact(&km)
}

/// `[[ab+2c, −c²], [1, 0]]^e` over the rationals.
fn step_matrix_pow(ctx: &IdentityContext, e: i64) -> [[Rational; 2]; 2] {
    let p = ctx.params();
    let m = [
        [p.a() * p.b() + int(2) * p.c(), -(p.c() * p.c())],
        [int(1), int(0)],
    ];
    let mut acc = [[int(1), int(0)], [int(0), int(1)]];
    for _ in 0..e {
        acc = [0, 1].map(|i| [0, 1].map(|j| &acc[i][0] * &m[0][j] + &acc[i][1] * &m[1][j]));
    }
    acc
}

/// `[[K_{2n+2}, K_{2n}], [K_{2n}, K_{2n−2}]]`.
fn cassini_block(ctx: &IdentityContext, n: i64) -> [[HybridRat; 2]; 2] {
    let mid = ctx.k(2 * n);
    [[ctx.k(2 * n + 2), mid.clone()], [mid, ctx.k(2 * n - 2)]]
}

/// Cassini at `2n` and `2n + 1` (the latter also through the Catalan form with
/// `r = 1`), the block identity `B_n = M^{n−1}·B_1` entrywise with the
/// rational matrix acting from the left, and the two ordered determinants.
pub fn check_cassini_and_matrix(ctx: &IdentityContext, n: i64) -> IdentityReport {
    let rad = ctx.radicand();
    let c = ctx.params().c();
    let mut parts = Vec::new();

    let even = cassini_lhs(ctx, 2 * n) - cassini_rhs(ctx, Branch::Even, 2 * n);
    parts.push(ReportPart::new("cassini_even", Residual::hybrid(even, rad)));
    let odd_lhs = cassini_lhs(ctx, 2 * n + 1);
    let odd = &odd_lhs - &cassini_rhs(ctx, Branch::Odd, 2 * n + 1);
    parts.push(ReportPart::new("cassini_odd", Residual::hybrid(odd, rad)));
    let via = odd_lhs - catalan_rhs(ctx, Branch::Odd, 2 * n + 1, 1);
    parts.push(ReportPart::new("cassini_odd_via_catalan", Residual::hybrid(via, rad)));

    let pow = step_matrix_pow(ctx, n - 1);
    let base = cassini_block(ctx, 1);
    let target = cassini_block(ctx, n);
    for i in 0..2 {
        for j in 0..2 {
            let rhs = base[0][j].scale(&pow[i][0]) + base[1][j].scale(&pow[i][1]);
            let res = &target[i][j] - &rhs;
            parts.push(ReportPart::new("matrix", Residual::hybrid(res, rad)).at(vec![i as i64, j as i64]));
        }
    }

    let scale = powi(c, 2 * n - 2);
    let (k0, k2, k4) = (ctx.k(0), ctx.k(2), ctx.k(4));
    let sq = k2.mul_exact(&k2);
    let (hi, mid, lo) = (ctx.k(2 * n + 2), ctx.k(2 * n), ctx.k(2 * n - 2));
    let mid_sq = mid.mul_exact(&mid);
    let det_down = (hi.mul_exact(&lo) - &mid_sq) - (k4.mul_exact(&k0) - &sq).scale(&scale);
    let det_up = (lo.mul_exact(&hi) - &mid_sq) - (k0.mul_exact(&k4) - &sq).scale(&scale);
    parts.push(ReportPart::new("determinant_top_down", Residual::hybrid(det_down, rad)));
    parts.push(ReportPart::new("determinant_bottom_up", Residual::hybrid(det_up, rad)));
    parts.push(ctx.ab_rational_part());
    IdentityReport::new("cassini_matrix", ctx.params(), vec![n], parts)
}

/// The block identity read with the rational matrix power as a right factor,
/// `B_n = B_1·M^{n−1}`. Not one of the gated checks; kept so the difference
/// from the left action stays visible.
pub fn matrix_right_factor_residual(ctx: &IdentityContext, n: i64) -> IdentityReport {
    let rad = ctx.radicand();
    let pow = step_matrix_pow(ctx, n - 1);
    let base = cassini_block(ctx, 1);
    let target = cassini_block(ctx, n);
    let mut parts = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            let rhs = base[i][0].scale(&pow[0][j]) + base[i][1].scale(&pow[1][j]);
            let res = &target[i][j] - &rhs;
            parts.push(ReportPart::new("matrix", Residual::hybrid(res, rad)).at(vec![i as i64, j as i64]));
        }
    }
    IdentityReport::new("matrix_right_factor", ctx.params(), vec![n], parts)
}

/// `K_4K_0 − K_0K_4`; nonzero whenever the product is genuinely non-commutative
/// on this sequence.
pub fn commutator_k4_k0(ctx: &IdentityContext) -> HybridRat {
    let (k0, k4) = (ctx.k(0), ctx.k(4));
    k4.mul_exact(&k0) - k0.mul_exact(&k4)
}
