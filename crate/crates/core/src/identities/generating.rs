//! Generating function `Σ K_n xⁿ`, checked as a polynomial identity after
//! multiplying through by the denominator.

use super::{IdentityContext, IdentityReport, ReportPart, Residual};
use crate::hybrid::Hybrid;
use crate::rational::int;
use crate::HybridRat;

/// Coefficients of `(1 − (ab+c)x² + bcx³)K_0 + x(1 + ax − cx²)K_1`.
pub fn generating_numerator(ctx: &IdentityContext) -> [HybridRat; 4] {
    let p = ctx.params();
    let (a, b, c) = (p.a(), p.b(), p.c());
    let (k0, k1) = (ctx.k(0), ctx.k(1));
    [
        k0.clone(),
        k1.clone(),
        k1.scale(a) - k0.scale(&(a * b + c)),
        k0.scale(&(b * c)) - k1.scale(c),
    ]
}

/// `(1 − (ab+2c)x² + c²x⁴)·Σ_{n≤degree} K_n xⁿ` against the numerator,
/// coefficientwise for `x⁰..x^degree`. One report part per coefficient.
pub fn check_generating_function(ctx: &IdentityContext, degree: i64) -> IdentityReport {
    assert!(degree >= 4, "degree must be at least 4");
    let p = ctx.params();
    let den = [
        int(1),
        int(0),
        -(p.a() * p.b() + int(2) * p.c()),
        int(0),
        p.c() * p.c(),
    ];
    let terms: Vec<HybridRat> = (0..=degree).map(|n| ctx.k(n)).collect();
    let num = generating_numerator(ctx);
    let rad = ctx.radicand();
    let parts = (0..=degree as usize)
        .map(|m| {
            let prod = (0..=m.min(4)).fold(Hybrid::zero(), |acc: HybridRat, k| {
                acc + terms[m - k].scale(&den[k])
            });
            let target = num.get(m).cloned().unwrap_or_else(Hybrid::zero);
            ReportPart::new("coefficient", Residual::hybrid(prod - target, rad)).at(vec![m as i64])
        })
        .collect();
    IdentityReport::new("generating_function", p, vec![degree], parts)
}
