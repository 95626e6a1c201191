//! Exact identity checkers.
//!
//! Every checker evaluates both sides of an identity at one parameter point
//! and one index tuple and records `LHS − RHS` per sub-identity. A report
//! passes iff every residual is exactly zero, rational and `√Δ` parts alike.
//! Identities are implemented as stated; a nonzero residual is a finding, not
//! something to patch.

mod basics;
mod generating;
mod lemmas;
mod relations;
mod sums;
mod vajda;

pub use basics::{
    check_binet, check_character, check_four_term_recurrence, check_hybrid_binet,
    check_negative_index, check_root_powers, check_u_v_closed_forms,
};
pub use generating::{check_generating_function, generating_numerator};
pub use lemmas::{check_lemma_products, check_lemma_squares, lemma_products_rhs, lemma_squares_rhs};
pub use relations::{check_fib_lucas_relations, relation_iii_rhs, relation_iv_rhs};
pub use sums::{check_binomial_sums, check_summation, summation_denominator};
pub use vajda::{
    cassini_rhs, catalan_rhs, check_cassini_and_matrix, check_catalan, check_vajda,
    commutator_k4_k0, matrix_right_factor_residual, vajda_rhs,
};

use crate::hybrid::Hybrid;
use crate::hybrid_seq::{HybridSeq, RootHybrid};
use crate::quad::QuadExt;
use crate::rational::{frac, int};
use crate::scalar::Scalar;
use crate::seq::{parity, SeqKind, SeqParams, Sequence};
use crate::{HybridQuad, HybridRat, Params, Quad, Rational};

/// `LHS − RHS` of one sub-identity.
// short-lived and matched everywhere; boxing buys nothing
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq)]
pub enum Residual {
    Scalar(Quad),
    Hybrid(HybridQuad),
}

impl Residual {
    pub fn is_zero(&self) -> bool {
        match self {
            Residual::Scalar(q) => q.vanishes(),
            Residual::Hybrid(h) => h.is_zero(),
        }
    }

    fn rational(x: Rational, radicand: &Rational) -> Self {
        Residual::Scalar(QuadExt::from_base(x, radicand))
    }

    fn hybrid(x: HybridRat, radicand: &Rational) -> Self {
        Residual::Hybrid(x.lift(radicand))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReportPart {
    pub name: String,
    /// Extra indices locating the residual inside the check (coefficient,
    /// matrix entry, ...); empty when the part is a single equation.
    pub at: Vec<i64>,
    pub residual: Residual,
}

impl ReportPart {
    pub fn new(name: impl Into<String>, residual: Residual) -> Self {
        Self {
            name: name.into(),
            at: Vec::new(),
            residual,
        }
    }

    pub fn at(mut self, at: Vec<i64>) -> Self {
        self.at = at;
        self
    }

    pub fn passed(&self) -> bool {
        self.residual.is_zero()
    }
}

/// Outcome of one identity at one parameter point and index tuple.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityReport {
    pub identity: &'static str,
    pub params: Params,
    pub indices: Vec<i64>,
    pub passed: bool,
    pub parts: Vec<ReportPart>,
}

impl IdentityReport {
    pub fn new(identity: &'static str, params: &Params, indices: Vec<i64>, parts: Vec<ReportPart>) -> Self {
        let passed = parts.iter().all(ReportPart::passed);
        Self {
            identity,
            params: params.clone(),
            indices,
            passed,
            parts,
        }
    }

    pub fn failed_parts(&self) -> impl Iterator<Item = &ReportPart> {
        self.parts.iter().filter(|p| !p.passed())
    }

    pub fn part(&self, name: &str) -> Option<&ReportPart> {
        self.parts.iter().find(|p| p.name == name)
    }
}

/// Even/odd branch of a parity-dependent closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    Even,
    Odd,
}

impl Branch {
    pub fn of(n: i64) -> Self {
        if parity(n) == 0 {
            Branch::Even
        } else {
            Branch::Odd
        }
    }

    pub fn other(self) -> Self {
        match self {
            Branch::Even => Branch::Odd,
            Branch::Odd => Branch::Even,
        }
    }

    pub fn xi(self) -> i64 {
        match self {
            Branch::Even => 0,
            Branch::Odd => 1,
        }
    }
}

/// Constants appearing in the products and squares of the hybrid roots.
#[derive(Clone, Debug, PartialEq)]
pub struct LemmaConstants {
    pub eta: HybridRat,
    pub eta_hat: HybridRat,
    pub theta: Rational,
    pub theta_hat: Rational,
    pub mu_e: Rational,
    pub mu_o: Rational,
    pub gamma_e: Rational,
    pub gamma_o: Rational,
}

impl LemmaConstants {
    pub fn new(p: &Params) -> Self {
        let (a, b, c) = (p.a(), p.b(), p.c());
        let u = Sequence::new(p.recurrence().with_kind(SeqKind::FibonacciU));
        let one = int(1);
        let ab = a * b;
        let eta = Hybrid::new(int(0), &one - b, a - b - c, &one + &ab + c);
        let eta_hat = Hybrid::new(int(0), &one - a, b - a - c, &one + &ab + c);
        let c3 = c * c * c;
        let theta = &one - b * c / a + b * c + b * &c3 / a;
        let theta_hat = &one - a * c / b + a * c + a * &c3 / b;
        let half = frac(1, 2);
        let ba = b / a;
        let gamma_e = &half * (&ba * u.term(6) + int(2) * u.term(3) - &ba * u.term(2));
        let gamma_o = &half * (u.term(6) + int(2) * u.term(3) - u.term(2));
        let mu_e = -&one + &ba * c * (u.term(5) + int(2) * u.term(2) - u.term(1)) + b * &gamma_e;
        let mu_o = -&one
            + a / b * c * (u.term(5) + int(2) * &ba * u.term(2) - u.term(1))
            + a * &gamma_o;
        Self {
            eta,
            eta_hat,
            theta,
            theta_hat,
            mu_e,
            mu_o,
            gamma_e,
            gamma_o,
        }
    }
}

/// Everything the checkers need about one parameter point: the sequence under
/// test, the Fibonacci/Lucas kinds and their hatted versions over the same
/// `(a, b, c)`, hybrid roots and lemma constants. Sequences are memoized, so a
/// context is meant to be reused across index sweeps.
#[derive(Debug)]
pub struct IdentityContext {
    pub w: HybridSeq<Rational>,
    pub u: Sequence<Rational>,
    pub v: Sequence<Rational>,
    pub u_hat: Sequence<Rational>,
    pub v_hat: Sequence<Rational>,
    pub consts: LemmaConstants,
    /// `A·B·Δ²`, evaluated in `Q(√Δ²)`.
    pub ab_delta_sq: Quad,
    /// `(K_{v,0} − θ, K_{u,0} − η)` and the hatted pair.
    shifts: [(HybridRat, HybridRat); 2],
}

impl IdentityContext {
    pub fn new(params: SeqParams<Rational>) -> Self {
        let rec = params.recurrence();
        let u = Sequence::new(rec.with_kind(SeqKind::FibonacciU));
        let v = Sequence::new(rec.with_kind(SeqKind::LucasV));
        let u_hat = Sequence::new(rec.with_kind(SeqKind::FibonacciUHat));
        let v_hat = Sequence::new(rec.with_kind(SeqKind::LucasVHat));
        let consts = LemmaConstants::new(&params);
        let ds = QuadExt::from_base(params.delta_sq().clone(), params.delta_sq());
        let ab_delta_sq = &(params.coeff_a() * params.coeff_b()) * &ds;
        let theta = |t: &Rational| Hybrid::real(t.clone());
        let shifts = [
            (v.hybrid_term(0) - theta(&consts.theta), u.hybrid_term(0) - consts.eta.clone()),
            (
                v_hat.hybrid_term(0) - theta(&consts.theta_hat),
                u_hat.hybrid_term(0) - consts.eta_hat.clone(),
            ),
        ];
        Self {
            w: HybridSeq::new(params),
            u,
            v,
            u_hat,
            v_hat,
            consts,
            ab_delta_sq,
            shifts,
        }
    }

    pub fn params(&self) -> &Params {
        self.w.params()
    }

    pub fn roots(&self) -> &RootHybrid<Rational> {
        self.w.roots()
    }

    pub fn radicand(&self) -> &Rational {
        self.params().delta_sq()
    }

    pub fn k(&self, n: i64) -> HybridRat {
        self.w.term(n)
    }

    pub fn k_u(&self, n: i64) -> HybridRat {
        self.u.hybrid_term(n)
    }

    pub fn k_v(&self, n: i64) -> HybridRat {
        self.v.hybrid_term(n)
    }

    /// `ABΔ²` as a rational. It is symmetric in `α, β`, so the `√Δ` part is
    /// zero; [`IdentityContext::ab_rational_part`] records that as a report part.
    pub fn ab_delta_sq_rat(&self) -> Rational {
        self.ab_delta_sq.rat().clone()
    }

    fn ab_rational_part(&self) -> ReportPart {
        let rad = self.ab_delta_sq.rad().clone();
        ReportPart::new("ab_delta_sq_is_rational", Residual::rational(rad, self.radicand()))
    }

    /// `K_{v,0} − θ` (even) or `K_{v̂,0} − θ̂` (odd).
    pub fn lucas_shift(&self, branch: Branch) -> &HybridRat {
        &self.shifts[branch.xi() as usize].0
    }

    /// `K_{u,0} − η` (even) or `K_{û,0} − η̂` (odd).
    pub fn fibonacci_shift(&self, branch: Branch) -> &HybridRat {
        &self.shifts[branch.xi() as usize].1
    }

    /// `a` (even) or `b` (odd): the divisor of `Δ` in the root-hybrid lemmas.
    fn lemma_divisor(&self, branch: Branch) -> &Rational {
        match branch {
            Branch::Even => self.params().a(),
            Branch::Odd => self.params().b(),
        }
    }
}
