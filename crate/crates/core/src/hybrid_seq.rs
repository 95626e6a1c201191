//! Bi-periodic Horadam hybrid numbers `K_n = w_n + w_{n+1}i + w_{n+2}ε + w_{n+3}h`.

use crate::hybrid::Hybrid;
use crate::quad::QuadExt;
use crate::scalar::{powi, Field, Scalar};
use crate::seq::{parity, SeqParams, Sequence};

impl<T: Field> Sequence<T> {
    /// `K_n` from four consecutive terms; any integer `n`.
    pub fn hybrid_term(&self, n: i64) -> Hybrid<T> {
        Hybrid::new(self.term(n), self.term(n + 1), self.term(n + 2), self.term(n + 3))
    }
}

/// The hybrid roots `α_ξ, β_ξ` for `ξ ∈ {0, 1}`:
/// `α_ξ = 1 + (1/a)(a/b)^ξ α i + (1/(ab)) α² ε + (1/(a²b))(a/b)^ξ α³ h`, likewise for `β`.
#[derive(Clone, Debug, PartialEq)]
pub struct RootHybrid<T> {
    pub alpha: [Hybrid<QuadExt<T>>; 2],
    pub beta: [Hybrid<QuadExt<T>>; 2],
}

impl<T: Field> RootHybrid<T> {
    pub fn new(p: &SeqParams<T>) -> Self {
        let build = |root: &QuadExt<T>, xi: i64| {
            let (a, b) = (p.a(), p.b());
            let ratio = powi(&(a.clone() / b.clone()), xi);
            let ab = a.clone() * b.clone();
            let r2 = root.pow(2);
            let r3 = root.pow(3);
            Hybrid::new(
                root.one_like(),
                root.scale(&(ratio.clone() / a.clone())),
                r2.scale(&(T::one() / ab.clone())),
                r3.scale(&(ratio / (a.clone() * ab))),
            )
        };
        Self {
            alpha: [build(p.alpha(), 0), build(p.alpha(), 1)],
            beta: [build(p.beta(), 0), build(p.beta(), 1)],
        }
    }

    pub fn alpha_xi(&self, xi: i64) -> &Hybrid<QuadExt<T>> {
        &self.alpha[parity(xi) as usize]
    }

    pub fn beta_xi(&self, xi: i64) -> &Hybrid<QuadExt<T>> {
        &self.beta[parity(xi) as usize]
    }
}

pub fn root_hybrids<T: Field>(p: &SeqParams<T>) -> RootHybrid<T> {
    RootHybrid::new(p)
}

/// A hybrid sequence over validated parameters (`Δ² ≠ 0`).
#[derive(Debug)]
pub struct HybridSeq<T> {
    params: SeqParams<T>,
    seq: Sequence<T>,
    roots: RootHybrid<T>,
}

impl<T: Field> Clone for HybridSeq<T> {
    fn clone(&self) -> Self {
        Self {
            params: self.params.clone(),
            seq: self.seq.clone(),
            roots: self.roots.clone(),
        }
    }
}

impl<T: Field> HybridSeq<T> {
    pub fn new(params: SeqParams<T>) -> Self {
        let seq = params.sequence();
        let roots = RootHybrid::new(&params);
        Self { params, seq, roots }
    }

    pub fn params(&self) -> &SeqParams<T> {
        &self.params
    }

    pub fn sequence(&self) -> &Sequence<T> {
        &self.seq
    }

    pub fn roots(&self) -> &RootHybrid<T> {
        &self.roots
    }

    /// `w_n`.
    pub fn scalar(&self, n: i64) -> T {
        self.seq.term(n)
    }

    /// `K_n` for any integer `n`.
    pub fn term(&self, n: i64) -> Hybrid<T> {
        self.seq.hybrid_term(n)
    }

    /// `K_n = a^{ξ(n+1)}/(ab)^{⌊n/2⌋} (A α_{ξ(n)} αⁿ − B β_{ξ(n)} βⁿ)` for `n ≥ 0`.
    pub fn term_binet(&self, n: i64) -> Hybrid<QuadExt<T>> {
        assert!(n >= 0, "hybrid closed form is evaluated for n >= 0 only");
        let p = &self.params;
        let k = n as u64;
        let xi = parity(n);
        let ca = p.coeff_a() * &p.alpha().pow(k);
        let cb = p.coeff_b() * &p.beta().pow(k);
        let body = self.roots.alpha_xi(xi).scale(&ca) - self.roots.beta_xi(xi).scale(&cb);
        body.scale_base(&p.binet_prefactor(n))
    }

    /// `C(K_n) = w_n² + (w_{n+1} − w_{n+2})² − w_{n+2}² − w_{n+3}²`.
    pub fn character(&self, n: i64) -> T {
        let k = self.term(n);
        let via_product = k.character();
        debug_assert_eq!(via_product, k.character_closed_form());
        via_product
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use crate::Rational;

    fn hs(a: i64, b: i64, c: i64, w0: i64, w1: i64) -> HybridSeq<Rational> {
        HybridSeq::new(SeqParams::new(int(a), int(b), int(c), int(w0), int(w1)).unwrap())
    }

    fn hq(v: [i64; 4]) -> Hybrid<Rational> {
        Hybrid::new(int(v[0]), int(v[1]), int(v[2]), int(v[3]))
    }

    #[test]
    fn fibonacci_hybrids() {
        let f = hs(1, 1, 1, 0, 1);
        assert_eq!(f.term(0), hq([0, 1, 1, 2]));
        assert_eq!(f.term(2), hq([1, 2, 3, 5]));
        assert_eq!(f.term_binet(7).to_base(), Some(hq([13, 21, 34, 55])));
        assert_eq!(f.character(0), int(-5));
        assert_eq!(f.character(1), int(-11));
    }

    #[test]
    fn initial_hybrid_matches_displayed_formula() {
        for (a, b, c, w0, w1) in [(2, 3, 1, 5, -4), (3, -1, 2, 1, 1), (1, 1, 1, 0, 1)] {
            let k0 = hs(a, b, c, w0, w1).term(0);
            let expect = [
                w0,
                w1,
                a * w1 + c * w0,
                (a * b + c) * w1 + b * c * w0,
            ];
            assert_eq!(k0, hq(expect));
        }
    }

    #[test]
    fn bi_periodic_binet() {
        let s = hs(2, 3, 1, 0, 1);
        let k5 = s.term_binet(5).to_base().unwrap();
        assert_eq!(k5.re, int(55));
        assert_eq!(k5.i, int(126));
        assert_eq!(k5, s.term(5));
        assert_eq!(s.term_binet(0).to_base(), Some(s.term(0)));
    }

    #[test]
    fn zero_sequence_has_zero_character() {
        let s = HybridSeq::new(SeqParams::new(int(2), int(3), int(1), int(0), int(0)).unwrap());
        for n in -3..10 {
            assert_eq!(s.character(n), int(0));
        }
    }

    #[test]
    fn golden_root_hybrid() {
        let p = SeqParams::new(int(1), int(1), int(1), int(0), int(1)).unwrap();
        let r = root_hybrids(&p);
        let al = p.alpha();
        let expect = Hybrid::new(al.one_like(), al.clone(), al.pow(2), al.pow(3));
        assert_eq!(r.alpha[0], expect);
        // a = b: the ξ = 0 and ξ = 1 forms coincide
        assert_eq!(r.alpha[0], r.alpha[1]);
    }

    #[test]
    fn parity_forms_differ_by_a_over_b_on_i_and_h() {
        let p = SeqParams::new(int(2), int(3), int(1), int(0), int(1)).unwrap();
        let r = root_hybrids(&p);
        let ratio = Rational::new(2.into(), 3.into());
        for (x0, x1) in [(&r.alpha[0], &r.alpha[1]), (&r.beta[0], &r.beta[1])] {
            assert_eq!(x1.re, x0.re);
            assert_eq!(x1.eps, x0.eps);
            assert_eq!(x1.i, x0.i.scale(&ratio));
            assert_eq!(x1.h, x0.h.scale(&ratio));
        }
    }

    #[test]
    fn four_term_recurrence() {
        let s = hs(3, -1, 2, 5, -4);
        let p = s.params();
        let k1 = p.a() * p.b() + int(2) * p.c();
        let k2 = p.c() * p.c();
        for n in 4..=40 {
            let rhs = s.term(n - 2).scale(&k1) - s.term(n - 4).scale(&k2);
            assert_eq!(s.term(n), rhs);
        }
    }
}
