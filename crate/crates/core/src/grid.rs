//! The standard parameter grid used by the sweeps and the acceptance suite.

use crate::rational::{frac, int};
use crate::{Params, Rational};

/// `a, b ∈ {1, 2, 3, −1, 5/2}`.
pub fn grid_ab() -> [Rational; 5] {
    [int(1), int(2), int(3), int(-1), frac(5, 2)]
}

/// `c ∈ {1, 2, −1, 3/2}`.
pub fn grid_c() -> [Rational; 4] {
    [int(1), int(2), int(-1), frac(3, 2)]
}

/// Every `(a, b, c)` from the value sets with `Δ² ≠ 0`, crossed with
/// `(w0, w1) ∈ {(0, 1), (2, b), (1, 1), (5, −4)}`, in lexicographic order of the
/// value lists.
pub fn standard_grid() -> Vec<Params> {
    let mut out = Vec::new();
    for a in grid_ab() {
        for b in grid_ab() {
            for c in grid_c() {
                let initial = [(int(0), int(1)), (int(2), b.clone()), (int(1), int(1)), (int(5), int(-4))];
                for (w0, w1) in initial {
                    // zero discriminant is the only possible rejection here
                    if let Ok(p) = Params::new(a.clone(), b.clone(), c.clone(), w0, w1) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_size_and_split() {
        let g = standard_grid();
        assert_eq!(g.len(), 396);
        let equal = g.iter().filter(|p| p.a() == p.b()).count();
        assert_eq!(equal, 76);
        // only (2, 2, -1) has a zero discriminant
        assert!(!g.iter().any(|p| p.a() == &int(2) && p.b() == &int(2) && p.c() == &int(-1)));
    }
}
