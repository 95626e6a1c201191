//! Running identity checks over many parameter points.
//!
//! Parameter points are processed in parallel; results are returned in a
//! canonical order (identity, parameter position, index tuple) so the output
//! of a plan never depends on scheduling.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::IdentityError;
use crate::identities::{self as id, IdentityContext, IdentityReport, ReportPart};
use crate::repr::ToJson;
use crate::Params;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityKind {
    Binet,
    HybridBinet,
    RootPowers,
    UvClosedForms,
    NegativeIndex,
    Character,
    FourTermRecurrence,
    GeneratingFunction,
    LemmaProducts,
    LemmaSquares,
    Vajda,
    Catalan,
    CassiniMatrix,
    Summation,
    BinomialSums,
    FibLucasRelations,
}

impl IdentityKind {
    pub const ALL: [IdentityKind; 16] = [
        IdentityKind::Binet,
        IdentityKind::HybridBinet,
        IdentityKind::RootPowers,
        IdentityKind::UvClosedForms,
        IdentityKind::NegativeIndex,
        IdentityKind::Character,
        IdentityKind::FourTermRecurrence,
        IdentityKind::GeneratingFunction,
        IdentityKind::LemmaProducts,
        IdentityKind::LemmaSquares,
        IdentityKind::Vajda,
        IdentityKind::Catalan,
        IdentityKind::CassiniMatrix,
        IdentityKind::Summation,
        IdentityKind::BinomialSums,
        IdentityKind::FibLucasRelations,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::Binet => "binet",
            IdentityKind::HybridBinet => "hybrid_binet",
            IdentityKind::RootPowers => "root_powers",
            IdentityKind::UvClosedForms => "u_v_closed_forms",
            IdentityKind::NegativeIndex => "negative_index",
            IdentityKind::Character => "character",
            IdentityKind::FourTermRecurrence => "four_term_recurrence",
            IdentityKind::GeneratingFunction => "generating_function",
            IdentityKind::LemmaProducts => "lemma_products",
            IdentityKind::LemmaSquares => "lemma_squares",
            IdentityKind::Vajda => "vajda",
            IdentityKind::Catalan => "catalan",
            IdentityKind::CassiniMatrix => "cassini_matrix",
            IdentityKind::Summation => "summation",
            IdentityKind::BinomialSums => "binomial_sums",
            IdentityKind::FibLucasRelations => "fib_lucas_relations",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }

    /// Index variables, in the order they appear in a report's index tuple.
    pub fn variables(self) -> &'static [&'static str] {
        match self {
            IdentityKind::RootPowers | IdentityKind::NegativeIndex => &["m"],
            IdentityKind::GeneratingFunction => &["degree"],
            IdentityKind::LemmaProducts | IdentityKind::LemmaSquares => &["xi"],
            IdentityKind::Vajda => &["n", "r", "s"],
            IdentityKind::Catalan | IdentityKind::BinomialSums => &["n", "r"],
            IdentityKind::FibLucasRelations => &["n"],
            _ => &["n"],
        }
    }
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Inclusive index range.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub lo: i64,
    pub hi: i64,
}

impl Span {
    pub const fn new(lo: i64, hi: i64) -> Self {
        Self { lo, hi }
    }

    pub fn iter(self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi
    }
}

/// Index ranges per identity variable. For the Fibonacci/Lucas relations `m`
/// always runs over `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ranges {
    spans: Vec<(IdentityKind, &'static str, Span)>,
}

impl Default for Ranges {
    fn default() -> Self {
        use IdentityKind::*;
        let spans = vec![
            (Binet, "n", Span::new(0, 40)),
            (HybridBinet, "n", Span::new(0, 30)),
            (RootPowers, "m", Span::new(1, 20)),
            (UvClosedForms, "n", Span::new(0, 40)),
            (NegativeIndex, "m", Span::new(0, 20)),
            (Character, "n", Span::new(0, 20)),
            (FourTermRecurrence, "n", Span::new(4, 40)),
            (GeneratingFunction, "degree", Span::new(60, 60)),
            (LemmaProducts, "xi", Span::new(0, 1)),
            (LemmaSquares, "xi", Span::new(0, 1)),
            (Vajda, "n", Span::new(0, 12)),
            (Vajda, "r", Span::new(0, 4)),
            (Vajda, "s", Span::new(0, 4)),
            (Catalan, "n", Span::new(0, 12)),
            (Catalan, "r", Span::new(0, 3)),
            (CassiniMatrix, "n", Span::new(1, 10)),
            (Summation, "n", Span::new(1, 25)),
            (BinomialSums, "n", Span::new(0, 15)),
            (BinomialSums, "r", Span::new(0, 4)),
            (FibLucasRelations, "n", Span::new(1, 20)),
        ];
        Self { spans }
    }
}

/// Lowest index each variable accepts.
fn floor_of(kind: IdentityKind, var: &str) -> i64 {
    use IdentityKind::*;
    match (kind, var) {
        (RootPowers, _) | (CassiniMatrix, _) | (Summation, _) | (FibLucasRelations, _) => 1,
        (FourTermRecurrence, _) | (GeneratingFunction, _) => 4,
        _ => 0,
    }
}

impl Ranges {
    pub fn get(&self, kind: IdentityKind, var: &str) -> Span {
        self.spans
            .iter()
            .find(|(k, v, _)| *k == kind && *v == var)
            .map(|t| t.2)
            .expect("every identity variable has a range")
    }

    /// Replaces one range, validating the variable name and lower bound.
    pub fn set(&mut self, kind: IdentityKind, var: &str, span: Span) -> Result<(), String> {
        if span.lo > span.hi {
            return Err(format!("{kind}.{var}: empty range {}..={}", span.lo, span.hi));
        }
        let floor = floor_of(kind, var);
        if span.lo < floor {
            return Err(format!("{kind}.{var}: lower bound {} is below {floor}", span.lo));
        }
        let lemma = kind == IdentityKind::LemmaProducts || kind == IdentityKind::LemmaSquares;
        if lemma && span.hi > 1 {
            return Err(format!("{kind}.xi: must lie in 0..=1"));
        }
        match self.spans.iter_mut().find(|(k, v, _)| *k == kind && *v == var) {
            Some(slot) => {
                slot.2 = span;
                Ok(())
            }
            None => Err(format!(
                "{kind} has no index {var:?}; expected one of {:?}",
                kind.variables()
            )),
        }
    }

    fn tuples(&self, kind: IdentityKind) -> Vec<Vec<i64>> {
        use IdentityKind::*;
        let g = |v| self.get(kind, v);
        match kind {
            Vajda => {
                let mut out = Vec::new();
                for n in g("n").iter() {
                    for r in g("r").iter() {
                        for s in g("s").iter() {
                            out.push(vec![n, r, s]);
                        }
                    }
                }
                out
            }
            Catalan | BinomialSums => g("n")
                .iter()
                .flat_map(|n| g("r").iter().map(move |r| vec![n, r]))
                .collect(),
            FibLucasRelations => g("n").iter().flat_map(|n| (0..n).map(move |m| vec![n, m])).collect(),
            _ => g(kind.variables()[0]).iter().map(|x| vec![x]).collect(),
        }
    }
}

/// Which identities to run, where and over which indices.
#[derive(Clone, Debug)]
pub struct SweepPlan {
    pub params: Vec<Params>,
    pub identities: Vec<IdentityKind>,
    pub ranges: Ranges,
    /// Error kinds (see [`IdentityError::kind`]) that count as expected outcomes.
    pub expected_errors: BTreeSet<String>,
}

impl SweepPlan {
    pub fn new(params: Vec<Params>, identities: Vec<IdentityKind>) -> Self {
        Self {
            params,
            identities,
            ranges: Ranges::default(),
            expected_errors: BTreeSet::new(),
        }
    }

    /// Every identity over the standard grid with the default ranges, with the
    /// summation denominator-zero tuples declared expected.
    pub fn standard() -> Self {
        let mut plan = Self::new(crate::grid::standard_grid(), IdentityKind::ALL.to_vec());
        plan.expected_errors.insert("summation_denominator_zero".into());
        plan
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    Passed,
    /// Only the failing parts are kept.
    Failed(Vec<ReportPart>),
    Error { error: IdentityError, expected: bool },
}

/// One check at one parameter point and index tuple.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepRecord {
    pub identity: IdentityKind,
    /// Position in [`SweepPlan::params`].
    pub param_index: usize,
    pub indices: Vec<i64>,
    pub outcome: Outcome,
}

impl SweepRecord {
    fn from_report(identity: IdentityKind, param_index: usize, r: IdentityReport) -> Self {
        let outcome = if r.passed {
            Outcome::Passed
        } else {
            Outcome::Failed(r.failed_parts().cloned().collect())
        };
        Self {
            identity,
            param_index,
            indices: r.indices,
            outcome,
        }
    }

    pub fn is_ok(&self) -> bool {
        match &self.outcome {
            Outcome::Passed => true,
            Outcome::Failed(_) => false,
            Outcome::Error { expected, .. } => *expected,
        }
    }

    pub fn status(&self) -> &'static str {
        match &self.outcome {
            Outcome::Passed => "pass",
            Outcome::Failed(_) => "fail",
            Outcome::Error { expected: true, .. } => "expected_error",
            Outcome::Error { expected: false, .. } => "error",
        }
    }

    pub fn to_json(&self, params: &Params) -> Value {
        let mut v = json!({
            "identity": self.identity.name(),
            "params": params.to_json(),
            "indices": self.indices,
            "status": self.status(),
        });
        match &self.outcome {
            Outcome::Passed => {}
            Outcome::Failed(parts) => {
                v["failures"] = Value::Array(parts.iter().map(ToJson::to_json).collect());
            }
            Outcome::Error { error, .. } => {
                v["error_kind"] = json!(error.kind());
                v["error"] = json!(error.to_string());
            }
        }
        v
    }
}

/// Per-identity counts.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SummaryRow {
    pub grid_size: usize,
    pub checks: usize,
    pub passes: usize,
    pub failures: usize,
    pub expected_errors: usize,
    pub errors: usize,
}

impl SummaryRow {
    pub fn ok(&self) -> bool {
        self.failures == 0 && self.errors == 0
    }
}

#[derive(Debug)]
pub struct SweepResult {
    pub params: Vec<Params>,
    pub records: Vec<SweepRecord>,
}

impl SweepResult {
    pub fn all_ok(&self) -> bool {
        self.records.iter().all(SweepRecord::is_ok)
    }

    pub fn summary(&self) -> Vec<(IdentityKind, SummaryRow)> {
        let mut rows: Vec<(IdentityKind, SummaryRow, BTreeSet<usize>)> = Vec::new();
        for r in &self.records {
            if rows.last().map(|x| x.0) != Some(r.identity) {
                rows.push((r.identity, SummaryRow::default(), BTreeSet::new()));
            }
            let (_, row, seen) = rows.last_mut().unwrap();
            seen.insert(r.param_index);
            row.checks += 1;
            match &r.outcome {
                Outcome::Passed => row.passes += 1,
                Outcome::Failed(_) => row.failures += 1,
                Outcome::Error { expected: true, .. } => row.expected_errors += 1,
                Outcome::Error { expected: false, .. } => row.errors += 1,
            }
        }
        rows.into_iter()
            .map(|(k, mut row, seen)| {
                row.grid_size = seen.len();
                (k, row)
            })
            .collect()
    }

    /// `identity,grid_size,checks,passes,failures,expected_errors,errors`.
    pub fn summary_csv(&self) -> String {
        let mut s = String::from("identity,grid_size,checks,passes,failures,expected_errors,errors\n");
        for (k, r) in self.summary() {
            s.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                k, r.grid_size, r.checks, r.passes, r.failures, r.expected_errors, r.errors
            ));
        }
        s
    }

    pub fn records_for(&self, kind: IdentityKind) -> impl Iterator<Item = &SweepRecord> {
        self.records.iter().filter(move |r| r.identity == kind)
    }

    pub fn params_of(&self, r: &SweepRecord) -> &Params {
        &self.params[r.param_index]
    }
}

fn run_one(ctx: &IdentityContext, kind: IdentityKind, idx: &[i64]) -> Result<IdentityReport, IdentityError> {
    use IdentityKind::*;
    Ok(match kind {
        Binet => id::check_binet(ctx, idx[0]),
        HybridBinet => id::check_hybrid_binet(ctx, idx[0]),
        RootPowers => id::check_root_powers(ctx, idx[0]),
        UvClosedForms => id::check_u_v_closed_forms(ctx, idx[0]),
        NegativeIndex => id::check_negative_index(ctx, idx[0]),
        Character => id::check_character(ctx, idx[0]),
        FourTermRecurrence => id::check_four_term_recurrence(ctx, idx[0]),
        GeneratingFunction => id::check_generating_function(ctx, idx[0]),
        LemmaProducts => id::check_lemma_products(ctx, idx[0]),
        LemmaSquares => id::check_lemma_squares(ctx, idx[0]),
        Vajda => id::check_vajda(ctx, idx[0], idx[1], idx[2]),
        Catalan => id::check_catalan(ctx, idx[0], idx[1]),
        CassiniMatrix => id::check_cassini_and_matrix(ctx, idx[0]),
        Summation => return id::check_summation(ctx, idx[0]),
        BinomialSums => return id::check_binomial_sums(ctx, idx[0], idx[1]),
        FibLucasRelations => return id::check_fib_lucas_relations(ctx, idx[0], idx[1]),
    })
}

/// Runs a plan. Identities are reported in the order given by the plan;
/// within one identity, by parameter position, then index tuple.
pub fn run(plan: &SweepPlan) -> SweepResult {
    let tuples: Vec<(IdentityKind, Vec<Vec<i64>>)> =
        plan.identities.iter().map(|&k| (k, plan.ranges.tuples(k))).collect();
    let per_point: Vec<Vec<SweepRecord>> = plan
        .params
        .par_iter()
        .enumerate()
        .map(|(pi, p)| {
            let ctx = IdentityContext::new(p.clone());
            let mut out = Vec::new();
            for (kind, idxs) in &tuples {
                for idx in idxs {
                    let rec = match run_one(&ctx, *kind, idx) {
                        Ok(r) => SweepRecord::from_report(*kind, pi, r),
                        Err(error) => {
                            let expected = plan.expected_errors.contains(error.kind());
                            SweepRecord {
                                identity: *kind,
                                param_index: pi,
                                indices: idx.clone(),
                                outcome: Outcome::Error { error, expected },
                            }
                        }
                    };
                    out.push(rec);
                }
            }
            out
        })
        .collect();
    let position = |k: IdentityKind| plan.identities.iter().position(|&x| x == k).unwrap();
    let mut records: Vec<SweepRecord> = per_point.into_iter().flatten().collect();
    // stable: per-point order already follows the index tuples
    records.sort_by_key(|r| (position(r.identity), r.param_index));
    SweepResult {
        params: plan.params.clone(),
        records,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::family_lookup;

    #[test]
    fn names_round_trip() {
        for k in IdentityKind::ALL {
            assert_eq!(IdentityKind::from_name(k.name()), Some(k));
        }
        assert_eq!(IdentityKind::from_name("nope"), None);
    }

    #[test]
    fn range_validation() {
        let mut r = Ranges::default();
        assert!(r.set(IdentityKind::Vajda, "s", Span::new(0, 2)).is_ok());
        assert!(r.set(IdentityKind::Vajda, "m", Span::new(0, 2)).is_err());
        assert!(r.set(IdentityKind::Summation, "n", Span::new(0, 2)).is_err());
        assert!(r.set(IdentityKind::LemmaSquares, "xi", Span::new(0, 2)).is_err());
        assert!(r.set(IdentityKind::Binet, "n", Span::new(3, 2)).is_err());
        assert_eq!(r.tuples(IdentityKind::Vajda).len(), 13 * 5 * 3);
    }

    #[test]
    fn relations_tuples_are_triangular() {
        let mut r = Ranges::default();
        r.set(IdentityKind::FibLucasRelations, "n", Span::new(1, 4)).unwrap();
        assert_eq!(r.tuples(IdentityKind::FibLucasRelations).len(), 1 + 2 + 3 + 4);
    }

    #[test]
    fn deterministic_and_ordered() {
        let params = vec![
            family_lookup("fibonacci", &[]).unwrap(),
            family_lookup("pell", &[]).unwrap(),
            family_lookup("jacobsthal", &[]).unwrap(),
        ];
        let mut plan = SweepPlan::new(params, vec![IdentityKind::Summation, IdentityKind::Binet]);
        plan.ranges.set(IdentityKind::Binet, "n", Span::new(0, 5)).unwrap();
        plan.ranges.set(IdentityKind::Summation, "n", Span::new(1, 3)).unwrap();
        let a = run(&plan);
        let b = run(&plan);
        assert_eq!(a.records, b.records);
        assert_eq!(a.records[0].identity, IdentityKind::Summation);
        assert_eq!(a.records.len(), 3 * 3 + 3 * 6);
        // jacobsthal: denominator zero, not declared expected
        assert!(!a.all_ok());
        let summary = a.summary();
        assert_eq!(summary[0].1.errors, 3);
        assert_eq!(summary[0].1.passes, 6);
        assert!(summary[1].1.ok());

        plan.expected_errors.insert("summation_denominator_zero".into());
        let c = run(&plan);
        assert!(c.all_ok());
        assert!(c.summary_csv().starts_with("identity,grid_size,checks,"));
    }
}
