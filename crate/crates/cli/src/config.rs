//! Sweep configuration: a single JSON document.
//!
//! ```json
//! {
//!   "grid": "standard",
//!   "families": ["fibonacci", {"name": "k-pell", "params": ["2"]}],
//!   "tuples": [{"a": "2", "b": "3", "c": "1", "w0": "0", "w1": "1"}],
//!   "identities": ["summation", "vajda"],
//!   "ranges": {"vajda": {"n": [0, 6], "r": [0, 2]}},
//!   "expected_errors": ["summation_denominator_zero"],
//!   "format": "json",
//!   "out": "records.jsonl",
//!   "summary": "summary.csv"
//! }
//! ```
//!
//! Every key is optional. Without `grid`, `families` and `tuples` the standard
//! grid is used; without `identities` every identity runs. Numbers may be JSON
//! integers or exact strings such as `"5/2"`.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use hybrid_horadam::grid::standard_grid;
use hybrid_horadam::repr::rational_from_json;
use hybrid_horadam::sweep::{IdentityKind, Span, SweepPlan};
use hybrid_horadam::{family_lookup, Params, Rational};
use serde::Deserialize;
use serde_json::Value;

use crate::error::CliError;
use crate::Format;

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    grid: Option<GridName>,
    #[serde(default)]
    families: Vec<FamilyRef>,
    #[serde(default)]
    tuples: Vec<TupleSpec>,
    identities: Option<Vec<String>>,
    #[serde(default)]
    ranges: BTreeMap<String, BTreeMap<String, [i64; 2]>>,
    #[serde(default)]
    expected_errors: Vec<String>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
    pub summary: Option<PathBuf>,
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "lowercase")]
enum GridName {
    Standard,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum FamilyRef {
    Name(String),
    WithParams { name: String, params: Vec<Value> },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct TupleSpec {
    a: Value,
    b: Value,
    c: Value,
    w0: Value,
    w1: Value,
}

const KNOWN_ERRORS: [&str; 2] = ["summation_denominator_zero", "precondition"];

fn number(v: &Value, what: &str) -> Result<Rational, CliError> {
    rational_from_json(v).map_err(|e| CliError::Config(format!("{what}: {e}")))
}

impl SweepConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        serde_json::from_str(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
    }

    fn params(&self) -> Result<Vec<Params>, CliError> {
        let mut out = Vec::new();
        if matches!(self.grid, Some(GridName::Standard)) {
            out.extend(standard_grid());
        }
        for f in &self.families {
            let (name, raw) = match f {
                FamilyRef::Name(n) => (n, &[][..]),
                FamilyRef::WithParams { name, params } => (name, &params[..]),
            };
            let free = raw
                .iter()
                .map(|v| number(v, &format!("family {name}")))
                .collect::<Result<Vec<_>, _>>()?;
            out.push(family_lookup(name, &free).map_err(|e| CliError::Config(format!("family {name}: {e}")))?);
        }
        for (i, t) in self.tuples.iter().enumerate() {
            let what = format!("tuples[{i}]");
            let p = Params::new(
                number(&t.a, &what)?,
                number(&t.b, &what)?,
                number(&t.c, &what)?,
                number(&t.w0, &what)?,
                number(&t.w1, &what)?,
            )
            .map_err(|e| CliError::Config(format!("{what}: {e}")))?;
            out.push(p);
        }
        if self.grid.is_none() && self.families.is_empty() && self.tuples.is_empty() {
            out = standard_grid();
        }
        Ok(out)
    }

    fn identities(&self) -> Result<Vec<IdentityKind>, CliError> {
        let Some(names) = &self.identities else {
            return Ok(IdentityKind::ALL.to_vec());
        };
        if names.is_empty() {
            return Err(CliError::Config("identity list is empty".into()));
        }
        let mut kinds = Vec::new();
        for n in names {
            let k = IdentityKind::from_name(n).ok_or_else(|| unknown_identity(n))?;
            if !kinds.contains(&k) {
                kinds.push(k);
            }
        }
        Ok(kinds)
    }

    pub fn plan(&self) -> Result<SweepPlan, CliError> {
        let mut plan = SweepPlan::new(self.params()?, self.identities()?);
        for (name, vars) in &self.ranges {
            let kind = IdentityKind::from_name(name).ok_or_else(|| unknown_identity(name))?;
            for (var, [lo, hi]) in vars {
                plan.ranges
                    .set(kind, var, Span::new(*lo, *hi))
                    .map_err(CliError::Config)?;
            }
        }
        for e in &self.expected_errors {
            if !KNOWN_ERRORS.contains(&e.as_str()) {
                return Err(CliError::Config(format!(
                    "unknown error kind {e:?}; expected one of {KNOWN_ERRORS:?}"
                )));
            }
            plan.expected_errors.insert(e.clone());
        }
        Ok(plan)
    }
}

fn unknown_identity(name: &str) -> CliError {
    let known: Vec<&str> = IdentityKind::ALL.iter().map(|k| k.name()).collect();
    CliError::Config(format!("unknown identity {name:?}; expected one of {known:?}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Result<SweepPlan, CliError> {
        serde_json::from_str::<SweepConfig>(s).map_err(|e| CliError::Config(e.to_string()))?.plan()
    }

    #[test]
    fn empty_document_is_the_standard_grid_without_expected_errors() {
        let plan = parse("{}").unwrap();
        assert_eq!(plan.params.len(), 396);
        assert_eq!(plan.identities.len(), IdentityKind::ALL.len());
        assert!(plan.expected_errors.is_empty());
    }

    #[test]
    fn sources_are_concatenated_in_order() {
        let plan = parse(
            r#"{"families": ["jacobsthal", {"name": "k-pell", "params": [2]}],
                "tuples": [{"a": "5/2", "b": 3, "c": "-1", "w0": 0, "w1": 1}],
                "identities": ["binet", "binet"]}"#,
        )
        .unwrap();
        assert_eq!(plan.params.len(), 3);
        assert_eq!(plan.params[2].a().to_string(), "5/2");
        assert_eq!(plan.identities, vec![IdentityKind::Binet]);
    }

    #[test]
    fn rejections() {
        for bad in [
            r#"{"identities": []}"#,
            r#"{"identities": ["nope"]}"#,
            r#"{"tuples": [{"a": 1, "b": 1, "c": 0, "w0": 0, "w1": 1}]}"#,
            r#"{"tuples": [{"a": 1, "b": 1, "c": "-1/4", "w0": 0, "w1": 1}]}"#,
            r#"{"families": ["nope"]}"#,
            r#"{"ranges": {"vajda": {"q": [0, 1]}}}"#,
            r#"{"ranges": {"summation": {"n": [0, 3]}}}"#,
            r#"{"expected_errors": ["nope"]}"#,
            r#"{"tuples": [{"a": 1.5, "b": 1, "c": 1, "w0": 0, "w1": 1}]}"#,
            r#"{"extra": 1}"#,
        ] {
            assert!(matches!(parse(bad), Err(CliError::Config(_))), "{bad}");
        }
    }

    #[test]
    fn ranges_override_defaults() {
        let plan = parse(r#"{"ranges": {"vajda": {"n": [2, 3]}}}"#).unwrap();
        assert_eq!(plan.ranges.get(IdentityKind::Vajda, "n"), Span::new(2, 3));
        assert_eq!(plan.ranges.get(IdentityKind::Vajda, "r"), Span::new(0, 4));
    }
}
