//! JSON forms of exact values. Rationals are always strings `"p/q"` (or `"p"`
//! for integers), never floats.

use serde_json::{json, Map, Value};

use crate::error::ArithError;
use crate::hybrid::Hybrid;
use crate::identities::{IdentityReport, ReportPart, Residual};
use crate::quad::QuadExt;
use crate::rational::{format_rational, parse_rational};
use crate::{HybridRat, Params, Rational};

pub trait ToJson {
    fn to_json(&self) -> Value;
}

impl ToJson for Rational {
    fn to_json(&self) -> Value {
        Value::String(format_rational(self))
    }
}

impl ToJson for QuadExt<Rational> {
    fn to_json(&self) -> Value {
        json!({ "rat": self.rat().to_json(), "rad": self.rad().to_json() })
    }
}

impl<S: ToJson> ToJson for Hybrid<S> {
    fn to_json(&self) -> Value {
        json!({
            "re": self.re.to_json(),
            "i": self.i.to_json(),
            "eps": self.eps.to_json(),
            "h": self.h.to_json(),
        })
    }
}

impl ToJson for Params {
    fn to_json(&self) -> Value {
        json!({
            "a": self.a().to_json(),
            "b": self.b().to_json(),
            "c": self.c().to_json(),
            "w0": self.w0().to_json(),
            "w1": self.w1().to_json(),
        })
    }
}

impl ToJson for Residual {
    fn to_json(&self) -> Value {
        match self {
            Residual::Scalar(q) => q.to_json(),
            Residual::Hybrid(h) => h.to_json(),
        }
    }
}

impl ToJson for ReportPart {
    fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("part".into(), Value::String(self.name.clone()));
        if !self.at.is_empty() {
            m.insert("at".into(), json!(self.at));
        }
        m.insert("residual".into(), self.residual.to_json());
        Value::Object(m)
    }
}

impl ToJson for IdentityReport {
    /// Failing parts carry their residuals; passing parts are only counted.
    fn to_json(&self) -> Value {
        let failures: Vec<Value> = self.failed_parts().map(ToJson::to_json).collect();
        json!({
            "identity": self.identity,
            "params": self.params.to_json(),
            "indices": self.indices,
            "passed": self.passed,
            "parts": self.parts.len(),
            "failures": failures,
        })
    }
}

pub fn rational_from_json(v: &Value) -> Result<Rational, ArithError> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() => parse_rational(&n.to_string()),
        other => Err(ArithError::Parse(other.to_string())),
    }
}

pub fn hybrid_from_json(v: &Value) -> Result<HybridRat, ArithError> {
    let get = |k: &str| {
        v.get(k)
            .ok_or_else(|| ArithError::Parse(format!("missing hybrid component {k:?}")))
            .and_then(rational_from_json)
    };
    Ok(Hybrid::new(get("re")?, get("i")?, get("eps")?, get("h")?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn rationals_are_strings() {
        assert_eq!(frac(-6, 4).to_json(), json!("-3/2"));
        assert_eq!(int(7).to_json(), json!("7"));
    }

    #[test]
    fn hybrid_round_trip() {
        let h = Hybrid::new(frac(1, 3), int(-2), frac(22, 7), int(0));
        let text = h.to_json().to_string();
        let back = hybrid_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, h);
    }

    #[test]
    fn rejects_floats() {
        assert!(rational_from_json(&json!(0.5)).is_err());
        assert!(hybrid_from_json(&json!({"re": "1"})).is_err());
    }

    #[test]
    fn quad_shape() {
        let q = QuadExt::new(int(1), frac(1, 2), int(5)).unwrap();
        assert_eq!(q.to_json(), json!({"rat": "1", "rad": "1/2"}));
    }
}
