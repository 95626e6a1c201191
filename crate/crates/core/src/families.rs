//! Named special cases of the bi-periodic Horadam hybrid numbers.
//!
//! Each row is stored as data: the tuple `(w0, w1; a, b, c)` with slots that
//! are either integer constants or references to the family's free parameters.

use crate::error::ParamError;
use crate::rational::int;
use crate::seq::SeqParams;
use crate::Rational;

/// One entry of a `(w0, w1; a, b, c)` tuple.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    Const(i64),
    /// The free parameter at this position.
    Free(usize),
    /// Negation of a free parameter.
    NegFree(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Family {
    pub name: &'static str,
    pub symbol: &'static str,
    pub description: &'static str,
    pub free: &'static [&'static str],
    /// `[w0, w1, a, b, c]`.
    pub tuple: [Slot; 5],
}

use Slot::{Const as K, Free as F, NegFree as N};

pub const FAMILIES: [Family; 12] = [
    Family {
        name: "bi-periodic-fibonacci",
        symbol: "K_{u,n}",
        description: "generalized bi-periodic Fibonacci hybrid numbers",
        free: &["a", "b", "c"],
        tuple: [K(0), K(1), F(0), F(1), F(2)],
    },
    Family {
        name: "bi-periodic-lucas",
        symbol: "K_{v,n}",
        description: "generalized bi-periodic Lucas hybrid numbers",
        free: &["a", "b", "c"],
        tuple: [K(2), F(1), F(0), F(1), F(2)],
    },
    Family {
        name: "horadam",
        symbol: "K_{W,n}",
        description: "Horadam hybrid numbers",
        free: &["W0", "W1", "p", "q"],
        tuple: [F(0), F(1), F(2), F(2), N(3)],
    },
    Family {
        name: "pq-fibonacci",
        symbol: "K_{U,n}",
        description: "(p,q)-Fibonacci hybrid numbers",
        free: &["p", "q"],
        tuple: [K(0), K(1), F(0), F(0), F(1)],
    },
    Family {
        name: "pq-lucas",
        symbol: "K_{V,n}",
        description: "(p,q)-Lucas hybrid numbers",
        free: &["p", "q"],
        tuple: [K(2), F(0), F(0), F(0), F(1)],
    },
    Family {
        name: "fibonacci",
        symbol: "K_{F,n}",
        description: "Fibonacci hybrid numbers",
        free: &[],
        tuple: [K(0), K(1), K(1), K(1), K(1)],
    },
    Family {
        name: "lucas",
        symbol: "K_{L,n}",
        description: "Lucas hybrid numbers",
        free: &[],
        tuple: [K(2), K(1), K(1), K(1), K(1)],
    },
    Family {
        name: "pell",
        symbol: "K_{P,n}",
        description: "Pell hybrid numbers",
        free: &[],
        tuple: [K(0), K(1), K(2), K(2), K(1)],
    },
    Family {
        name: "pell-lucas",
        symbol: "K_{Q,n}",
        description: "Pell-Lucas hybrid numbers",
        free: &[],
        tuple: [K(2), K(2), K(2), K(2), K(1)],
    },
    Family {
        name: "k-pell",
        symbol: "K_{kP,n}",
        description: "k-Pell hybrid numbers",
        free: &["k"],
        tuple: [K(0), K(1), K(2), K(2), F(0)],
    },
    Family {
        name: "jacobsthal",
        symbol: "K_{J,n}",
        description: "Jacobsthal hybrid numbers",
        free: &[],
        tuple: [K(0), K(1), K(1), K(1), K(2)],
    },
    Family {
        name: "jacobsthal-lucas",
        symbol: "K_{j,n}",
        description: "Jacobsthal-Lucas hybrid numbers",
        free: &[],
        tuple: [K(2), K(1), K(1), K(1), K(2)],
    },
];

impl Family {
    pub fn by_name(name: &str) -> Result<&'static Family, ParamError> {
        FAMILIES
            .iter()
            .find(|f| f.name == name)
            .ok_or_else(|| ParamError::UnknownFamily(name.to_string()))
    }

    /// `[w0, w1, a, b, c]` for the given free parameters.
    pub fn resolve(&self, free: &[Rational]) -> Result<[Rational; 5], ParamError> {
        if free.len() != self.free.len() {
            return Err(ParamError::FreeParamCount {
                family: self.name,
                expected: self.free.len(),
                names: self.free.join(", "),
                got: free.len(),
            });
        }
        Ok(self.tuple.map(|slot| match slot {
            Slot::Const(v) => int(v),
            Slot::Free(i) => free[i].clone(),
            Slot::NegFree(i) => -free[i].clone(),
        }))
    }

    /// The tuple rendered as `(w0,w1;a,b,c)` with free parameters by name.
    pub fn tuple_text(&self) -> String {
        let r = |s: &Slot| match *s {
            Slot::Const(v) => v.to_string(),
            Slot::Free(i) => self.free[i].to_string(),
            Slot::NegFree(i) => format!("-{}", self.free[i]),
        };
        let t: Vec<String> = self.tuple.iter().map(r).collect();
        format!("({},{};{},{},{})", t[0], t[1], t[2], t[3], t[4])
    }
}

/// Parameters of a named family.
pub fn family_lookup(name: &str, free: &[Rational]) -> Result<SeqParams<Rational>, ParamError> {
    let [w0, w1, a, b, c] = Family::by_name(name)?.resolve(free)?;
    SeqParams::new(a, b, c, w0, w1)
}
