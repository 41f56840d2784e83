//! JSON form of expansions.
//!
//! ```text
//! {"basis":"schur","terms":[{"coeff":1,"partition":[3,2,2,2]}]}
//! {"basis":"skew","terms":[{"coeff":-1,"outer":[3,2,2,1],"inner":[1]}]}
//! ```
//!
//! Terms are listed in lexicographic order. Coefficients are JSON integers of
//! any size.

use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

use crate::error::{Error, Result};
use crate::shapes::{Partition, SkewShape};
use crate::symfunc::{SchurExpansion, SkewExpansion};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expansion {
    Schur(SchurExpansion),
    Skew(SkewExpansion),
}

fn number(c: &BigInt) -> Value {
    Value::Number(Number::from_str(&c.to_string()).expect("integers are valid JSON numbers"))
}

pub fn schur_to_value(f: &SchurExpansion) -> Value {
    let terms: Vec<Value> = f
        .terms()
        .iter()
        .map(|(p, c)| json!({"coeff": number(c), "partition": p.parts()}))
        .collect();
    json!({"basis": "schur", "terms": terms})
}

pub fn skew_to_value(f: &SkewExpansion) -> Value {
    let terms: Vec<Value> = f
        .terms()
        .iter()
        .map(|(s, c)| json!({"coeff": number(c), "outer": s.outer().parts(), "inner": s.inner().parts()}))
        .collect();
    json!({"basis": "skew", "terms": terms})
}

pub fn to_value(e: &Expansion) -> Value {
    match e {
        Expansion::Schur(f) => schur_to_value(f),
        Expansion::Skew(f) => skew_to_value(f),
    }
}

pub fn to_string(e: &Expansion) -> String {
    serde_json::to_string(&to_value(e)).expect("values serialize")
}

fn bad(token: impl Into<String>, reason: &str) -> Error {
    Error::Parse {
        token: token.into(),
        reason: reason.to_string(),
    }
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| bad(key, "missing field"))
}

fn parts(v: &Value, key: &str) -> Result<Partition> {
    let arr = v.as_array().ok_or_else(|| bad(key, "expected an array"))?;
    let parts = arr
        .iter()
        .map(|x| x.as_u64().map(|n| n as usize).ok_or_else(|| bad(x.to_string(), "expected a positive integer")))
        .collect::<Result<Vec<_>>>()?;
    if parts.contains(&0) {
        return Err(bad(v.to_string(), "parts must be positive"));
    }
    Partition::new(parts).map_err(|_| bad(v.to_string(), "parts must be weakly decreasing"))
}

fn coeff(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => BigInt::from_str(&n.to_string()).map_err(|_| bad(n.to_string(), "expected an integer")),
        other => Err(bad(other.to_string(), "expected an integer")),
    }
}

pub fn from_value(v: &Value) -> Result<Expansion> {
    let obj = v.as_object().ok_or_else(|| bad(v.to_string(), "expected an object"))?;
    let basis = field(obj, "basis")?.as_str().ok_or_else(|| bad("basis", "expected a string"))?;
    let terms = field(obj, "terms")?.as_array().ok_or_else(|| bad("terms", "expected an array"))?;
    let term_obj = |t: &Value| t.as_object().cloned().ok_or_else(|| bad(t.to_string(), "expected an object"));
    match basis {
        "schur" => {
            let mut out = SchurExpansion::zero();
            for t in terms {
                let t = term_obj(t)?;
                out.add_term(parts(field(&t, "partition")?, "partition")?, coeff(field(&t, "coeff")?)?);
            }
            Ok(Expansion::Schur(out))
        }
        "skew" => {
            let mut out = SkewExpansion::zero();
            for t in terms {
                let t = term_obj(t)?;
                let outer = parts(field(&t, "outer")?, "outer")?;
                let inner = parts(field(&t, "inner")?, "inner")?;
                out.add_term(SkewShape::new(outer, inner)?, coeff(field(&t, "coeff")?)?);
            }
            Ok(Expansion::Skew(out))
        }
        other => Err(bad(other, "basis must be \"schur\" or \"skew\"")),
    }
}

pub fn parse(s: &str) -> Result<Expansion> {
    let v: Value = serde_json::from_str(s).map_err(|e| bad(s.chars().take(40).collect::<String>(), &e.to_string()))?;
    from_value(&v)
}
