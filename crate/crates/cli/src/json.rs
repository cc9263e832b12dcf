//! JSON encodings of the core types.
//!
//! Rationals are strings `"p/q"`. A surd is a list of `[radicand, "p/q"]`
//! pairs with radicand 1 for the rational part, and a polynomial in `N` is
//! a list of `[power, surd]`. Operators list their terms as image vectors
//! (1-based) with coefficients. Objects use sorted keys, so identical
//! values always serialize to identical bytes.

use serde_json::{json, Value};
use ybasis_core::basis::{BasisMatrix, Check, Report};
use ybasis_core::coefficients::{format_rational, parse_rational};
use ybasis_core::{
    AlgebraElement, ConcreteMatrix, Permutation, PolyN, Projector, Rational, Surd, TransitionOperator, YoungTableau,
};

#[derive(Debug, thiserror::Error)]
#[error("malformed {what}: {detail}")]
pub struct DecodeError {
    what: &'static str,
    detail: String,
}

fn bad(what: &'static str, detail: impl ToString) -> DecodeError {
    DecodeError {
        what,
        detail: detail.to_string(),
    }
}

pub fn rational(q: &Rational) -> Value {
    Value::String(format_rational(q))
}

pub fn surd(s: &Surd) -> Value {
    Value::Array(s.terms().map(|(d, q)| json!([d, format_rational(q)])).collect())
}

pub fn poly(p: &PolyN) -> Value {
    Value::Array(p.terms().map(|(k, c)| json!([k, surd(c)])).collect())
}

pub fn tableau(t: &YoungTableau) -> Value {
    json!({ "shape": t.shape().rows(), "rows": t.rows() })
}

pub fn operator(a: &AlgebraElement) -> Value {
    let terms: Vec<Value> = a
        .terms()
        .map(|(p, c)| json!({ "perm": p.to_images(), "coeff": surd(c) }))
        .collect();
    json!({ "m": a.degree(), "terms": terms })
}

pub fn projector(p: &Projector) -> Value {
    json!({
        "tableau": tableau(&p.tableau),
        "kind": format!("{:?}", p.kind).to_lowercase(),
        "word": p.word.to_string(),
        "normalization": surd(&p.normalization),
        "operator": operator(&p.element),
        "dimension": poly(&p.dimension()),
    })
}

pub fn transition(t: &TransitionOperator) -> Value {
    json!({
        "to": tableau(&t.to_tableau),
        "from": tableau(&t.from_tableau),
        "kind": format!("{:?}", t.kind).to_lowercase(),
        "tau_squared": rational(&t.tau_squared),
        "word": t.word.to_string(),
        "operator": operator(&t.element),
    })
}

pub fn basis(b: &BasisMatrix) -> Value {
    let blocks: Vec<Value> = b
        .blocks
        .iter()
        .map(|blk| {
            let ops: Vec<Vec<Value>> = blk.operators.iter().map(|r| r.iter().map(operator).collect()).collect();
            json!({
                "diagram": blk.diagram.rows(),
                "tableaux": blk.tableaux.iter().map(tableau).collect::<Vec<_>>(),
                "operators": ops,
            })
        })
        .collect();
    json!({
        "m": b.m,
        "kind": format!("{:?}", b.kind).to_lowercase(),
        "blocks": blocks,
    })
}

pub fn matrix(c: &ConcreteMatrix) -> Value {
    let entries: Vec<Value> = c.triplets().map(|(r, k, v)| json!([r, k, surd(v)])).collect();
    json!({ "n": c.n(), "m": c.m(), "dim": c.dim(), "entries": entries })
}

fn check(c: &Check) -> Value {
    json!({
        "identity": c.identity,
        "passed": c.passed(),
        "checked": c.checked,
        "failures": c.failures,
        "witnesses": c.witnesses,
    })
}

pub fn report(r: &Report) -> Value {
    json!({
        "passed": r.passed(),
        "checks": r.checks.iter().map(check).collect::<Vec<_>>(),
    })
}

pub fn parse_rational_value(v: &Value) -> Result<Rational, DecodeError> {
    match v {
        Value::String(s) => parse_rational(s).ok_or_else(|| bad("rational", s)),
        Value::Number(n) => n
            .as_i64()
            .map(|i| Rational::from_integer(i.into()))
            .ok_or_else(|| bad("rational", n)),
        other => Err(bad("rational", other)),
    }
}

pub fn parse_surd(v: &Value) -> Result<Surd, DecodeError> {
    let terms = v.as_array().ok_or_else(|| bad("surd", v))?;
    let mut pairs = Vec::with_capacity(terms.len());
    for t in terms {
        match t.as_array().map(Vec::as_slice) {
            Some([d, q]) => {
                let d = d.as_u64().ok_or_else(|| bad("surd radicand", d))?;
                pairs.push((d, parse_rational_value(q)?));
            }
            _ => return Err(bad("surd term", t)),
        }
    }
    Surd::from_terms(pairs).map_err(|e| bad("surd", e))
}

pub fn parse_poly(v: &Value) -> Result<PolyN, DecodeError> {
    let terms = v.as_array().ok_or_else(|| bad("polynomial", v))?;
    let mut pairs = Vec::with_capacity(terms.len());
    for t in terms {
        match t.as_array().map(Vec::as_slice) {
            Some([k, c]) => {
                let k = k
                    .as_u64()
                    .and_then(|k| u32::try_from(k).ok())
                    .ok_or_else(|| bad("power", k))?;
                pairs.push((k, parse_surd(c)?));
            }
            _ => return Err(bad("polynomial term", t)),
        }
    }
    Ok(PolyN::from_terms(pairs))
}

fn usize_list(v: &Value, what: &'static str) -> Result<Vec<usize>, DecodeError> {
    v.as_array()
        .ok_or_else(|| bad(what, v))?
        .iter()
        .map(|x| x.as_u64().map(|x| x as usize).ok_or_else(|| bad(what, x)))
        .collect()
}

/// Accepts either `{"shape": .., "rows": [[..]]}` or the bare row list.
pub fn parse_tableau(v: &Value) -> Result<YoungTableau, DecodeError> {
    let rows = v.get("rows").unwrap_or(v);
    let rows = rows
        .as_array()
        .ok_or_else(|| bad("tableau", v))?
        .iter()
        .map(|r| usize_list(r, "tableau row"))
        .collect::<Result<Vec<_>, _>>()?;
    let t = YoungTableau::new(rows).map_err(|e| bad("tableau", e))?;
    if let Some(shape) = v.get("shape") {
        if usize_list(shape, "shape")? != t.shape().rows() {
            return Err(bad("tableau", "shape does not match rows"));
        }
    }
    Ok(t)
}

pub fn parse_operator(v: &Value) -> Result<AlgebraElement, DecodeError> {
    let m = v
        .get("m")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("operator degree", v))? as usize;
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("operator terms", v))?;
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let images = usize_list(t.get("perm").ok_or_else(|| bad("operator term", t))?, "permutation")?;
        let p = Permutation::from_images(&images).map_err(|e| bad("permutation", e))?;
        let c = parse_surd(t.get("coeff").ok_or_else(|| bad("operator term", t))?)?;
        out.push((p, c));
    }
    AlgebraElement::from_terms(m, out).map_err(|e| bad("operator", e))
}
