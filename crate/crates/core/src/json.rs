//! JSON forms of product tables, representations and cocycles.
//!
//! Scalars are strings in the grammar of [`parse_ratfun`]; output uses the canonical form.

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::lssa::{evaluation_map, Cocycle, ProductTable};
use crate::reps::Representation;
use crate::scalar::{parse_ratfun, RatFun, Scalar};
use crate::superlie::{Algebra, LieSuperalgebra, SuperSpace};
use serde_json::{json, Map, Value};

pub const VERSION: u64 = 1;

/// `sl(m|n)` or `gl(m|n)`.
pub fn algebra_from_name(name: &str) -> Result<Algebra> {
    let bad = || Error::Parse(format!("unknown algebra {name:?}"));
    let (kind, rest) = name.split_once('(').ok_or_else(bad)?;
    let inner = rest.strip_suffix(')').ok_or_else(bad)?;
    let (m, n) = inner.split_once('|').ok_or_else(bad)?;
    let m: usize = m.trim().parse().map_err(|_| bad())?;
    let n: usize = n.trim().parse().map_err(|_| bad())?;
    match kind.trim() {
        "sl" if m >= 1 && n >= 1 && m != n => Ok(LieSuperalgebra::sl(m, n)),
        "gl" => Ok(LieSuperalgebra::gl(m, n)),
        _ => Err(bad()),
    }
}

fn scalar(v: &Value) -> Result<RatFun> {
    match v {
        Value::String(s) => parse_ratfun(s),
        Value::Number(n) => parse_ratfun(&n.to_string()),
        _ => Err(Error::Json(format!("expected a scalar, found {v}"))),
    }
}

fn object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| Error::Json(format!("{what} must be an object")))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Json(format!("missing field {key:?}")))
}

fn strings(v: &Value, what: &str) -> Result<Vec<String>> {
    v.as_array()
        .ok_or_else(|| Error::Json(format!("{what} must be an array")))?
        .iter()
        .map(|s| s.as_str().map(str::to_string).ok_or_else(|| Error::Json(format!("{what} must hold strings"))))
        .collect()
}

fn check_version(v: &Value) -> Result<()> {
    match v.get("version").and_then(Value::as_u64) {
        Some(VERSION) | None => Ok(()),
        Some(other) => Err(Error::Json(format!("unsupported version {other}"))),
    }
}

/// Coordinates keyed by basis label.
fn labelled_vector(v: &Value, labels: &[String]) -> Result<Vec<RatFun>> {
    let mut out = vec![RatFun::zero(); labels.len()];
    for (name, c) in object(v, "vector")? {
        let l = labels.iter().position(|x| x == name).ok_or_else(|| Error::Json(format!("unknown basis label {name:?}")))?;
        out[l] = scalar(c)?;
    }
    Ok(out)
}

fn labelled_json<F: Scalar>(v: &[F], labels: &[String]) -> Value {
    let mut m = Map::new();
    for (l, c) in v.iter().enumerate() {
        if !c.is_zero() {
            m.insert(labels[l].clone(), Value::String(c.canonical()));
        }
    }
    Value::Object(m)
}

pub fn table_to_json<F: Scalar>(t: &ProductTable<F>) -> Value {
    let g = t.algebra();
    let labels: Vec<String> = g.labels().map(str::to_string).collect();
    let mut products = Map::new();
    for i in 0..g.dim() {
        for j in 0..g.dim() {
            let p = t.product(i, j);
            if p.is_empty() {
                continue;
            }
            let mut m = Map::new();
            for (l, c) in p {
                m.insert(labels[*l].clone(), Value::String(c.canonical()));
            }
            products.insert(format!("{}*{}", labels[i], labels[j]), Value::Object(m));
        }
    }
    json!({
        "version": VERSION,
        "algebra": g.name(),
        "parameters": t.parameters(),
        "basis": labels,
        "products": products,
    })
}

pub fn table_from_json(text: &str) -> Result<ProductTable<RatFun>> {
    let v: Value = serde_json::from_str(text)?;
    table_from_value(&v)
}

pub fn table_from_value(v: &Value) -> Result<ProductTable<RatFun>> {
    check_version(v)?;
    let g = algebra_from_name(field(v, "algebra")?.as_str().ok_or_else(|| Error::Json("algebra must be a string".into()))?)?;
    let parameters = match v.get("parameters") {
        Some(p) => strings(p, "parameters")?,
        None => Vec::new(),
    };
    let labels: Vec<String> = g.labels().map(str::to_string).collect();
    if let Some(b) = v.get("basis") {
        if strings(b, "basis")? != labels {
            return Err(Error::Json(format!("basis does not match {}", g.name())));
        }
    }
    let mut t = ProductTable::zero(g.clone()).with_parameters(parameters);
    for (key, entry) in object(field(v, "products")?, "products")? {
        let (a, b) = key.split_once('*').ok_or_else(|| Error::Json(format!("bad product key {key:?}")))?;
        let i = g.index_of(a.trim()).ok_or_else(|| Error::Json(format!("unknown basis label {a:?}")))?;
        let j = g.index_of(b.trim()).ok_or_else(|| Error::Json(format!("unknown basis label {b:?}")))?;
        let dense = labelled_vector(entry, &labels)?;
        t.set_product(i, j, dense.into_iter().enumerate().collect());
    }
    Ok(t)
}

/// Actions are stored sparsely as `[row, col, value]` triples.
pub fn rep_to_json<F: Scalar>(r: &Representation<F>) -> Value {
    let g = r.algebra();
    let sp = r.space();
    let mut action = Map::new();
    for (i, name) in g.labels().enumerate() {
        let m = r.action(i);
        let mut triples = Vec::new();
        for row in 0..m.rows() {
            for col in 0..m.cols() {
                if !m[(row, col)].is_zero() {
                    triples.push(json!([row, col, m[(row, col)].canonical()]));
                }
            }
        }
        action.insert(name.to_string(), Value::Array(triples));
    }
    json!({
        "version": VERSION,
        "algebra": g.name(),
        "even": sp.labels()[sp.even_range()].to_vec(),
        "odd": sp.labels()[sp.odd_range()].to_vec(),
        "action": action,
    })
}

pub fn rep_from_value(v: &Value) -> Result<Representation<RatFun>> {
    check_version(v)?;
    let g = algebra_from_name(field(v, "algebra")?.as_str().ok_or_else(|| Error::Json("algebra must be a string".into()))?)?;
    let space = SuperSpace::new(strings(field(v, "even")?, "even")?, strings(field(v, "odd")?, "odd")?);
    let n = space.dim();
    let acts = object(field(v, "action")?, "action")?;
    let mut mats = vec![Matrix::<RatFun>::zeros(n, n); g.dim()];
    for (name, triples) in acts {
        let i = g.index_of(name).ok_or_else(|| Error::Json(format!("unknown basis label {name:?}")))?;
        for t in triples.as_array().ok_or_else(|| Error::Json("action entries must be arrays".into()))? {
            let t = t.as_array().filter(|t| t.len() == 3).ok_or_else(|| Error::Json("expected [row, col, value]".into()))?;
            let idx = |x: &Value| x.as_u64().map(|u| u as usize).filter(|&u| u < n).ok_or_else(|| Error::Json(format!("bad index {x}")));
            mats[i][(idx(&t[0])?, idx(&t[1])?)] = scalar(&t[2])?;
        }
    }
    Representation::new(g, space, mats)
}

pub fn rep_from_json(text: &str) -> Result<Representation<RatFun>> {
    rep_from_value(&serde_json::from_str(text)?)
}

/// `{"module": .., "base_point": {label: value}}` for an evaluation map, or
/// `{"module": .., "q": {"x1": {label: value}, ..}}` for an arbitrary even map.
pub fn cocycle_from_json(text: &str) -> Result<Cocycle<RatFun>> {
    let v: Value = serde_json::from_str(text)?;
    let rep = rep_from_value(field(&v, "module")?)?;
    let labels = rep.space().labels().to_vec();
    if let Some(a) = v.get("base_point") {
        return evaluation_map(&rep, &labelled_vector(a, &labels)?);
    }
    let g = rep.algebra().clone();
    let qv = object(field(&v, "q")?, "q")?;
    let mut cols = vec![vec![RatFun::zero(); rep.dim()]; g.dim()];
    for (name, col) in qv {
        let i = g.index_of(name).ok_or_else(|| Error::Json(format!("unknown basis label {name:?}")))?;
        cols[i] = labelled_vector(col, &labels)?;
    }
    Cocycle::new(rep.clone(), Matrix::from_columns(rep.dim(), &cols))
}

pub fn cocycle_to_json<F: Scalar>(c: &Cocycle<F>) -> Value {
    let labels = c.rep.space().labels().to_vec();
    let mut q = Map::new();
    for (i, name) in c.rep.algebra().labels().enumerate() {
        q.insert(name.to_string(), labelled_json(&c.q.column(i), &labels));
    }
    json!({ "module": rep_to_json(&c.rep), "q": q })
}
