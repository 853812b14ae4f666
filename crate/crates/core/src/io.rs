//! JSON formats and a deterministic writer.
//!
//! ```text
//! point set      {"dim": 2, "points": [[0, 0], ["1/3", "0.5"]]}
//! hypergraph     {"n": 3, "edges": [[0, 1], [0, 1, 2]]}
//! family         {"kind": "hregion", "halfspaces": [[1, 0], [1, 1]]}
//! edge coloring  {"k": 2, "edges": [[0, 1, 1], [1, 2, 2]]}
//! tuple coloring {"t": 2, "k": 2, "tuples": [[0, 1, 1], [0, 2, 2], [1, 2, 1]]}
//! ```
//!
//! Coordinates that are integers within `i64` are written as numbers, all
//! others as exact strings. Unknown keys are ignored on input.

use num::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::edges::EdgeColoring;
use crate::error::{Error, Result};
use crate::families::{FamilyKind, HalfspaceSpec};
use crate::geometry::{format_rational, parse_rational, Point, PointSet, Q};
use crate::hypergraph::Hypergraph;
use crate::tuples::TupleColoring;
use crate::vertex_set::VertexSet;

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| parse_err(format!("missing field \"{key}\"")))
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| parse_err(format!("{what} must be a non-negative integer")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| parse_err(format!("{what} must be an array")))
}

fn rational_to_json(r: &Q) -> Value {
    match (r.is_integer(), r.to_integer().to_i64()) {
        (true, Some(i)) => json!(i),
        _ => json!(format_rational(r)),
    }
}

fn rational_from_json(v: &Value) -> Result<Q> {
    match v {
        Value::Number(n) => parse_rational(&n.to_string()),
        Value::String(s) => parse_rational(s),
        _ => Err(parse_err(format!("coordinate {v} must be a number or string"))),
    }
}

fn coords_to_json(p: &Point) -> Value {
    Value::Array(p.coords().iter().map(rational_to_json).collect())
}

fn coords_from_json(v: &Value) -> Result<Point> {
    as_array(v, "point")?.iter().map(rational_from_json).collect::<Result<Vec<_>>>().map(Point::new)
}

pub fn point_set_to_json(s: &PointSet) -> Value {
    json!({"dim": s.dim(), "points": s.points().iter().map(coords_to_json).collect::<Vec<_>>()})
}

pub fn point_set_from_json(v: &Value) -> Result<PointSet> {
    let dim = as_usize(field(v, "dim")?, "dim")?;
    let points = as_array(field(v, "points")?, "points")?.iter().map(coords_from_json).collect::<Result<_>>()?;
    PointSet::new(dim, points)
}

pub fn hypergraph_to_json(h: &Hypergraph) -> Value {
    json!({"n": h.n(), "edges": h.edges().iter().map(VertexSet::to_vec).collect::<Vec<_>>()})
}

pub fn hypergraph_from_json(v: &Value) -> Result<Hypergraph> {
    let n = as_usize(field(v, "n")?, "n")?;
    let edges = as_array(field(v, "edges")?, "edges")?
        .iter()
        .map(|e| {
            as_array(e, "hyperedge")?
                .iter()
                .map(|x| as_usize(x, "vertex"))
                .collect::<Result<VertexSet>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Hypergraph::new(n, edges)
}

pub fn family_to_json(f: &FamilyKind) -> Value {
    let mut m = Map::new();
    m.insert("kind".into(), json!(f.name()));
    if let FamilyKind::HRegion(hs) = f {
        m.insert("halfspaces".into(), Value::Array(hs.iter().map(|h| coords_to_json(h.normal())).collect()));
    }
    Value::Object(m)
}

pub fn family_from_json(v: &Value) -> Result<FamilyKind> {
    let kind = field(v, "kind")?.as_str().ok_or_else(|| parse_err("kind must be a string"))?;
    let halfspaces = match v.get("halfspaces") {
        Some(hs) => as_array(hs, "halfspaces")?
            .iter()
            .map(|n| HalfspaceSpec::new(coords_from_json(n)?))
            .collect::<Result<Vec<_>>>()?,
        None => Vec::new(),
    };
    family_from_name(kind, halfspaces)
}

/// The family called `name`; `halfspaces` is used by `hregion` only.
pub fn family_from_name(name: &str, halfspaces: Vec<HalfspaceSpec>) -> Result<FamilyKind> {
    Ok(match name {
        "halfplane" => FamilyKind::Halfplane,
        "bottomless" => FamilyKind::BottomlessRect,
        "axisrect" => FamilyKind::AxisRect,
        "disk" => FamilyKind::Disk,
        "boxd" => FamilyKind::BoxD,
        "hregion" => {
            if halfspaces.is_empty() {
                return Err(parse_err("hregion needs a nonempty \"halfspaces\" list"));
            }
            FamilyKind::HRegion(halfspaces)
        }
        other => return Err(parse_err(format!("unknown family \"{other}\""))),
    })
}

pub fn edge_coloring_to_json(c: &EdgeColoring) -> Value {
    json!({"k": c.k(), "edges": c.iter().map(|((i, j), col)| json!([i, j, col])).collect::<Vec<_>>()})
}

pub fn edge_coloring_from_json(v: &Value) -> Result<EdgeColoring> {
    let k = as_usize(field(v, "k")?, "k")? as u32;
    let entries = as_array(field(v, "edges")?, "edges")?
        .iter()
        .map(|e| match as_array(e, "edge")?.as_slice() {
            [i, j, c] => Ok(((as_usize(i, "vertex")?, as_usize(j, "vertex")?), as_usize(c, "color")? as u32)),
            _ => Err(parse_err("edge entries are [i, j, color]")),
        })
        .collect::<Result<Vec<_>>>()?;
    EdgeColoring::new(k, entries)
}

pub fn tuple_coloring_to_json(c: &TupleColoring) -> Value {
    let tuples: Vec<Value> = c
        .iter()
        .map(|(tuple, col)| Value::Array(tuple.into_iter().map(|v| json!(v)).chain([json!(col)]).collect()))
        .collect();
    json!({"t": c.t(), "k": c.k(), "tuples": tuples})
}

/// Reads a tuple coloring on `0..n`; the format does not record `n`.
pub fn tuple_coloring_from_json(v: &Value, n: usize) -> Result<TupleColoring> {
    let t = as_usize(field(v, "t")?, "t")?;
    let k = as_usize(field(v, "k")?, "k")? as u32;
    let entries = as_array(field(v, "tuples")?, "tuples")?
        .iter()
        .map(|e| {
            let items = as_array(e, "tuple")?;
            let (color, tuple) = items.split_last().ok_or_else(|| parse_err("empty tuple entry"))?;
            let tuple = tuple.iter().map(|x| as_usize(x, "vertex")).collect::<Result<Vec<_>>>()?;
            Ok((tuple, as_usize(color, "color")? as u32))
        })
        .collect::<Result<Vec<_>>>()?;
    TupleColoring::from_entries(n, t, k, entries)
}

/// Pretty JSON with two-space indents, keys in sorted order, and arrays of
/// scalars kept on one line.
pub fn to_pretty(v: &Value) -> String {
    let mut out = String::new();
    write_value(v, 0, &mut out);
    out.push('\n');
    out
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|x| !x.is_array() && !x.is_object()),
        Value::Object(_) => false,
        _ => true,
    }
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Array(items) if !items.is_empty() && !is_flat(v) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(x, indent + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(|x| x.to_string()).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            let mut keys: Vec<&String> = map.keys().collect();
            keys.sort();
            for (i, key) in keys.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String((*key).clone()).to_string());
                out.push_str(": ");
                write_value(&map[*key], indent + 1, out);
                out.push_str(if i + 1 < keys.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        other => out.push_str(&other.to_string()),
    }
}
