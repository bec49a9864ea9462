//! Report assembly and rendering.
//!
//! A report is built once as an ordered JSON document; the text mode is a
//! rendering of that same document, so the two formats carry identical
//! quantities. Integers are emitted as strings to keep arbitrary
//! precision exact and the byte output stable.

use serde_json::{Map, Value};
use toricsplit::{Int, IntMatrix, LatticeVector};

pub fn obj(fields: Vec<(&str, Value)>) -> Value {
    let mut map = Map::new();
    for (k, v) in fields {
        map.insert(k.to_string(), v);
    }
    Value::Object(map)
}

pub fn int(i: &Int) -> Value {
    Value::String(i.to_string())
}

pub fn ints(v: &[Int]) -> Value {
    Value::Array(v.iter().map(int).collect())
}

pub fn vector(v: &LatticeVector) -> Value {
    ints(v.coords())
}

pub fn vectors(vs: &[LatticeVector]) -> Value {
    Value::Array(vs.iter().map(vector).collect())
}

pub fn usizes(v: &[usize]) -> Value {
    Value::Array(v.iter().map(|&x| Value::from(x)).collect())
}

/// 1-based rendering of a set of 0-based indices.
pub fn indices_1based(v: &[usize]) -> Value {
    Value::Array(v.iter().map(|&x| Value::from(x + 1)).collect())
}

pub fn matrix(m: &IntMatrix) -> Value {
    Value::Array(m.row_vecs().iter().map(|r| ints(r)).collect())
}

pub fn render_json(report: &Value) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

pub fn render_text(report: &Value) -> String {
    let mut out = String::new();
    render_value(report, 0, &mut out);
    out
}

fn indent(depth: usize, out: &mut String) {
    for _ in 0..depth {
        out.push_str("  ");
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Object(_) | Value::Array(_))
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Arrays of scalars render inline; everything else one entry per line.
fn render_value(v: &Value, depth: usize, out: &mut String) {
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                indent(depth, out);
                if is_scalar(val) {
                    out.push_str(&format!("{k}: {}\n", scalar(val)));
                } else if inline_array(val) {
                    out.push_str(&format!("{k}: {}\n", inline(val)));
                } else {
                    out.push_str(&format!("{k}:\n"));
                    render_value(val, depth + 1, out);
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                if is_scalar(item) || inline_array(item) {
                    indent(depth, out);
                    out.push_str(&format!("- {}\n", inline(item)));
                } else {
                    indent(depth, out);
                    out.push_str("-\n");
                    render_value(item, depth + 1, out);
                }
            }
        }
        _ => {
            indent(depth, out);
            out.push_str(&scalar(v));
            out.push('\n');
        }
    }
}

fn inline_array(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|i| is_scalar(i) || inline_array(i)),
        _ => false,
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(inline).collect();
            format!("[{}]", parts.join(", "))
        }
        other => scalar(other),
    }
}
