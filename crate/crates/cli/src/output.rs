//! Rendering of command results: canonical JSON or plain text.

use rho_core::{Rational, RationalAngle};
use serde_json::Value;

/// Integers become strings so every number in the output is an exact
/// rational string; with `approx`, non-integral rationals are rendered as
/// 12-digit decimals instead.
pub fn finalize(value: Value, approx: bool) -> Value {
    match value {
        Value::Number(n) => Value::String(n.to_string()),
        Value::String(s) if approx => Value::String(approximate(&s)),
        Value::Array(items) => Value::Array(items.into_iter().map(|v| finalize(v, approx)).collect()),
        Value::Object(map) => Value::Object(map.into_iter().map(|(k, v)| (k, finalize(v, approx))).collect()),
        other => other,
    }
}

fn approximate(s: &str) -> String {
    let part = |t: &str| -> Option<String> {
        let r: Rational = t.parse().ok()?;
        Some(if r.is_integer() { r.to_string() } else { r.to_decimal(12) })
    };
    let rendered = match s.split_once(',') {
        Some((re, im)) => part(re).zip(part(im)).map(|(a, b)| format!("{a},{b}")),
        None => part(s),
    };
    rendered.unwrap_or_else(|| s.to_string())
}

/// Integer-looking strings in input files become JSON integers, so output
/// produced by [`finalize`] can be fed back in.
pub fn normalize_input(value: Value) -> Value {
    match value {
        Value::String(s) => match s.trim().parse::<i64>() {
            Ok(n) => Value::from(n),
            Err(_) => Value::String(s),
        },
        Value::Array(items) => Value::Array(items.into_iter().map(normalize_input).collect()),
        Value::Object(map) => Value::Object(map.into_iter().map(|(k, v)| (k, normalize_input(v))).collect()),
        other => other,
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Null => Some("none".into()),
        Value::Number(n) => Some(n.to_string()),
        _ => None,
    }
}

fn inline(v: &Value) -> Option<String> {
    if let Some(s) = scalar(v) {
        return Some(s);
    }
    match v {
        Value::Array(items) if items.iter().all(|x| scalar(x).is_some()) => {
            Some(format!("[{}]", items.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

/// Indented `key: value` rendering; rows of scalars stay on one line.
pub fn text(v: &Value) -> String {
    let mut out = String::new();
    write_text(v, 0, &mut out);
    out
}

fn write_text(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match inline(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        write_text(x, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                match inline(x) {
                    Some(s) => out.push_str(&format!("{pad}{s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        write_text(x, depth + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

/// A left-aligned table over the given columns of a list of flat objects.
pub fn table(rows: &[Value], columns: &[&str]) -> String {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| columns.iter().map(|c| r.get(*c).and_then(inline).unwrap_or_default()).collect())
        .collect();
    let widths: Vec<usize> = columns
        .iter()
        .enumerate()
        .map(|(i, c)| cells.iter().map(|r| r[i].chars().count()).chain([c.len()]).max().unwrap_or(0))
        .collect();
    let line = |items: Vec<String>| -> String {
        items
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let mut out = line(columns.iter().map(|c| c.to_string()).collect());
    out.push('\n');
    for row in cells {
        out.push_str(&line(row));
        out.push('\n');
    }
    out
}

pub fn angle_list(angles: &[RationalAngle]) -> Value {
    Value::Array(angles.iter().map(|a| Value::String(a.to_string())).collect())
}
