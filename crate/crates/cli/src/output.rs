//! Output envelope, float rounding and the plain-text rendering.

use serde::Serialize;
use serde_json::{json, Value};

/// Bumped whenever a payload changes shape.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Error,
    Counterexample,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::Error => 1,
            Status::Counterexample => 2,
        }
    }
}

pub fn envelope(command: &str, status: Status, payload: Value) -> Value {
    json!({
        "command": command,
        "status": status,
        "payload": round_floats(payload),
        "version": env!("CARGO_PKG_VERSION"),
        "schema_version": SCHEMA_VERSION,
    })
}

/// Round every non-integer number to 15 significant digits.
pub fn round_floats(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = n.as_f64().expect("checked f64");
            let rounded: f64 = format!("{x:.14e}").parse().expect("formatted float parses");
            json!(rounded)
        }
        Value::Array(items) => Value::Array(items.into_iter().map(round_floats).collect()),
        Value::Object(map) => Value::Object(map.into_iter().map(|(k, v)| (k, round_floats(v))).collect()),
        other => other,
    }
}

/// `key: value` lines; arrays of scalars stay on one line.
pub fn render_human(envelope: &Value) -> String {
    let mut out = String::new();
    let status = envelope["status"].as_str().unwrap_or("");
    out.push_str(&format!("{} [{status}]\n", envelope["command"].as_str().unwrap_or("")));
    render(&envelope["payload"], "", &mut out);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()) => {
            Some(items.iter().map(|x| scalar(x).unwrap_or_default()).collect::<Vec<_>>().join(" "))
        }
        Value::Array(items) if items.iter().all(|x| x.as_array().is_some_and(|a| a.iter().all(Value::is_number))) => {
            Some(
                items
                    .iter()
                    .map(|x| scalar(x).unwrap_or_default().replace(' ', "-"))
                    .collect::<Vec<_>>()
                    .join(" "),
            )
        }
        _ => None,
    }
}

fn render(v: &Value, indent: &str, out: &mut String) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{indent}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{indent}{k}:\n"));
                        render(x, &format!("{indent}  "), out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{indent}[{i}] {s}\n")),
                    None => {
                        out.push_str(&format!("{indent}[{i}]\n"));
                        render(x, &format!("{indent}  "), out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{indent}{}\n", scalar(other).unwrap_or_default())),
    }
}
