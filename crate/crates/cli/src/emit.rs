//! Deterministic JSON/CSV rendering. Exact values become `"p/q"` strings,
//! floats become JSON numbers in shortest round-trip form.

use biorth_core::numeric::RootValue;
use biorth_core::Scalar;
use serde::Serialize;
use serde_json::Value;

pub fn float(x: f64) -> Value {
    serde_json::Number::from_f64(x).map(Value::Number).unwrap_or_else(|| Value::String(x.to_string()))
}

pub fn val<F: Scalar>(v: &F) -> Value {
    if F::EXACT {
        Value::String(v.to_string())
    } else {
        float(v.to_f64())
    }
}

pub fn vals<F: Scalar>(v: &[F]) -> Vec<Value> {
    v.iter().map(val).collect()
}

/// Exact roots as values; approximations as `{"approx": "re"}` or
/// `{"approx": ["re", "im"]}` so exact payloads stay free of bare decimals.
pub fn root<F: Scalar>(r: &RootValue<F>) -> Value {
    match r {
        RootValue::Exact(v) => val(v),
        RootValue::Approx(z) => {
            let inner = if z.im == 0.0 {
                Value::String(z.re.to_string())
            } else {
                Value::Array(vec![Value::String(z.re.to_string()), Value::String(z.im.to_string())])
            };
            serde_json::json!({ "approx": inner })
        }
    }
}

pub fn json<T: Serialize>(payload: &T) -> String {
    let mut s = serde_json::to_string_pretty(payload).expect("payload serializes");
    s.push('\n');
    s
}

/// Plain text of a value for CSV cells.
pub fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn csv(header: &[String], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for r in rows {
        out.push_str(&r.join(","));
        out.push('\n');
    }
    out
}
