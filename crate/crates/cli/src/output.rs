//! JSON envelopes and text rendering.

use std::str::FromStr;

use num_bigint::BigUint;
use serde_json::{json, Map, Number, Value};
use symquot::{AxisSystem, GradedDimension, MultiDegree};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// A finished command: a JSON document and its text rendering.
pub struct Report {
    pub json: Value,
    pub text: String,
}

pub fn big(v: &BigUint) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("decimal integer"))
}

/// `{"p,q": dim, ...}` in ascending degree order.
pub fn dims_json(g: &GradedDimension) -> Value {
    let mut m = Map::new();
    for (d, v) in g.iter() {
        m.insert(d.to_string(), big(v));
    }
    Value::Object(m)
}

pub fn envelope(command: &str, inputs: Value, truncation: Value, g: &GradedDimension) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("command".into(), json!(command));
    m.insert("version".into(), json!(VERSION));
    m.insert("inputs".into(), inputs);
    m.insert("truncation".into(), truncation);
    m.insert("axes".into(), json!(g.axes().names()));
    m.insert("dims".into(), dims_json(g));
    m
}

/// Reads back the `axes` and `dims` fields of an emitted document.
pub fn graded_from_json(doc: &Value) -> Result<GradedDimension, String> {
    let axes: Vec<String> = doc
        .get("axes")
        .and_then(Value::as_array)
        .ok_or("missing `axes`")?
        .iter()
        .map(|a| a.as_str().map(str::to_owned).ok_or("axis names must be strings"))
        .collect::<Result<_, _>>()?;
    let axes = AxisSystem::new(axes).map_err(|e| e.to_string())?;
    let dims = doc.get("dims").and_then(Value::as_object).ok_or("missing `dims`")?;
    let mut g = GradedDimension::zero(axes);
    for (key, v) in dims {
        let d = MultiDegree::from_str(key).map_err(|e| e.to_string())?;
        let n = match v {
            Value::Number(n) => BigUint::from_str(&n.to_string()).map_err(|_| format!("bad dimension `{n}`"))?,
            other => return Err(format!("bad dimension `{other}`")),
        };
        g.add_at(d, n).map_err(|e| e.to_string())?;
    }
    Ok(g)
}

/// One line per `n`: the `t^n` coefficient as a polynomial in `vars`.
pub fn series_text(series: &GradedDimension, max_n: usize, vars: &[&str]) -> String {
    let mut out = String::new();
    for n in 0..=max_n {
        let slice = series.slice("t", n as i64).expect("series carries a t axis");
        out.push_str(&format!("n = {n}: {}\n", slice.to_polynomial_string(vars)));
    }
    out
}

/// One indented `degree: dim` line per term.
pub fn terms_text(g: &GradedDimension) -> String {
    g.iter().map(|(d, v)| format!("  {d}: {v}\n")).collect()
}

/// The polynomial followed by its terms.
pub fn breakdown_text(g: &GradedDimension, vars: &[&str]) -> String {
    format!("{}\ndegrees ({}):\n{}", g.to_polynomial_string(vars), g.axes().names().join(","), terms_text(g))
}
