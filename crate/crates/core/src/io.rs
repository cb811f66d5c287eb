//! JSON documents for instances, solutions and reports.
//!
//! Instance document:
//!
//! ```json
//! {
//!   "points": [[0, 0], [10, 0]],
//!   "kind": "turnpike",
//!   "length": { "mode": "fixed", "value": 5 },
//!   "speed": 5,
//!   "orientation": 0.5
//! }
//! ```
//!
//! `kind` is `turnpike` or `freeway`, `length` is `{"mode": "variable"}` or
//! `{"mode": "fixed", "value": l}`, and `orientation` (radians, freeways
//! only) is optional. Emitted documents write every real number with 17
//! significant digits, so parsing them back reproduces the same doubles.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::geom::Point;
use crate::metric::HighwayKind;
use crate::problem::{Instance, LengthMode};
use crate::solution::SolutionRecord;

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase", deny_unknown_fields)]
enum LengthDoc {
    Variable,
    Fixed { value: f64 },
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceDoc {
    points: Vec<Point>,
    kind: HighwayKind,
    length: LengthDoc,
    speed: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    orientation: Option<f64>,
}

fn format_error(what: &str, e: serde_json::Error) -> Error {
    Error::Format(format!("{what}: {e}"))
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let doc: InstanceDoc = serde_json::from_str(text).map_err(|e| format_error("instance", e))?;
    let length = match doc.length {
        LengthDoc::Variable => LengthMode::Variable,
        LengthDoc::Fixed { value } => LengthMode::Fixed(value),
    };
    let inst = Instance::new(doc.points, doc.kind, length, doc.speed)?;
    match doc.orientation {
        Some(alpha) => inst.with_orientation(alpha),
        None => Ok(inst),
    }
}

pub fn emit_instance(inst: &Instance) -> String {
    let doc = InstanceDoc {
        points: inst.points.clone(),
        kind: inst.kind,
        length: match inst.length {
            LengthMode::Variable => LengthDoc::Variable,
            LengthMode::Fixed(value) => LengthDoc::Fixed { value },
        },
        speed: inst.speed,
        orientation: inst.orientation,
    };
    to_json(&doc)
}

pub fn parse_solution(text: &str) -> Result<SolutionRecord> {
    let rec: SolutionRecord =
        serde_json::from_str(text).map_err(|e| format_error("solution", e))?;
    for p in std::iter::once(rec.facility).chain(rec.clients.iter().filter_map(|c| c.entry)) {
        p.check()?;
    }
    if !(rec.radius.is_finite() && rec.length.is_finite() && rec.speed.is_finite()) {
        return Err(Error::NonFinite);
    }
    Ok(rec)
}

pub fn emit_solution(rec: &SolutionRecord) -> String {
    to_json(rec)
}

/// Pretty JSON with 17 significant digits for every real number. Arrays
/// holding only scalars stay on one line.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("documents serialize to JSON");
    let mut out = String::new();
    write_value(&mut out, &v, 0);
    out.push('\n');
    out
}

fn format_number(n: &serde_json::Number) -> String {
    if n.is_f64() {
        let x = n.as_f64().expect("f64 number");
        format!("{x:.16e}")
    } else {
        n.to_string()
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn write_value(out: &mut String, v: &Value, depth: usize) {
    let pad = |out: &mut String, d: usize| out.extend(std::iter::repeat("  ").take(d));
    match v {
        Value::Null | Value::Bool(_) | Value::String(_) => out.push_str(&v.to_string()),
        Value::Number(n) => out.push_str(&format_number(n)),
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Array(items) if items.iter().all(is_scalar) => {
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                write_value(out, item, depth);
            }
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                pad(out, depth + 1);
                write_value(out, item, depth + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            pad(out, depth);
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, item)) in map.iter().enumerate() {
                pad(out, depth + 1);
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(out, item, depth + 1);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            pad(out, depth);
            out.push('}');
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solution::solve;
    use proptest::prelude::*;

    #[test]
    fn minimal_document_parses() {
        let inst = parse_instance(
            r#"{"points":[[0,0],[10,0]], "kind":"turnpike", "length":{"mode":"variable"}, "speed":5}"#,
        )
        .unwrap();
        assert_eq!(inst.points, vec![Point::new(0., 0.), Point::new(10., 0.)]);
        assert_eq!(inst.kind, HighwayKind::Turnpike);
        assert_eq!(inst.length, LengthMode::Variable);
        assert_eq!(inst.speed, 5.0);
        assert_eq!(inst.orientation, None);
    }

    #[test]
    fn slow_highway_rejected() {
        let err = parse_instance(
            r#"{"points":[[0,0]], "kind":"freeway", "length":{"mode":"variable"}, "speed":0.5}"#,
        )
        .unwrap_err();
        assert!(err.to_string().contains("speed must exceed 1"), "{err}");
        let err = parse_instance(
            r#"{"points":[[0,0]], "kind":"freeway", "length":{"mode":"fixed","value":0}, "speed":2}"#,
        )
        .unwrap_err();
        assert_eq!(err, Error::InvalidLength(0.0));
    }

    #[test]
    fn schema_errors_name_field_and_line() {
        let err =
            parse_instance("{\n\"points\": [[0,0]],\n\"kind\": \"turnpike\",\n\"speed\": 2\n}")
                .unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("length") && msg.contains("line"), "{msg}");
        let err = parse_instance(
            r#"{"points":[[0,0]], "kind":"bridge", "length":{"mode":"variable"}, "speed":2}"#,
        )
        .unwrap_err();
        assert!(err.to_string().contains("bridge"));
        let err = parse_instance(
            r#"{"points":[[0,0]], "kind":"freeway", "length":{"mode":"variable"}, "speed":2, "extra":1}"#,
        )
        .unwrap_err();
        assert!(err.to_string().contains("extra"));
    }

    #[test]
    fn numbers_have_17_significant_digits() {
        let inst = Instance::new(
            vec![Point::new(0.1, 1.0 / 3.0)],
            HighwayKind::Freeway,
            LengthMode::Fixed(2.5),
            2.0,
        )
        .unwrap();
        let text = emit_instance(&inst);
        assert!(text.contains("1.0000000000000001e-1"), "{text}");
        assert!(text.contains("3.3333333333333331e-1"), "{text}");
        assert!(text.contains("\"mode\": \"fixed\""));
    }

    #[test]
    fn solution_round_trip() {
        let inst = Instance::new(
            vec![
                Point::new(0., 0.),
                Point::new(10., 0.),
                Point::new(3.3, 7.1),
            ],
            HighwayKind::Freeway,
            LengthMode::Variable,
            3.0,
        )
        .unwrap();
        let rec = solve(&inst).unwrap();
        let text = emit_solution(&rec);
        let back = parse_solution(&text).unwrap();
        assert_eq!(back, rec);
        assert_eq!(emit_solution(&back), text);
    }

    fn instances() -> impl Strategy<Value = Instance> {
        (
            prop::collection::vec((-1e6f64..1e6, -1e6f64..1e6), 1..20),
            any::<bool>(),
            prop::option::of(1e-3f64..1e3),
            1.0f64 + 1e-9..100.0,
            prop::option::of(0.0f64..std::f64::consts::PI),
        )
            .prop_map(|(pts, freeway, ell, v, alpha)| {
                let kind = if freeway {
                    HighwayKind::Freeway
                } else {
                    HighwayKind::Turnpike
                };
                let length = ell.map_or(LengthMode::Variable, LengthMode::Fixed);
                let inst =
                    Instance::new(pts.into_iter().map(Point::from).collect(), kind, length, v)
                        .unwrap();
                match alpha {
                    Some(a) if freeway => inst.with_orientation(a).unwrap(),
                    _ => inst,
                }
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn instance_round_trip(inst in instances()) {
            let once = parse_instance(&emit_instance(&inst)).unwrap();
            prop_assert_eq!(&once, &inst);
            let twice = parse_instance(&emit_instance(&once)).unwrap();
            prop_assert_eq!(twice, once);
        }
    }
}
