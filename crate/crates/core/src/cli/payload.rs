//! Lenient JSON payloads for the command line.
//!
//! Scalars may be written as `{"a":…,"b":…}`, as a rational string `"p/q"`
//! or as an integer. An Okubo element may be the integer `0`, an array of
//! eight scalars (compact flavor), or the full `{"flavor","coeffs"}` object.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactfield::{Rational, F3};
use crate::geometry::{PlanePoint, VeroneseVector};
use crate::okubo::{Flavor, OkuboElement, DIM};

fn parse_err(what: &str, v: &Value) -> Error {
    Error::Parse(format!("expected {what}, got {v}"))
}

pub fn parse_f3(v: &Value) -> Result<F3> {
    match v {
        Value::Number(n) => {
            let i = n.as_i64().ok_or_else(|| parse_err("an integer or rational string", v))?;
            Ok(F3::from_int(i))
        }
        Value::String(s) => Ok(F3::rational(s.parse::<Rational>()?)),
        Value::Object(_) => serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string())),
        _ => Err(parse_err("a scalar", v)),
    }
}

pub fn parse_okubo(v: &Value) -> Result<OkuboElement> {
    match v {
        Value::Number(n) if n.as_i64() == Some(0) => Ok(OkuboElement::zero(Flavor::Compact)),
        Value::String(s) if s == "e" => Ok(OkuboElement::e(Flavor::Compact)),
        Value::Array(items) => {
            if items.len() != DIM {
                return Err(Error::Dimension { expected: DIM, got: items.len() });
            }
            let coeffs: Vec<F3> = items.iter().map(parse_f3).collect::<Result<_>>()?;
            Ok(OkuboElement::new(Flavor::Compact, coeffs.try_into().expect("8 coefficients")))
        }
        Value::Object(map) => {
            let flavor = match map.get("flavor") {
                Some(Value::String(s)) => s.parse::<Flavor>()?,
                None => Flavor::Compact,
                Some(other) => return Err(parse_err("a flavor name", other)),
            };
            let coeffs = map.get("coeffs").ok_or_else(|| parse_err("a \"coeffs\" field", v))?;
            let x = parse_okubo(coeffs)?;
            Ok(OkuboElement::new(flavor, x.coeffs))
        }
        _ => Err(parse_err("an Okubo element", v)),
    }
}

fn triple<T>(v: &Value, key: &str, f: impl Fn(&Value) -> Result<T>) -> Result<[T; 3]> {
    let items = v.get(key).and_then(Value::as_array).ok_or_else(|| parse_err(&format!("a \"{key}\" array"), v))?;
    if items.len() != 3 {
        return Err(Error::Dimension { expected: 3, got: items.len() });
    }
    let parsed: Vec<T> = items.iter().map(f).collect::<Result<_>>()?;
    Ok(parsed.try_into().ok().expect("three entries"))
}

/// `{"x":[…×3],"lambda":[…×3]}`, or one of the names `e0`, `e1`, `e2`, `unit`.
pub fn parse_albert(v: &Value) -> Result<VeroneseVector> {
    if let Value::String(name) = v {
        return match name.as_str() {
            "e0" => Ok(VeroneseVector::real_idempotent(0)),
            "e1" => Ok(VeroneseVector::real_idempotent(1)),
            "e2" => Ok(VeroneseVector::real_idempotent(2)),
            "unit" => Ok(VeroneseVector::unit()),
            _ => Err(parse_err("e0, e1, e2 or unit", v)),
        };
    }
    Ok(VeroneseVector::new(triple(v, "x", parse_okubo)?, triple(v, "lambda", parse_f3)?))
}

/// `{"x":…,"y":…}`, `{"slope":…}`, `{"point":"infinity"}` or the tagged
/// form produced by `decode`.
pub fn parse_plane_point(v: &Value) -> Result<PlanePoint> {
    if let Some(p) = v.get("point") {
        if p == "infinity" {
            return Ok(PlanePoint::Infinity);
        }
        return parse_plane_point(p);
    }
    if let (Some(x), Some(y)) = (v.get("x"), v.get("y")) {
        return Ok(PlanePoint::Affine { x: parse_okubo(x)?, y: parse_okubo(y)? });
    }
    if let Some(s) = v.get("slope").or_else(|| v.get("s")) {
        return Ok(PlanePoint::Slope { s: parse_okubo(s)? });
    }
    if v.get("patch").and_then(Value::as_str) == Some("infinity") || v == "infinity" {
        return Ok(PlanePoint::Infinity);
    }
    Err(parse_err("an affine point, a slope point or infinity", v))
}

pub fn plane_point_json(p: &PlanePoint) -> Value {
    match p {
        PlanePoint::Affine { x, y } => json!({"patch": "affine", "point": {"x": x, "y": y}}),
        PlanePoint::Slope { s } => json!({"patch": "slope", "point": {"slope": s}}),
        PlanePoint::Infinity => json!({"patch": "infinity", "point": "infinity"}),
    }
}

/// Reads `@path` from disk, `-` from stdin, and anything else literally.
pub fn read_payload(arg: &str) -> Result<Value> {
    let text = if let Some(path) = arg.strip_prefix('@') {
        std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?
    } else if arg == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| Error::Parse(e.to_string()))?
    } else {
        arg.to_string()
    };
    let trimmed = text.trim();
    match serde_json::from_str(trimmed) {
        Ok(v) => Ok(v),
        // bare names such as e0 or unit
        Err(_) if trimmed.chars().all(|c| c.is_ascii_alphanumeric()) => Ok(Value::String(trimmed.to_string())),
        Err(e) => Err(Error::Parse(e.to_string())),
    }
}
