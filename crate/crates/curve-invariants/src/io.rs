//! Exact JSON curve format: each component is an object with "num" and
//! "den" arrays of integer coefficient strings, lowest degree first. Floats
//! are rejected; coefficients may be arbitrarily large.

use crate::curve::ParamCurve3;
use exact_algebra::{Int, Poly, Rat, RatFunc, RatX};
use serde_json::Value;
use std::fmt;

#[derive(Debug)]
pub struct FormatError(pub String);

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for FormatError {}

fn err<T>(msg: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError(msg.into()))
}

fn parse_coeff(v: &Value) -> Result<Int, FormatError> {
    match v {
        Value::Number(n) => {
            if n.is_f64() && !n.is_i64() && !n.is_u64() {
                return err("floating point not accepted; use exact rationals");
            }
            if let Some(i) = n.as_i64() {
                return Ok(Int::from(i));
            }
            if let Some(u) = n.as_u64() {
                return Ok(Int::from(u));
            }
            err("floating point not accepted; use exact rationals")
        }
        Value::String(s) => {
            if s.contains('.') || s.contains('e') || s.contains('E') {
                return err("floating point not accepted; use exact rationals");
            }
            s.parse::<Int>()
                .map_err(|_| FormatError(format!("invalid integer coefficient: {:?}", s)))
        }
        _ => err("coefficients must be integers or integer strings"),
    }
}

fn parse_poly(v: &Value, what: &str) -> Result<Poly<Rat>, FormatError> {
    let arr = v
        .as_array()
        .ok_or_else(|| FormatError(format!("{} must be an array of coefficients", what)))?;
    let mut coeffs = Vec::with_capacity(arr.len());
    for c in arr {
        coeffs.push(Rat::from_integer(parse_coeff(c)?));
    }
    Ok(Poly::new(coeffs))
}

fn parse_component(v: &Value, name: &str) -> Result<RatX, FormatError> {
    let obj = v
        .as_object()
        .ok_or_else(|| FormatError(format!("component {:?} must be an object", name)))?;
    let num = parse_poly(
        obj.get("num")
            .ok_or_else(|| FormatError(format!("component {:?} is missing \"num\"", name)))?,
        "num",
    )?;
    let den = parse_poly(
        obj.get("den")
            .ok_or_else(|| FormatError(format!("component {:?} is missing \"den\"", name)))?,
        "den",
    )?;
    if den.is_zero() {
        return err(format!("component {:?} has a zero denominator", name));
    }
    Ok(RatFunc::new(num, den))
}

pub fn curve_from_json(text: &str) -> Result<ParamCurve3, FormatError> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| FormatError(format!("invalid JSON: {}", e)))?;
    // a bare float anywhere in the numbers should give the dedicated message
    let obj = v
        .as_object()
        .ok_or_else(|| FormatError("top level must be an object".into()))?;
    Ok(ParamCurve3::new(
        parse_component(
            obj.get("x").ok_or_else(|| FormatError("missing \"x\"".into()))?,
            "x",
        )?,
        parse_component(
            obj.get("y").ok_or_else(|| FormatError("missing \"y\"".into()))?,
            "y",
        )?,
        parse_component(
            obj.get("z").ok_or_else(|| FormatError("missing \"z\"".into()))?,
            "z",
        )?,
    ))
}

fn component_to_json(f: &RatX) -> Value {
    // scale so that numerator and denominator are both integral
    let (nc, nscale) = f.num().to_int_primitive();
    let (dc, dscale) = f.den().to_int_primitive();
    // f = (nscale/dscale) * nc/dc; fold the rational scale into integers
    let scale = nscale / dscale;
    let num_scaled: Vec<Int> = nc.iter().map(|c| c * scale.numer()).collect();
    let den_scaled: Vec<Int> = dc.iter().map(|c| c * scale.denom()).collect();
    let mut obj = serde_json::Map::new();
    let to_arr = |v: &[Int]| -> Value {
        if v.is_empty() {
            Value::Array(vec![Value::String("0".into())])
        } else {
            Value::Array(v.iter().map(|c| Value::String(c.to_string())).collect())
        }
    };
    obj.insert("num".into(), to_arr(&num_scaled));
    obj.insert("den".into(), to_arr(&den_scaled));
    Value::Object(obj)
}

pub fn curve_to_json(c: &ParamCurve3) -> Value {
    let mut obj = serde_json::Map::new();
    obj.insert("x".into(), component_to_json(&c.x));
    obj.insert("y".into(), component_to_json(&c.y));
    obj.insert("z".into(), component_to_json(&c.z));
    Value::Object(obj)
}

#[cfg(test)]
mod tests {
    use super::*;
    

    #[test]
    fn roundtrip() {
        let c = crate::corpus::crunode();
        let text = serde_json::to_string(&curve_to_json(&c)).unwrap();
        let back = curve_from_json(&text).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn accepts_plain_integers_and_strings() {
        let text = r#"{"x":{"num":[0,1],"den":["1"]},
                       "y":{"num":["0","0","1"],"den":[1]},
                       "z":{"num":[0,0,0,1],"den":[1]}}"#;
        let c = curve_from_json(text).unwrap();
        assert_eq!(c, crate::corpus::twisted_cubic());
    }

    #[test]
    fn rejects_floats_with_message() {
        let text = r#"{"x":{"num":[0.5],"den":[1]},
                       "y":{"num":[0],"den":[1]},
                       "z":{"num":[0],"den":[1]}}"#;
        let e = curve_from_json(text).unwrap_err();
        assert_eq!(e.0, "floating point not accepted; use exact rationals");
        let text2 = r#"{"x":{"num":["0.5"],"den":[1]},
                        "y":{"num":[0],"den":[1]},
                        "z":{"num":[0],"den":[1]}}"#;
        let e2 = curve_from_json(text2).unwrap_err();
        assert_eq!(e2.0, "floating point not accepted; use exact rationals");
    }

    #[test]
    fn rejects_zero_denominator_and_missing_fields() {
        let text = r#"{"x":{"num":[1],"den":[0]},
                       "y":{"num":[0],"den":[1]},
                       "z":{"num":[0],"den":[1]}}"#;
        assert!(curve_from_json(text).is_err());
        assert!(curve_from_json(r#"{"x":{"num":[1],"den":[1]}}"#).is_err());
        assert!(curve_from_json("not json").is_err());
    }

    #[test]
    fn big_coefficients_survive() {
        let big = "123456789012345678901234567890";
        let text = format!(
            r#"{{"x":{{"num":["{0}","1"],"den":["1"]}},
                "y":{{"num":["0","1"],"den":["1"]}},
                "z":{{"num":["0","0","1"],"den":["1"]}}}}"#,
            big
        );
        let c = curve_from_json(&text).unwrap();
        assert_eq!(
            c.x.num().coeff(0),
            Rat::from_integer(big.parse::<Int>().unwrap())
        );
    }
}
