//! Input documents.
//!
//! Three shapes are accepted, all with rational-string scalars:
//!
//! ```json
//! {"schema": {"lambda": "0", "alpha": "1/2", "theta2": "-3"}}
//! {"family": "g20", "params": {"alpha": "1", "a": "-2", "beta": "1", "w1": "0", "w2": "1"}}
//! {"table": {"XY": ["0", "0", "1", "0"], "ZW": ["0", "0", "0", "-1"]}}
//! ```
//!
//! Omitted keys default to `"0"`. A report produced by `geo report` is also
//! accepted: its `"input"` block is one of the shapes above.

use geofol_core::lie_algebra::UPPER_PAIRS;
use geofol_core::{
    build_family, format_rational, parse_rational, FamilyName, FamilyParams, FrameVector, LieAlgebra4, Origin,
    Rational, SchemaParams, Scalar,
};
use serde_json::{Map, Value};

use crate::error::CliError;

/// Parses a document and builds its algebra. Family gates are enforced here.
pub fn parse_document(text: &str) -> Result<LieAlgebra4<Rational>, CliError> {
    let value: Value = serde_json::from_str(text).map_err(|e| CliError::input(format!("invalid JSON: {e}")))?;
    algebra_from_value(&value)
}

pub fn algebra_from_value(value: &Value) -> Result<LieAlgebra4<Rational>, CliError> {
    let obj = value.as_object().ok_or_else(|| CliError::input("document must be a JSON object"))?;
    if let Some(input) = obj.get("input") {
        return algebra_from_value(input);
    }
    if let Some(schema) = obj.get("schema") {
        expect_keys(obj, &["schema"])?;
        let params = schema_from_value(schema)?;
        return Ok(LieAlgebra4::from_schema(&params));
    }
    if let Some(family) = obj.get("family") {
        expect_keys(obj, &["family", "params"])?;
        let name: FamilyName = family
            .as_str()
            .ok_or_else(|| CliError::input("\"family\" must be a string"))?
            .parse()?;
        let empty = Value::Object(Map::new());
        let params = family_from_value(name, obj.get("params").unwrap_or(&empty))?;
        return Ok(build_family(&params)?);
    }
    if let Some(table) = obj.get("table") {
        expect_keys(obj, &["table"])?;
        return table_from_value(table);
    }
    Err(CliError::input("document needs one of \"schema\", \"family\", \"table\" or \"input\""))
}

fn expect_keys(obj: &Map<String, Value>, allowed: &[&str]) -> Result<(), CliError> {
    match obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(CliError::input(format!("unexpected key {k:?}"))),
        None => Ok(()),
    }
}

fn rational_from_value(key: &str, v: &Value) -> Result<Rational, CliError> {
    let s = v
        .as_str()
        .ok_or_else(|| CliError::input(format!("{key}: scalars are rational strings such as \"2/5\", got {v}")))?;
    parse_rational(s).map_err(|e| CliError::input(format!("{key}: {e}")))
}

/// Reads named scalars, rejecting unknown names; missing names are zero.
fn named_scalars(value: &Value, keys: &[&str]) -> Result<Vec<Rational>, CliError> {
    let obj = value.as_object().ok_or_else(|| CliError::input("parameters must be a JSON object"))?;
    if let Some(unknown) = obj.keys().find(|k| !keys.contains(&k.as_str())) {
        return Err(CliError::input(format!("unknown parameter {unknown:?} (expected one of {})", keys.join(", "))));
    }
    keys.iter()
        .map(|k| obj.get(*k).map_or(Ok(Rational::zero()), |v| rational_from_value(k, v)))
        .collect()
}

pub fn schema_from_value(value: &Value) -> Result<SchemaParams<Rational>, CliError> {
    let keys = SchemaParams::<Rational>::KEYS;
    let values = named_scalars(value, &keys)?;
    let mut p = SchemaParams::zero();
    for (k, v) in keys.iter().zip(values) {
        *p.get_mut(k).unwrap() = v;
    }
    Ok(p)
}

pub fn family_from_value(name: FamilyName, value: &Value) -> Result<FamilyParams<Rational>, CliError> {
    let keys = name.keys();
    let mut values = named_scalars(value, keys)?.into_iter();
    Ok(FamilyParams::from_fn(name, |_| values.next().unwrap()))
}

pub fn pair_name((i, j): (geofol_core::Frame, geofol_core::Frame)) -> String {
    format!("{i}{j}")
}

fn table_from_value(value: &Value) -> Result<LieAlgebra4<Rational>, CliError> {
    let obj = value.as_object().ok_or_else(|| CliError::input("\"table\" must be a JSON object"))?;
    let names: Vec<String> = UPPER_PAIRS.iter().map(|&p| pair_name(p)).collect();
    if let Some(unknown) = obj.keys().find(|k| !names.contains(k)) {
        return Err(CliError::input(format!(
            "unknown bracket {unknown:?} (expected one of {}; [e_j,e_i] follows by antisymmetry)",
            names.join(", ")
        )));
    }
    let mut entries: [FrameVector<Rational>; 6] = std::array::from_fn(|_| FrameVector::zero());
    for (slot, name) in entries.iter_mut().zip(&names) {
        if let Some(v) = obj.get(name) {
            *slot = vector_from_value(name, v)?;
        }
    }
    Ok(LieAlgebra4::from_upper(entries))
}

fn vector_from_value(key: &str, v: &Value) -> Result<FrameVector<Rational>, CliError> {
    let arr = v
        .as_array()
        .filter(|a| a.len() == 4)
        .ok_or_else(|| CliError::input(format!("{key}: expected an array of 4 rational strings")))?;
    let coords: Vec<Rational> = arr.iter().map(|c| rational_from_value(key, c)).collect::<Result<_, _>>()?;
    let [x, y, z, w]: [Rational; 4] = coords.try_into().unwrap();
    Ok(FrameVector::new(x, y, z, w))
}

pub fn vector_value(v: &FrameVector<Rational>) -> Value {
    Value::Array(v.coords().iter().map(|c| Value::String(format_rational(c))).collect())
}

fn named_map(entries: Vec<(&'static str, Rational)>) -> Value {
    Value::Object(entries.into_iter().map(|(k, v)| (k.to_string(), Value::String(format_rational(&v)))).collect())
}

/// The canonical input document for an algebra; parsing it rebuilds the same
/// algebra.
pub fn input_echo(alg: &LieAlgebra4<Rational>) -> Value {
    let mut doc = Map::new();
    match alg.origin() {
        Origin::Schema(p) => {
            doc.insert("schema".into(), named_map(p.entries()));
        }
        Origin::Family(p) => {
            doc.insert("family".into(), Value::String(p.name().as_str().into()));
            doc.insert("params".into(), named_map(p.entries()));
        }
        Origin::General => {
            let table = UPPER_PAIRS
                .iter()
                .zip(alg.upper_entries())
                .map(|(&pair, v)| (pair_name(pair), vector_value(&v)))
                .collect();
            doc.insert("table".into(), Value::Object(table));
        }
    }
    Value::Object(doc)
}
