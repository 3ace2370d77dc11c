//! Report rendering as JSON and as plain text.

use std::fmt::Write as _;

use geofol_core::report::{CrossCheck, GeometryReport};
use geofol_core::{format_rational, Frame, FrameVector, Origin, Rational, ShapeForms, Structure};
use serde_json::{json, Map, Value};

use crate::document::{input_echo, pair_name, vector_value};

/// Connection entries in the order the text report prints them: the
/// diagonal first, then the remaining pairs row by row.
pub fn connection_order() -> Vec<(Frame, Frame)> {
    let diagonal = Frame::ALL.map(|e| (e, e));
    let rest = Frame::ALL.into_iter().flat_map(|i| Frame::ALL.map(move |j| (i, j))).filter(|(i, j)| i != j);
    diagonal.into_iter().chain(rest).collect()
}

fn shape_value(s: &ShapeForms<Rational>) -> Value {
    json!({
        "alphaForm": {"X": format_rational(&s.alpha_x), "Y": format_rational(&s.alpha_y)},
        "betaForm": {"X": format_rational(&s.beta_x), "Y": format_rational(&s.beta_y)},
    })
}

fn cross_check_value(c: &CrossCheck<Rational>) -> Value {
    let params: Map<String, Value> =
        c.params.entries().into_iter().map(|(k, v)| (k.to_string(), Value::String(format_rational(&v)))).collect();
    let mut out = Map::new();
    out.insert("schema".into(), Value::Object(params));
    out.insert("totally_geodesic".into(), c.totally_geodesic.into());
    out.insert("riemannian".into(), c.riemannian.into());
    out.insert("horizontally_integrable".into(), c.horizontally_integrable.into());
    out.insert("conformal_vector".into(), vector_value(&c.conformal_vector));
    out.insert("dJ1".into(), vector_value(&c.divergence[0]));
    out.insert("dJ2".into(), vector_value(&c.divergence[1]));
    out.insert("cosymplectic".into(), json!(c.cosymplectic));
    if let Value::Object(forms) = shape_value(&c.shape_forms) {
        out.extend(forms);
    }
    out.insert("agrees".into(), c.agrees().into());
    out.insert("mismatches".into(), json!(c.mismatches));
    Value::Object(out)
}

pub fn to_json(r: &GeometryReport<Rational>) -> Value {
    let mut doc = Map::new();
    doc.insert("input".into(), input_echo(&r.algebra));
    doc.insert("jacobi".into(), r.jacobi.into());
    let defects: Map<String, Value> = r
        .jacobi_defects
        .iter()
        .map(|((i, j, k), v)| (format!("{i}{j}{k}"), vector_value(v)))
        .collect();
    doc.insert("jacobi_defects".into(), Value::Object(defects));
    let connection: Map<String, Value> = Frame::ALL
        .into_iter()
        .flat_map(|i| Frame::ALL.map(move |j| (i, j)))
        .map(|(i, j)| (pair_name((i, j)), vector_value(r.connection.get(i, j))))
        .collect();
    doc.insert("connection".into(), Value::Object(connection));

    let f = &r.foliation;
    doc.insert(
        "foliation".into(),
        json!({
            "minimal": f.minimal,
            "conformal": f.conformal,
            "riemannian": f.riemannian,
            "totally_geodesic": f.totally_geodesic,
            "horizontally_integrable": f.horizontally_integrable,
            "vertically_integrable": f.vertically_integrable,
            "conformal_vector": f.conformal_vector.as_ref().map(vector_value),
        }),
    );

    let h = &r.hermitian;
    let mut her = Map::new();
    her.insert("dJ1".into(), vector_value(&h.divergence[0]));
    her.insert("dJ2".into(), vector_value(&h.divergence[1]));
    her.insert("cosymplectic".into(), json!(h.cosymplectic));
    her.insert("integrable".into(), json!(h.integrable));
    her.insert("harmonic_morphism_producing".into(), json!(h.harmonic_morphism_producing));
    if let Value::Object(forms) = shape_value(&h.shape_forms) {
        her.extend(forms);
    }
    let nonzero: Vec<Value> = h
        .nijenhuis_nonzero
        .iter()
        .map(|e| json!({"structure": e.structure.to_string(), "pair": pair_name(e.pair), "value": vector_value(&e.value)}))
        .collect();
    her.insert("nijenhuis_nonzero_entries".into(), Value::Array(nonzero));
    doc.insert("hermitian".into(), Value::Object(her));

    doc.insert("cross_check".into(), r.cross_check.as_ref().map_or(Value::Null, cross_check_value));
    Value::Object(doc)
}

pub fn render_json(r: &GeometryReport<Rational>) -> String {
    let mut s = serde_json::to_string_pretty(&to_json(r)).expect("report serializes");
    s.push('\n');
    s
}

fn flag(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "yes",
        Some(false) => "no",
        None => "n/a",
    }
}

fn vec_text(v: &FrameVector<Rational>) -> String {
    if v.is_zero() {
        "0".into()
    } else {
        v.to_string()
    }
}

pub fn render_text(r: &GeometryReport<Rational>) -> String {
    let mut out = String::new();
    let origin = match r.origin() {
        Origin::Schema(p) => format!("schema ({p})"),
        Origin::Family(p) => {
            let params: Vec<String> =
                p.entries().into_iter().map(|(k, v)| format!("{k}={}", format_rational(&v))).collect();
            format!("family {} ({})", p.name().as_str(), params.join(", "))
        }
        Origin::General => "general bracket table".into(),
    };
    let _ = writeln!(out, "input: {origin}");
    let _ = writeln!(out, "\nbrackets:");
    for (pair, v) in geofol_core::lie_algebra::UPPER_PAIRS.iter().zip(r.algebra.upper_entries()) {
        if !v.is_zero() {
            let _ = writeln!(out, "  [{},{}] = {}", pair.0, pair.1, v);
        }
    }
    let _ = writeln!(out, "\njacobi: {}", flag(Some(r.jacobi)));
    for ((i, j, k), d) in &r.jacobi_defects {
        if !d.is_zero() {
            let _ = writeln!(out, "  defect {i}{j}{k}: {d}");
        }
    }

    let _ = writeln!(out, "\nconnection:");
    for (i, j) in connection_order() {
        let _ = writeln!(out, "  ∇_{i} {j} = {}", vec_text(r.connection.get(i, j)));
    }

    let f = &r.foliation;
    let _ = writeln!(out, "\nvertical foliation:");
    let _ = writeln!(out, "  minimal: {}", flag(Some(f.minimal)));
    let _ = writeln!(out, "  conformal: {}", flag(Some(f.conformal)));
    let _ = writeln!(out, "  riemannian: {}", flag(f.riemannian));
    let _ = writeln!(out, "  totally geodesic: {}", flag(Some(f.totally_geodesic)));
    let _ = writeln!(out, "  horizontally integrable: {}", flag(Some(f.horizontally_integrable)));
    let _ = writeln!(out, "  vertically integrable: {}", flag(Some(f.vertically_integrable)));
    if let Some(v) = &f.conformal_vector {
        let _ = writeln!(out, "  conformal vector: {}", vec_text(v));
    }

    let h = &r.hermitian;
    let _ = writeln!(out, "\nalmost Hermitian structures:");
    for k in Structure::BOTH {
        let i = usize::from(k.index() - 1);
        let _ = writeln!(out, "  {k}: δJ = {}", vec_text(&h.divergence[i]));
        let _ = writeln!(out, "      cosymplectic: {}", flag(Some(h.cosymplectic[i])));
        let _ = writeln!(out, "      integrable: {}", flag(Some(h.integrable[i])));
        let _ = writeln!(out, "      harmonic morphisms: {}", flag(h.harmonic_morphism_producing[i]));
    }
    let s = &h.shape_forms;
    let _ = writeln!(
        out,
        "  alphaForm(X) = {}, alphaForm(Y) = {}",
        format_rational(&s.alpha_x),
        format_rational(&s.alpha_y)
    );
    let _ = writeln!(
        out,
        "  betaForm(X) = {}, betaForm(Y) = {}",
        format_rational(&s.beta_x),
        format_rational(&s.beta_y)
    );
    for e in &h.nijenhuis_nonzero {
        let _ = writeln!(out, "  N_{}({},{}) = {}", e.structure, e.pair.0, e.pair.1, e.value);
    }

    if let Some(c) = &r.cross_check {
        let _ = writeln!(out, "\nclosed-form cross-check:");
        let _ = writeln!(out, "  schema: {}", c.params);
        let _ = writeln!(out, "  δJ1 = {}, δJ2 = {}", vec_text(&c.divergence[0]), vec_text(&c.divergence[1]));
        if c.agrees() {
            let _ = writeln!(out, "  agrees with the tensor pipeline");
        } else {
            let _ = writeln!(out, "  MISMATCH: {}", c.mismatches.join(", "));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connection_order_puts_diagonal_first() {
        let order = connection_order();
        assert_eq!(order.len(), 16);
        assert_eq!(&order[..4], &Frame::ALL.map(|e| (e, e)));
        assert_eq!(order[4], (Frame::X, Frame::Y));
    }
}
