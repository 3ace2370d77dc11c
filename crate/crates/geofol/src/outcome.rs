use geofol_core::format_rational;
use geofol_core::verify::{VerificationOutcome, GENERATOR};
use serde_json::{json, Map, Value};

/// At most this many counterexamples are listed per outcome document.
pub const COUNTEREXAMPLE_CAP: usize = 10;

pub fn outcome_json(o: &VerificationOutcome, seed: u64) -> Value {
    let shown: Vec<Value> = o
        .counterexamples
        .iter()
        .take(COUNTEREXAMPLE_CAP)
        .map(|c| {
            let params: Map<String, Value> =
                c.params.iter().map(|(k, v)| (k.to_string(), Value::String(format_rational(v)))).collect();
            json!({"params": params, "expected": c.expected, "got": c.got})
        })
        .collect();
    json!({
        "statement": o.statement.id(),
        "samples": o.samples,
        "on_locus": o.on_locus,
        "pass": o.passed(),
        "counterexamples": shown,
        "counterexamples_total": o.counterexamples.len(),
        "min_on_locus": o.min_on_locus,
        "generator": GENERATOR,
        "seed": seed,
    })
}
