//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Criteria listed in `EXPECTED_FAILING` are known to fail for reasons
//! recorded alongside them; the run exits non-zero only when a result
//! differs from that expectation. Set `GEO_ACCEPTANCE_STRICT=1` to exit
//! non-zero on any failure.

use std::process::Command;
use std::time::{Duration, Instant};

use geofol_core::verify::{
    verify_connection_axioms, verify_families, verify_lemma_divergence, verify_proof_steps, verify_prop_geometry,
    verify_theorem_integrable, verify_theorem_main, SamplerConfig, VerificationOutcome,
};

const SAMPLES: usize = 1000;

/// The printed cosymplectic loci for g20 are contradicted by the tensor
/// pipeline (δJ1 = 2aZ − 2αW with α ≠ 0), so criterion 7 fails on g20 and
/// the full CLI suite exits 1.
const EXPECTED_FAILING: [u32; 2] = [7, 9];

struct Verdict {
    id: u32,
    title: &'static str,
    pass: bool,
    detail: String,
}

fn summary(o: &VerificationOutcome) -> String {
    format!(
        "{}: samples={} on_locus={} counterexamples={}",
        o.statement,
        o.samples,
        o.on_locus,
        o.counterexamples.len()
    )
}

fn outcome_verdict(id: u32, title: &'static str, o: &VerificationOutcome, min_on_locus: usize) -> Verdict {
    Verdict {
        id,
        title,
        pass: o.passed() && o.samples >= SAMPLES && o.on_locus >= min_on_locus,
        detail: summary(o),
    }
}

fn criterion_1() -> Verdict {
    let start = Instant::now();
    let o = verify_lemma_divergence(&SamplerConfig::new(3, SAMPLES));
    let elapsed = start.elapsed();
    Verdict {
        id: 1,
        title: "divergence closed forms",
        pass: o.passed() && o.samples >= SAMPLES && elapsed < Duration::from_secs(5),
        detail: format!("{} in {:.2?}", summary(&o), elapsed),
    }
}

fn criterion_2() -> Verdict {
    let o = verify_theorem_main(&SamplerConfig::new(1, SAMPLES));
    outcome_verdict(2, "cosymplectic ⟺ Riemannian ∧ H integrable", &o, 100)
}

fn criterion_3() -> Verdict {
    let o = verify_theorem_integrable(&SamplerConfig::new(2, SAMPLES));
    outcome_verdict(3, "integrable ⟺ totally geodesic", &o, 100)
}

fn criterion_4() -> Verdict {
    let o = verify_prop_geometry(&SamplerConfig::new(4, SAMPLES));
    outcome_verdict(4, "geometry closed forms", &o, 100)
}

/// Splits the proof-step counterexamples into the schema-wide facts and the
/// Nijenhuis identity suite.
fn is_schema_fact(expected: &str) -> bool {
    ["minimal", "conformal", "H δ", "V(δJ1"].iter().any(|p| expected.starts_with(p))
}

fn criteria_5_6() -> [Verdict; 2] {
    let o = verify_proof_steps(&SamplerConfig::new(5, SAMPLES));
    let facts = o.counterexamples.iter().filter(|c| is_schema_fact(&c.expected)).count();
    let identities = o.counterexamples.len() - facts;
    let enough = o.samples >= SAMPLES;
    [
        Verdict {
            id: 5,
            title: "schema-wide facts",
            pass: enough && facts == 0,
            detail: format!("samples={} residuals={facts}", o.samples),
        },
        Verdict {
            id: 6,
            title: "Nijenhuis identity suite",
            pass: enough && identities == 0,
            detail: format!("samples={} residuals={identities}", o.samples),
        },
    ]
}

fn criterion_7() -> Verdict {
    let outcomes = verify_families(&SamplerConfig::new(6, SAMPLES));
    let pass = outcomes.iter().all(|o| o.passed() && o.samples >= 500);
    let mut detail: Vec<String> = outcomes.iter().map(summary).collect();
    if let Some(c) = outcomes.iter().flat_map(|o| &o.counterexamples).next() {
        let params: Vec<String> = c.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        detail.push(format!("first: {} expected {} got {}", params.join(" "), c.expected, c.got));
    }
    Verdict { id: 7, title: "family commentary", pass, detail: detail.join("; ") }
}

fn criterion_8() -> Verdict {
    let o = verify_connection_axioms(&SamplerConfig::new(8, SAMPLES));
    Verdict { id: 8, title: "connection axioms", pass: o.passed() && o.samples >= SAMPLES, detail: summary(&o) }
}

fn geo_exit(args: &[&str]) -> Option<i32> {
    Command::new(env!("CARGO_BIN_EXE_geo")).args(args).output().expect("geo runs").status.code()
}

fn criterion_9() -> Verdict {
    let start = Instant::now();
    let all = geo_exit(&["verify", "--suite", "all", "--samples", "1000", "--seed", "42"]);
    let fault = geo_exit(&["verify", "--suite", "lemma", "--samples", "100", "--seed", "42", "--fault", "flip-lemma-sign"]);
    let dir = std::env::temp_dir().join(format!("geo-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let g5 = dir.join("g5.json");
    std::fs::write(&g5, r#"{"family": "g5", "params": {"alpha": "1", "a": "1", "beta": "1", "b": "1", "r": "1"}}"#)
        .unwrap();
    let inadmissible = geo_exit(&["report", g5.to_str().unwrap()]);
    let _ = std::fs::remove_dir_all(&dir);
    let elapsed = start.elapsed();
    Verdict {
        id: 9,
        title: "command-line contract",
        pass: all == Some(0) && fault == Some(1) && inadmissible == Some(2) && elapsed < Duration::from_secs(60),
        detail: format!(
            "suite all exit={all:?} (want 0), mutated exit={fault:?} (want 1), inadmissible exit={inadmissible:?} (want 2), {elapsed:.2?}"
        ),
    }
}

fn main() {
    let mut verdicts = vec![criterion_1(), criterion_2(), criterion_3(), criterion_4()];
    verdicts.extend(criteria_5_6());
    verdicts.extend([criterion_7(), criterion_8(), criterion_9()]);

    let strict = std::env::var("GEO_ACCEPTANCE_STRICT").is_ok_and(|v| v == "1");
    let mut unexpected = Vec::new();
    for v in &verdicts {
        let known = EXPECTED_FAILING.contains(&v.id);
        let tag = match (v.pass, known) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known)",
            (false, false) => "FAIL",
        };
        println!("criterion {}: {tag}: {} [{}]", v.id, v.title, v.detail);
        if v.pass == known || (strict && !v.pass) {
            unexpected.push(v.id);
        }
    }
    let passed = verdicts.iter().filter(|v| v.pass).count();
    println!("{passed}/{} criteria pass", verdicts.len());
    if !unexpected.is_empty() {
        eprintln!("criteria differing from the recorded expectation: {unexpected:?}");
        std::process::exit(1);
    }
}
