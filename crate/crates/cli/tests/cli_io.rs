//! End-to-end checks of the binary: exit codes, output formats, schema
//! conformance, and determinism.

use serde_json::Value;
use std::io::Write;
use std::process::{Command, Output, Stdio};

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_s2s2"))
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = binary()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary terminates")
}

fn run(args: &[&str]) -> Output {
    binary().args(args).output().expect("binary runs")
}

#[test]
fn snf_identity_from_stdin() {
    let out = run_with_stdin(&["snf", "--format", "json"], "1 0\n0 1\n");
    assert!(out.status.success());
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    let diag = report["results"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "diagonal")
        .unwrap();
    assert_eq!(diag["value"], "1, 1");
}

#[test]
fn malformed_input_exits_two() {
    let out = run_with_stdin(&["snf"], "1 banana\n");
    assert_eq!(out.status.code(), Some(2));
    let out = run_with_stdin(&["snf"], "1 2\n3\n");
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["group-cohomology", "--group", "z9", "--module", "z"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["not-a-command"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["kkr", "--table", "--grid", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["cover-check", "--samples", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn paper_suite_exit_code_reflects_failures() {
    let out = run(&["paper-suite", "--grid", "120"]);
    // The two tabulated reference values that disagree with direct
    // computation keep the suite red by design.
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("result failures = 2"));
    assert!(text.contains("z4-pi2-h0"));
    assert!(text.contains("ring-iso-truncated"));
}

/// The text and JSON renderings of a report carry the same numeric
/// content.
#[test]
fn formats_agree_on_numbers() {
    let text = run(&["bordism", "answer"]);
    let json = run(&["bordism", "answer", "--format", "json"]);
    assert!(text.status.success() && json.status.success());

    let report: Value = serde_json::from_slice(&json.stdout).unwrap();
    let text = String::from_utf8_lossy(&text.stdout);
    for claim in report["results"].as_array().unwrap() {
        let name = claim["name"].as_str().unwrap();
        let value = match &claim["value"] {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        let provenance = claim["provenance"].as_str().unwrap();
        let line = format!("result {name} = {value} [{provenance}]");
        assert!(text.contains(&line), "missing line: {line}");
    }
}

/// Reports are byte-identical across runs with the same seed.
#[test]
fn reports_are_deterministic() {
    for args in [
        vec![
            "verify-actions",
            "--action",
            "sigma",
            "--samples",
            "500",
            "--format",
            "json",
        ],
        vec![
            "kkr",
            "--quotient",
            "s2xrp2",
            "--class",
            "y",
            "--grid",
            "80",
            "--format",
            "json",
        ],
        vec!["paper-suite", "--grid", "80", "--format", "json"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.stdout, b.stdout, "nondeterministic output for {args:?}");
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run_with_stdin(
        &["snf", "--format", "json", "--out", path.to_str().unwrap()],
        "2 0\n0 3\n",
    );
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let diag = report["results"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "diagonal")
        .unwrap();
    assert_eq!(diag["value"], "1, 6");
}

#[test]
fn bordism_variants() {
    let out = run(&["bordism", "answer", "--omega4-zero", "--format", "json"]);
    assert!(out.status.success());
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    let total = report["results"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "total")
        .unwrap();
    assert_eq!(total["value"], "Z/2 + Z/2");

    let out = run(&["bordism", "answer", "--no-e8", "--format", "json"]);
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    let total = report["results"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "total")
        .unwrap();
    assert_eq!(total["value"], "Z/2 + Z/2");
}

#[test]
fn identity_action_reports_fixed_points() {
    let out = run(&["verify-actions", "--action", "identity", "--samples", "200"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(
        text.contains("fixed point"),
        "report should surface the fixed point: {text}"
    );
}

#[test]
fn f2_coefficients_via_cli() {
    let out = run(&[
        "group-homology",
        "--group",
        "z2xz2",
        "--module",
        "f2",
        "--degree",
        "2",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    let h2 = report["results"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "H_2")
        .unwrap();
    assert_eq!(h2["value"], "Z/2 + Z/2 + Z/2");
}

#[test]
fn ring_file_paths_accepted() {
    let out = run(&[
        "ring",
        "wu",
        "--file",
        concat!(env!("CARGO_MANIFEST_DIR"), "/data/rings/rp2xrp2.ring"),
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    let v1 = report["results"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "v1")
        .unwrap();
    assert_eq!(v1["value"], "t + u");
}

// ---- schema conformance ----

/// Minimal JSON-Schema checker covering the subset used by the shipped
/// schema: object types, required keys, enums, and typed scalars.
fn validate(schema: &Value, value: &Value) -> Result<(), String> {
    if let Some(types) = schema.get("type") {
        let allowed: Vec<&str> = match types {
            Value::String(s) => vec![s.as_str()],
            Value::Array(a) => a.iter().filter_map(Value::as_str).collect(),
            _ => vec![],
        };
        let actual = match value {
            Value::Null => "null",
            Value::Bool(_) => "boolean",
            Value::Number(n) => {
                if n.is_i64() || n.is_u64() {
                    "integer"
                } else {
                    "number"
                }
            }
            Value::String(_) => "string",
            Value::Array(_) => "array",
            Value::Object(_) => "object",
        };
        let ok = allowed
            .iter()
            .any(|t| *t == actual || (*t == "number" && actual == "integer"));
        if !ok {
            return Err(format!("expected type {allowed:?}, got {actual}"));
        }
    }
    if let Some(variants) = schema.get("enum").and_then(Value::as_array) {
        if !variants.contains(value) {
            return Err(format!("{value} not in enum {variants:?}"));
        }
    }
    if value.is_object() {
        if let Some(required) = schema.get("required").and_then(Value::as_array) {
            for key in required.iter().filter_map(Value::as_str) {
                if value.get(key).is_none() {
                    return Err(format!("missing required key '{key}'"));
                }
            }
        }
        if let Some(props) = schema.get("properties").and_then(Value::as_object) {
            for (key, sub) in props {
                if let Some(v) = value.get(key) {
                    validate(sub, v).map_err(|e| format!("{key}: {e}"))?;
                }
            }
            if schema.get("additionalProperties") == Some(&Value::Bool(false)) {
                for key in value.as_object().unwrap().keys() {
                    if !props.contains_key(key) {
                        return Err(format!("unexpected key '{key}'"));
                    }
                }
            }
        }
    }
    if let (Some(items), Some(arr)) = (schema.get("items"), value.as_array()) {
        for (i, v) in arr.iter().enumerate() {
            validate(items, v).map_err(|e| format!("[{i}]: {e}"))?;
        }
    }
    Ok(())
}

#[test]
fn reports_validate_against_shipped_schema() {
    let schema: Value = serde_json::from_str(include_str!("../data/report.schema.json")).unwrap();
    let commands: Vec<Vec<&str>> = vec![
        vec!["bordism", "answer", "--format", "json"],
        vec!["bordism", "e2", "--format", "json"],
        vec!["bordism", "e3", "--format", "json"],
        vec![
            "group-cohomology",
            "--group",
            "z4",
            "--module",
            "pi2",
            "--format",
            "json",
        ],
        vec!["ring", "wu", "--file", "rp2xrp2", "--format", "json"],
        vec![
            "gamma", "orbits", "--case", "rp2xrp2", "--swap", "--format", "json",
        ],
        vec!["cover-check", "--samples", "500", "--format", "json"],
        vec![
            "kkr",
            "--quotient",
            "s2xtrp2",
            "--class",
            "x+y",
            "--grid",
            "80",
            "--format",
            "json",
        ],
    ];
    for args in commands {
        let out = run(&args);
        assert!(out.status.success(), "command failed: {args:?}");
        let report: Value = serde_json::from_slice(&out.stdout).unwrap();
        validate(&schema, &report).unwrap_or_else(|e| panic!("{args:?}: {e}"));
    }
}
