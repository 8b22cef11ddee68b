//! End-to-end checks of the `segkit` command line, in-process and through
//! the built binary. Golden outputs live in `tests/golden/`; set
//! `UPDATE_GOLDEN=1` to rewrite them.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use serde_json::Value;

use segkit::cli::run;
use segkit::partitions::Partition;

fn segkit(args: &[&str], input: &str) -> (i32, String, String) {
    let mut stdin = input.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(
        std::iter::once("segkit").chain(args.iter().copied()),
        &mut stdin,
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn golden(name: &str, actual: &str) {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name]
        .iter()
        .collect();
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, want, "output differs from {}", path.display());
}

fn lines(s: &str) -> Vec<Value> {
    s.lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn worked_word_converts_to_kleshchev_data() {
    let (code, out, _) = segkit(
        &["convert", "--from", "word", "--to", "kleshchev"],
        r#"{"tops": [-1, 0, 1, 2, 2], "bottoms": [-4, -5, -2, -1, -2]}"#,
    );
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(
        v["result"]["gamma"],
        serde_json::json!([[4], [6, 4, 4], [5]])
    );
    assert_eq!(v["result"]["f"], serde_json::json!([2, 0, -1]));
    assert_eq!(v["roundtrip"]["ok"], Value::Bool(true));
    golden("convert_word_to_kleshchev.json", &out);
}

#[test]
fn multipartition_roots_with_trace() {
    let (code, out, _) = segkit(
        &[
            "convert",
            "--from",
            "multipartition",
            "--to",
            "drinfeld",
            "--n",
            "2",
            "--trace",
        ],
        r#"{"lambda": [[2, 1]], "f": [0]}"#,
    );
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    // Q_1 has roots q^{2(j-1)} for the two boxes of row 1, Q_2 has q^{-2}.
    assert_eq!(v["result"]["roots"], serde_json::json!([[0, 2], [-2]]));
    assert_eq!(
        v["trace"][0]["column_segments"],
        serde_json::json!([[-1, 0], [1, 1]])
    );
    golden("convert_multipartition_to_drinfeld.json", &out);
}

#[test]
fn skew_shape_to_multisegment() {
    let (code, out, _) = segkit(
        &["convert", "--from", "skew", "--to", "multisegment"],
        r#"{"outer": [2, 2], "inner": [1]}"#,
    );
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"], serde_json::json!([[-1, -1], [0, 1]]));
    assert!(v.get("roundtrip").is_none());
    golden("convert_skew_to_multisegment.json", &out);
}

#[test]
fn failed_roundtrip_exits_one() {
    // ((1),()) is not sincere, so its roots come back as a one-component
    // multipartition.
    let (code, out, _) = segkit(
        &["convert", "--from", "multipartition", "--to", "drinfeld"],
        r#"{"lambda": [[1], []], "f": [0, 0]}"#,
    );
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["roundtrip"]["ok"], Value::Bool(false));
    let (code, _, _) = segkit(
        &[
            "convert",
            "--from",
            "multipartition",
            "--to",
            "drinfeld",
            "--no-roundtrip",
        ],
        r#"{"lambda": [[1], []], "f": [0, 0]}"#,
    );
    assert_eq!(code, 0);
}

#[test]
fn bad_payloads_are_usage_errors() {
    let (code, _, err) = segkit(&["convert", "--from", "word", "--to", "kleshchev"], "{");
    assert_eq!(code, 2);
    assert!(err.contains("invalid JSON"));
    let (code, _, err) = segkit(
        &["convert", "--from", "word", "--to", "kleshchev"],
        r#"{"tops": [1, 0], "bottoms": [1, 0]}"#,
    );
    assert_eq!(code, 2, "{err}");
    let (code, _, err) = segkit(&["convert", "--from", "word", "--to", "skew"], "{}");
    assert_eq!(code, 2);
    assert!(err.contains("no conversion"));
}

#[test]
fn standard_kleshchev_enumeration_for_one_component() {
    let (code, out, _) = segkit(
        &["enumerate", "standard-kleshchev", "--f", "0", "--r", "4"],
        "",
    );
    assert_eq!(code, 0);
    let items = lines(&out);
    // One component: every partition of 4.
    assert_eq!(items.len(), Partition::all_of_size(4).len());
    golden("enumerate_standard_kleshchev_f0_r4.jsonl", &out);
}

#[test]
fn word_enumeration_in_a_window() {
    let (code, out, _) = segkit(
        &[
            "enumerate",
            "standard-words",
            "--r",
            "1",
            "--window",
            "-1..1",
        ],
        "",
    );
    assert_eq!(code, 0);
    let items = lines(&out);
    let tops: Vec<i64> = items
        .iter()
        .map(|v| v["tops"][0].as_i64().unwrap())
        .collect();
    assert_eq!(tops, vec![-1, 0, 1]);
    for v in &items {
        assert_eq!(v["tops"], v["bottoms"]);
    }
}

#[test]
fn multisegments_by_charge_match_the_bijection() {
    let (_, by_charge, _) = segkit(
        &["enumerate", "multisegments", "--f", "1,0", "--r", "3"],
        "",
    );
    let (_, kl, _) = segkit(
        &["count", "standard-kleshchev", "--f", "0,-1", "--r", "3"],
        "",
    );
    let count: Value = serde_json::from_str(&kl).unwrap();
    assert_eq!(
        lines(&by_charge).len() as u64,
        count["count"].as_u64().unwrap()
    );
}

/// `ν ⊆ λ` pairs with `|λ| <= 4`, by brute containment over all pairs.
fn skew_pair_count(max: usize) -> usize {
    let all: Vec<Partition> = (0..=max).flat_map(Partition::all_of_size).collect();
    let contains = |l: &Partition, n: &Partition| (1..=n.len()).all(|i| n.part(i) <= l.part(i));
    all.iter()
        .map(|l| all.iter().filter(|n| contains(l, n)).count())
        .sum()
}

#[test]
fn skew_shape_count() {
    let (code, out, _) = segkit(&["count", "skew-shapes", "--outer-max", "4"], "");
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["count"].as_u64().unwrap() as usize, skew_pair_count(4));
    assert_eq!(skew_pair_count(4), 52);
}

#[test]
fn unbounded_requests_and_bad_flags() {
    assert_eq!(
        segkit(&["enumerate", "standard-words", "--r", "2"], "").0,
        2
    );
    assert_eq!(segkit(&["enumerate", "kleshchev", "--r", "2"], "").0, 2);
    assert_eq!(segkit(&["enumerate", "nonsense"], "").0, 2);
    assert_eq!(segkit(&["verify", "skew", "--q0", "-1"], "").0, 2);
    assert_eq!(segkit(&["verify", "specht", "--r-max", "9"], "").0, 2);
    assert_eq!(segkit(&["--help"], "").0, 0);
}

#[test]
fn jm_report_lists_residue_exponents() {
    let (code, out, _) = segkit(&["verify", "jm", "--lambda", "2,1", "--q0", "2"], "");
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let exps: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["name"].as_str().unwrap().contains("eigenvalue"))
        .map(|c| c["detail"].as_str().unwrap())
        .collect();
    assert_eq!(exps, vec!["exponent 0", "exponent -1", "exponent 1"]);
    assert_eq!(v["summary"]["pass"], Value::Bool(true));
    assert!(v.get("elapsed_ms").is_none());
    golden("verify_jm_2_1.json", &out);
}

#[test]
fn verify_reports_are_byte_identical() {
    let a = segkit(&["verify", "bijections", "--r-max", "5"], "");
    let b = segkit(&["verify", "bijections", "--r-max", "5"], "");
    assert_eq!(a.0, 0);
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a.1).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["summary"]["failed"], 0);
}

#[test]
fn skew_suite_at_small_bounds() {
    let (code, out, _) = segkit(
        &[
            "verify",
            "skew",
            "--r-max",
            "4",
            "--outer-max",
            "6",
            "--q0",
            "3",
        ],
        "",
    );
    assert_eq!(code, 0, "{out}");
}

#[test]
fn report_written_to_file_with_timing() {
    let dir = std::env::temp_dir().join(format!("segkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let (code, out, _) = segkit(
        &[
            "verify",
            "lr",
            "--outer-max",
            "5",
            "--timing",
            "--output",
            path.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(v["elapsed_ms"].is_u64());
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn binary_reads_stdin_and_sets_exit_codes() {
    let exe = env!("CARGO_BIN_EXE_segkit");
    let mut child = Command::new(exe)
        .args(["convert", "--from", "skew", "--to", "drinfeld"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"outer": [2, 2], "inner": [1]}"#)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["roots"], serde_json::json!([[-2, 2], [0], []]));

    let status = Command::new(exe)
        .args(["enumerate", "multisegments", "--r", "2"])
        .stderr(Stdio::null())
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2));

    let capped = Command::new(exe)
        .args(["verify", "relations", "--r-max", "4"])
        .env("SEGKIT_MAX_R", "3")
        .stdout(Stdio::null())
        .stderr(Stdio::null())
        .status()
        .unwrap();
    assert_eq!(capped.code(), Some(2));
}

fn schema(name: &str) -> Value {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "schemas", name]
        .iter()
        .collect();
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn required_keys_present(schema: &Value, doc: &Value) {
    for k in schema["required"].as_array().unwrap() {
        let k = k.as_str().unwrap();
        assert!(doc.get(k).is_some(), "missing {k}");
    }
    let known = schema["properties"].as_object().unwrap();
    for k in doc.as_object().unwrap().keys() {
        assert!(known.contains_key(k), "{k} not in schema");
    }
}

#[test]
fn outputs_follow_the_published_schemas() {
    let (_, out, _) = segkit(&["verify", "lr", "--outer-max", "3"], "");
    required_keys_present(
        &schema("report.schema.json"),
        &serde_json::from_str(&out).unwrap(),
    );
    let (_, out, _) = segkit(
        &[
            "convert",
            "--from",
            "multipartition",
            "--to",
            "drinfeld",
            "--trace",
        ],
        r#"{"lambda": [[2, 1]], "f": [0]}"#,
    );
    required_keys_present(
        &schema("convert.schema.json"),
        &serde_json::from_str(&out).unwrap(),
    );
    let payloads = schema("payloads.schema.json");
    assert_eq!(
        payloads["$defs"]["drinfeld"]["required"],
        serde_json::json!(["n", "roots"])
    );
}
