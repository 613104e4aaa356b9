use std::path::Path;
use std::process::{Command, Output};

use areg_cli::report::{SliceReport, TablesReport};
use areg_cli::VerdictReport;
use serde_json::Value;
use tempfile::TempDir;

fn areg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_areg"))
        .args(args)
        .output()
        .expect("run areg")
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

fn pair(dir: &TempDir, g: &str, constructor: &str, params: &str) -> String {
    let text = format!(r#"{{"g": {g}, "h": {{"constructor": "{constructor}", "params": {params}}}}}"#);
    write(dir, &format!("{constructor}{}.json", params.replace([',', '[', ']', ' '], "_")), &text)
}

fn stdout_json<T: serde::de::DeserializeOwned>(out: &Output) -> T {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "bad report ({e}): {}\n{}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

#[test]
fn decide_sl4_block_pair_is_yes() {
    let dir = TempDir::new().unwrap();
    let p = pair(&dir, r#"[{"family":"A","rank":3}]"#, "block_sgl", "[2,2]");
    let out = areg(&["decide", &p]);
    assert_eq!(out.status.code(), Some(0));
    let r: VerdictReport = stdout_json(&out);
    assert!(r.a_regular);
    assert_eq!(r.failure_bound, "0");
    assert_eq!(r.catalog_match.as_ref().map(|m| m.row_id.as_str()), Some("T3-2b"));
    assert!(r.routes.iter().any(|x| x == "satake"));
}

#[test]
fn decide_sl6_block_pair_is_no() {
    let dir = TempDir::new().unwrap();
    let p = pair(&dir, r#"[{"family":"A","rank":5}]"#, "block_sgl", "[2,4]");
    let out = areg(&["decide", &p]);
    assert_eq!(out.status.code(), Some(3));
    let r: VerdictReport = stdout_json(&out);
    assert!(!r.a_regular);
    assert!(r.failure_bound_log2_max.unwrap() < -40);
    let inv = r.invariants.unwrap();
    assert_eq!((inv.c, inv.rk, inv.dim_h_star), (0, 2, 5));
}

#[test]
fn report_round_trips_and_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let p = pair(&dir, r#"[{"family":"A","rank":2}]"#, "so_in_sl", "[3]");
    let strip = |out: &Output| {
        let mut v: Value = serde_json::from_slice(&out.stdout).unwrap();
        v.as_object_mut().unwrap().remove("timing_ms");
        v
    };
    let a = areg(&["decide", &p, "--seed", "7"]);
    let b = areg(&["decide", &p, "--seed", "7"]);
    assert_eq!(strip(&a), strip(&b));
    let r: VerdictReport = stdout_json(&a);
    let again: VerdictReport = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
    assert_eq!(r, again);
    assert_eq!(r.sampling.seed, 7);
}

#[test]
fn malformed_descriptor_names_the_field() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "bad.json", r#"{"g": [{"family": "A", "rank": 3}], "h": {"constructor": "block_sgl", "parms": [2, 2]}}"#);
    let out = areg(&["decide", &p]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("h.parms"), "{err}");

    let p = write(&dir, "bad_entry.json", r#"{"g": [{"family": "A", "rank": 1}], "h": {"custom": [[[[1, "a/b"], [0, -1]]]]}}"#);
    let out = areg(&["decide", &p]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("h.custom[0][0][0][1]"), "{err}");

    let p = write(&dir, "wrong_ambient.json", r#"{"g": [{"family": "A", "rank": 4}], "h": {"constructor": "block_sgl", "params": [2, 2]}}"#);
    let out = areg(&["decide", &p]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("`h`"));
}

#[test]
fn custom_torus_in_sl2() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "torus.json", r#"{"g": [{"family": "A", "rank": 1}], "h": {"custom": [[[[1, 0], [0, -1]]]]}, "expected_verdict": true}"#);
    let out = areg(&["decide", &p]);
    assert_eq!(out.status.code(), Some(0));
    let r: VerdictReport = stdout_json(&out);
    assert_eq!(r.matches_expected, Some(true));
}

#[test]
fn expected_verdict_mismatch_exits_2() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "wrong.json", r#"{"g": [{"family": "A", "rank": 5}], "h": {"constructor": "block_sgl", "params": [2, 4]}, "expected_verdict": true}"#);
    assert_eq!(areg(&["decide", &p]).status.code(), Some(2));
}

#[test]
fn decide_composite_pair_splits() {
    let dir = TempDir::new().unwrap();
    // so3 in the sl3 factor and the diagonal torus in the sl2 factor.
    let p = write(
        &dir,
        "composite.json",
        r#"{"g": [{"family": "A", "rank": 2}, {"family": "A", "rank": 1}],
            "h": {"custom": [
                [[[0, 1, 0], [-1, 0, 0], [0, 0, 0]], [[0, 0], [0, 0]]],
                [[[0, 0, 1], [0, 0, 0], [-1, 0, 0]], [[0, 0], [0, 0]]],
                [[[0, 0, 0], [0, 0, 1], [0, -1, 0]], [[0, 0], [0, 0]]],
                [[[0, 0, 0], [0, 0, 0], [0, 0, 0]], [[1, 0], [0, -1]]]
            ]}}"#,
    );
    let out = areg(&["decide", &p]);
    assert_eq!(out.status.code(), Some(0));
    let r: VerdictReport = stdout_json(&out);
    assert!(!r.factorization.indecomposable);
    assert_eq!(r.factorization.factors.len(), 2);
    assert_eq!(r.dim_h, 4);
}

#[test]
fn verify_tables_rank_4() {
    let out = areg(&["verify-tables", "--max-rank", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let r: TablesReport = stdout_json(&out);
    assert_eq!(r.mismatches, 0);
    assert_eq!(r.errors, 0);
    assert!(r.rows_verified >= 25, "{}", r.rows_verified);
    assert!(r.skipped_rows.len() >= 10);
    // Regression numbers for the current constructor list.
    assert_eq!(r.rows_verified, 30);
    assert_eq!(r.skipped_rows.len(), 11);
}

#[test]
fn verify_tables_rank_2() {
    let out = areg(&["verify-tables", "--max-rank", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let r: TablesReport = stdout_json(&out);
    assert_eq!(r.mismatches, 0);
    assert_eq!(r.errors, 0);
}

#[test]
fn corrupted_catalog_is_rejected() {
    let dir = TempDir::new().unwrap();
    let good = areg_core::catalog::Catalog::builtin_json();
    let bad = good.replacen("\"verdict\": false", "\"verdict\": true", 1);
    let bad = if bad == good {
        good.replacen("\"verdict\":false", "\"verdict\":true", 1)
    } else {
        bad
    };
    assert_ne!(bad, good);
    let p = write(&dir, "catalog.json", &bad);
    let out = areg(&["verify-tables", "--max-rank", "2", "--catalog", &p]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("checksum"));

    let ok = write(&dir, "good.json", good);
    assert_eq!(areg(&["verify-tables", "--max-rank", "2", "--catalog", &ok]).status.code(), Some(0));
}

#[test]
fn slice_of_sl3() {
    let out = areg(&["slice", "--algebra", "A2"]);
    assert_eq!(out.status.code(), Some(0));
    let r: SliceReport = stdout_json(&out);
    let h = &r.triple.h[0];
    let diag: Vec<&str> = (0..3).map(|i| h[i][i].as_str()).collect();
    assert_eq!(diag, ["2", "0", "-2"]);
    assert_eq!(r.slice_dim, 2);
    assert!(r.samples_regular);
}

#[test]
fn slice_nonemptiness_for_pairs() {
    let dir = TempDir::new().unwrap();
    let yes = pair(&dir, r#"[{"family":"A","rank":4}]"#, "sp_c_in_sl_odd", "[2]");
    let r: SliceReport = stdout_json(&areg(&["slice", &yes]));
    assert!(r.pair.unwrap().nonempty);
    let no = pair(&dir, r#"[{"family":"C","rank":3}]"#, "sp_torus_split", "[3]");
    let r: SliceReport = stdout_json(&areg(&["slice", &no]));
    assert!(!r.pair.unwrap().nonempty);
}

#[test]
fn decompose_and_stabilizer() {
    let dir = TempDir::new().unwrap();
    let p = pair(&dir, r#"[{"family":"A","rank":3}]"#, "block_sgl", "[2,2]");
    let out = areg(&["decompose", &p]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = stdout_json(&out);
    assert_eq!(v["center_dim"], 1);
    assert_eq!(v["simple_ideal_dims"], serde_json::json!([3, 3]));

    let out = areg(&["stabilizer", &p, "--pretty"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = stdout_json(&out);
    assert_eq!(v["dim_h_star"], 1);
    assert_eq!(v["is_abelian"], true);
    assert!(!out.stderr.is_empty());
}

#[test]
fn missing_file_is_an_error() {
    let out = areg(&["decide", Path::new("/nonexistent/pair.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}
