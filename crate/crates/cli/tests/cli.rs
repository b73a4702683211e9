use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn selfdist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_selfdist"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_str(&stdout(out)).unwrap()
}

fn write(dir: &TempDir, name: &str, contents: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, contents).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn classify_three_element_table() {
    let dir = TempDir::new().unwrap();
    let f = write(
        &dir,
        "t.json",
        r#"{"order":3,"table":[[0,2,1],[2,1,0],[1,0,2]]}"#,
    );
    let out = selfdist(&["classify", s(&f)]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["is_shelf"], true);
    assert_eq!(v["is_spindle"], true);
    assert_eq!(v["is_quandle"], true);
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
    assert!(stdout(&out).ends_with('\n'));
}

#[test]
fn classify_negative_and_malformed() {
    let dir = TempDir::new().unwrap();
    let constant = write(&dir, "c.json", r#"{"order":2,"table":[[0,0],[1,1]]}"#);
    let out = selfdist(&["classify", s(&constant)]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["violations"][0]["axiom"], "bijectivity");

    let truncated = write(&dir, "bad.json", r#"{"order":3,"table":[[0,2"#);
    let out = selfdist(&["classify", s(&truncated)]);
    assert_eq!(code(&out), 2);
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());

    let ragged = write(&dir, "r.json", r#"{"order":2,"table":[[0,1],[1]]}"#);
    assert_eq!(code(&selfdist(&["classify", s(&ragged)])), 2);
    assert_eq!(code(&selfdist(&["classify", "/nonexistent/table.json"])), 2);
}

#[test]
fn enumerate_emits_tables_and_count() {
    let out = selfdist(&[
        "enumerate",
        "--order",
        "4",
        "--kind",
        "quandle",
        "--up-to-iso",
    ]);
    assert_eq!(code(&out), 0);
    let lines: Vec<Value> = stdout(&out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 8);
    assert_eq!(lines[7]["count"], 7);
    assert!(lines[..7].iter().all(|t| t["order"] == 4));

    let out = selfdist(&["enumerate", "--order", "3", "--kind", "shelf"]);
    assert_eq!(
        stdout(&out)
            .lines()
            .last()
            .map(|l| l.contains("\"count\":224")),
        Some(true)
    );

    assert_eq!(
        code(&selfdist(&[
            "enumerate",
            "--order",
            "6",
            "--kind",
            "quandle"
        ])),
        2
    );
    assert_eq!(
        code(&selfdist(&["enumerate", "--order", "3", "--kind", "rack"])),
        2
    );
}

#[test]
fn verify_passes_and_is_deterministic() {
    let args = [
        "verify",
        "--realization",
        "matrix-hermitian",
        "--dim",
        "2",
        "--samples",
        "50",
        "--seed",
        "5",
    ];
    let a = selfdist(&args);
    assert_eq!(code(&a), 0);
    let reports = json(&a);
    let reports = reports.as_array().unwrap();
    assert_eq!(reports.len(), 4);
    for r in reports {
        assert_eq!(r["pass"], true);
        assert_eq!(r["tolerance"], 1e-8);
        assert_eq!(r["samples"], 50);
    }
    assert_eq!(a.stdout, selfdist(&args).stdout);
}

#[test]
fn verify_defaults_to_affine_tolerance() {
    let out = selfdist(&["verify", "--realization", "convex-flow", "--dim", "4"]);
    assert_eq!(code(&out), 0);
    assert!(json(&out)
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["tolerance"] == 1e-12));
}

#[test]
fn verify_negative_control_exits_one() {
    let out = selfdist(&["verify", "--realization", "corrupted"]);
    assert_eq!(code(&out), 1);
    let v = json(&out);
    let sd = v
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["axiom"] == "self-distributivity")
        .unwrap();
    assert_eq!(sd["pass"], false);
}

#[test]
fn realization_flags_are_validated() {
    assert_eq!(
        code(&selfdist(&[
            "verify",
            "--realization",
            "bloch",
            "--bias",
            "0.2"
        ])),
        2
    );
    assert_eq!(
        code(&selfdist(&["verify", "--realization", "convex-spindle"])),
        2
    );
    assert_eq!(
        code(&selfdist(&[
            "verify",
            "--realization",
            "matrix-general",
            "--dim",
            "17"
        ])),
        2
    );
    assert_eq!(
        code(&selfdist(&[
            "verify",
            "--realization",
            "union",
            "--dim",
            "2"
        ])),
        2
    );
    assert_eq!(
        code(&selfdist(&[
            "verify",
            "--realization",
            "fixed-spectrum",
            "--spectrum",
            "1,1,2"
        ])),
        2
    );
    assert_eq!(
        code(&selfdist(&[
            "verify",
            "--realization",
            "fixed-spectrum",
            "--dim",
            "2",
            "--spectrum",
            "1,2,3"
        ])),
        2
    );
    assert_eq!(
        code(&selfdist(&[
            "verify",
            "--realization",
            "bloch",
            "--samples",
            "0"
        ])),
        2
    );
    assert_eq!(
        code(&selfdist(&[
            "noether",
            "--realization",
            "convex-spindle",
            "--bias",
            "0.5"
        ])),
        2
    );
    assert_eq!(
        code(&selfdist(&[
            "verify",
            "--realization",
            "convex-spindle",
            "--bias",
            "0.5",
            "--body",
            "simplex"
        ])),
        0
    );
}

#[test]
fn noether_exit_codes() {
    let out = selfdist(&["noether", "--realization", "matrix-hermitian", "--dim", "3"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["inconsistent"], 0);
    assert_eq!(v["mode_disagreements"], 0);
    assert_eq!(v["verdicts"].as_array().unwrap().len(), 100);

    let out = selfdist(&["noether", "--realization", "union", "--pairs", "40"]);
    assert_eq!(code(&out), 1);
    assert!(json(&out)["inconsistent"].as_u64().unwrap() > 0);
}

#[test]
fn bloch_flow_traces_the_equator() {
    let dir = TempDir::new().unwrap();
    let x = write(&dir, "x.json", "[0, 0, 1]");
    let y = write(&dir, "y.json", "[1, 0, 0]");
    let two_pi = std::f64::consts::TAU.to_string();
    // RK4 needs finer steps to close the orbit to 1e-8.
    for (method, steps) in [("closed", 200), ("rk4", 1000)] {
        let out = selfdist(&[
            "flow",
            "--realization",
            "bloch",
            "--x",
            s(&x),
            "--y",
            s(&y),
            "--t-end",
            &two_pi,
            "--steps",
            &steps.to_string(),
            "--method",
            method,
        ]);
        assert_eq!(code(&out), 0);
        let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
        assert_eq!(reader.headers().unwrap(), vec!["t", "x", "y", "z"]);
        let rows: Vec<Vec<f64>> = reader
            .records()
            .map(|r| r.unwrap().iter().map(|c| c.parse().unwrap()).collect())
            .collect();
        assert_eq!(rows.len(), steps + 1);
        for row in &rows {
            assert!(row[3].abs() < 1e-12);
            assert!((row[1].hypot(row[2]) - 1.0).abs() < 1e-8);
        }
        let last = rows.last().unwrap();
        assert!((last[1] - 1.0).abs() < 1e-8 && last[2].abs() < 1e-8);
    }
}

#[test]
fn matrix_flow_to_file() {
    let dir = TempDir::new().unwrap();
    let x = write(
        &dir,
        "x.json",
        r#"{"dim":2,"re":[[1,0],[0,-1]],"im":[[0,0],[0,0]]}"#,
    );
    let y = write(
        &dir,
        "y.json",
        r#"{"dim":2,"re":[[0,1],[1,0]],"im":[[0,0],[0,0]]}"#,
    );
    let csv_path = dir.path().join("traj.csv");
    let out = selfdist(&[
        "flow",
        "--realization",
        "matrix-hermitian",
        "--x",
        s(&x),
        "--y",
        s(&y),
        "--t-end",
        "1",
        "--steps",
        "400",
        "--method",
        "rk4",
        "--output",
        s(&csv_path),
    ]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let mut reader = csv::Reader::from_path(&csv_path).unwrap();
    assert_eq!(
        reader.headers().unwrap(),
        vec!["t", "re_00", "im_00", "re_01", "im_01", "re_10", "im_10", "re_11", "im_11"]
    );
    let last: Vec<f64> = reader
        .records()
        .last()
        .unwrap()
        .unwrap()
        .iter()
        .map(|c| c.parse().unwrap())
        .collect();
    // e^{iσz} σx e^{−iσz} has off-diagonal entries e^{±2i}.
    assert!((last[3] - 2f64.cos()).abs() < 1e-9);
    assert!((last[4] - 2f64.sin()).abs() < 1e-9);
    assert!((last[5] - 2f64.cos()).abs() < 1e-9);
    assert!((last[6] + 2f64.sin()).abs() < 1e-9);
}

#[test]
fn flow_rejects_bad_inputs() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a.json", r#"{"part":"algebra","value":1}"#);
    let p = write(&dir, "p.json", r#"{"part":"space","value":[1,0]}"#);
    let base = [
        "flow",
        "--realization",
        "union",
        "--x",
        s(&a),
        "--y",
        s(&p),
        "--t-end",
        "1",
    ];
    assert_eq!(code(&selfdist(&base)), 0);
    let rk4: Vec<&str> = base.iter().copied().chain(["--method", "rk4"]).collect();
    assert_eq!(code(&selfdist(&rk4)), 2);
    let zero: Vec<&str> = base.iter().copied().chain(["--steps", "0"]).collect();
    assert_eq!(code(&selfdist(&zero)), 2);

    let off_sphere = write(&dir, "o.json", "[1, 1, 0]");
    let out = selfdist(&[
        "flow",
        "--realization",
        "bloch",
        "--x",
        s(&off_sphere),
        "--y",
        s(&off_sphere),
        "--t-end",
        "1",
    ]);
    assert_eq!(code(&out), 2);
    let non_hermitian = write(
        &dir,
        "n.json",
        r#"{"dim":2,"re":[[0,1],[0,0]],"im":[[0,0],[0,0]]}"#,
    );
    let out = selfdist(&[
        "flow",
        "--realization",
        "matrix-hermitian",
        "--x",
        s(&non_hermitian),
        "--y",
        s(&non_hermitian),
        "--t-end",
        "1",
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn convex_bracket_is_the_difference() {
    let dir = TempDir::new().unwrap();
    let x = write(&dir, "x.json", "[1.0, -2.0, 0.5]");
    let y = write(&dir, "y.json", "[0.25, 0.0, -1.0]");
    let out = selfdist(&[
        "bracket",
        "--realization",
        "convex-flow",
        "--x",
        s(&x),
        "--y",
        s(&y),
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let numeric: Vec<f64> = serde_json::from_value(v["numeric"].clone()).unwrap();
    for (n, e) in numeric.iter().zip([0.75, -2.0, 1.5]) {
        assert!((n - e).abs() < 1e-6);
    }
    assert!(v["discrepancy"].as_f64().unwrap() < 1e-6);

    let out = selfdist(&[
        "bracket",
        "--realization",
        "convex-flow",
        "--x",
        s(&x),
        "--y",
        s(&y),
        "--h",
        "0",
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn corrupted_bracket_has_no_analytic_side() {
    let dir = TempDir::new().unwrap();
    let x = write(&dir, "x.json", "[1.0, 0.0, 0.0]");
    let out = selfdist(&[
        "bracket",
        "--realization",
        "corrupted",
        "--x",
        s(&x),
        "--y",
        s(&x),
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["analytic"], Value::Null);
}
