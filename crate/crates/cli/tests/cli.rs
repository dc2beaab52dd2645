use std::fs;
use std::path::Path;
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_trigspline");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn csv_rows(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .skip(1)
        .map(|l| l.split(',').map(str::to_owned).collect())
        .collect()
}

fn num(s: &str) -> f64 {
    s.parse().expect("number")
}

const CONSTANT: &str = r#"{"kind":"HarmonicSum","terms":[[0,2,0]]}"#;
const COS_T: &str = r#"{"kind":"HarmonicSum","terms":[[1,1,0]]}"#;

#[test]
fn dft_constant_and_cosine() {
    let out = run(&["dft", "--inline", CONSTANT, "--n", "2"]);
    assert_eq!(code(&out), 0);
    let rows = csv_rows(&String::from_utf8(out.stdout).unwrap());
    assert_eq!(rows.len(), 3);
    assert_eq!(num(&rows[0][1]), 2.0);
    for row in &rows[1..] {
        assert!(num(&row[1]).abs() < 1e-12 && num(&row[2]).abs() < 1e-12);
    }

    let out = run(&["dft", "--inline", COS_T, "--n", "2"]);
    let rows = csv_rows(&String::from_utf8(out.stdout).unwrap());
    assert!((num(&rows[1][1]) - 1.0).abs() < 1e-14);
}

#[test]
fn dft_json_format() {
    let out = run(&["dft", "--suite", "cos-p4", "--n", "3", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["N"], 7);
    assert_eq!(doc["a"].as_array().unwrap().len(), 3);
}

#[test]
fn malformed_signal_is_config_error_without_output() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("out.csv");
    let out = run(&[
        "dft",
        "--inline",
        "{\"kind\": ",
        "--n",
        "2",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 2);
    assert!(!out_path.exists());
    assert!(!out.stderr.is_empty());
}

#[test]
fn config_errors() {
    assert_eq!(code(&run(&["dft", "--suite", "cos-p4", "--n", "0"])), 2);
    assert_eq!(code(&run(&["dft", "--suite", "no-such", "--n", "2"])), 2);
    assert_eq!(code(&run(&["dft", "--n", "2"])), 2);
    assert_eq!(
        code(&run(&[
            "spline", "--suite", "cos-p4", "--n", "2", "--r", "0"
        ])),
        2
    );
    assert_eq!(
        code(&run(&[
            "spline",
            "--suite",
            "cos-p4",
            "--n",
            "2",
            "--variant",
            "gauss"
        ])),
        2
    );
    assert_eq!(
        code(&run(&[
            "bounds", "--suite", "cos-p2", "--n", "2", "--kind", "time"
        ])),
        2
    );
}

#[test]
fn spline_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("const.json");
    let out = run(&[
        "spline",
        "--inline",
        CONSTANT,
        "--n",
        "3",
        "--out",
        json.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(doc["a0"], 2.0);
    assert!(doc["coeffs"].as_array().unwrap().is_empty());
    assert!(dir.path().join("const.unfolded.csv").exists());
}

#[test]
fn spline_interpolates_at_nodes() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("s.json");
    let out = run(&[
        "spline",
        "--suite",
        "harmonic-mixed",
        "--n",
        "8",
        "--r",
        "3",
        "--eval-grid",
        "136",
        "--out",
        json.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let eval = fs::read_to_string(dir.path().join("s.eval.csv")).unwrap();
    assert!(eval.starts_with("t,spline,signal,abs_err\n"));
    let rows = csv_rows(&eval);
    assert_eq!(rows.len(), 136);
    // every 8th point of 136 is one of the 17 nodes
    let node_err = rows
        .iter()
        .step_by(8)
        .map(|r| num(&r[3]))
        .fold(0.0, f64::max);
    assert!(node_err < 1e-9, "{node_err}");
    let unfolded = fs::read_to_string(dir.path().join("s.unfolded.csv")).unwrap();
    assert!(unfolded.starts_with("j,a_hat,b_hat,a_true,b_true,abs_err_a,abs_err_b\n"));
    assert_eq!(csv_rows(&unfolded).len(), 69);
}

#[test]
fn eval_grid_needs_out() {
    assert_eq!(
        code(&run(&[
            "spline",
            "--suite",
            "cos-p4",
            "--n",
            "2",
            "--eval-grid",
            "64"
        ])),
        2
    );
}

#[test]
fn response_curves() {
    let out = run(&["response", "--n", "16"]);
    assert_eq!(code(&out), 0);
    let rows = csv_rows(&String::from_utf8(out.stdout).unwrap());
    assert_eq!(rows.len(), 3 * 66);
    let alpha = |r: &str, j: &str| {
        rows.iter()
            .find(|row| row[0] == r && row[1] == j)
            .map(|row| num(&row[5]))
            .unwrap()
    };
    for r in ["1", "3", "10"] {
        assert!(alpha(r, "1") > 0.8);
        assert!(alpha(r, "1") > alpha(r, "16"));
    }

    let out = run(&["response", "--n", "16", "--r", "1"]);
    let rows = csv_rows(&String::from_utf8(out.stdout).unwrap());
    assert!(rows.iter().all(|r| r[0] == "1"));

    assert_eq!(code(&run(&["response", "--n", "16", "--j-max", "10"])), 2);
    assert_eq!(code(&run(&["response", "--n", "16", "--r", "1,x"])), 2);

    let out = run(&["response", "--n", "4", "--r", "1,3", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["curves"].as_array().unwrap().len(), 2);
}

#[test]
fn truncation_cap_is_numerical_error() {
    let out = run(&[
        "response",
        "--n",
        "4",
        "--r",
        "1",
        "--m-max-cap",
        "1",
        "--tail-tol",
        "1e-300",
    ]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("truncation"));
}

#[test]
fn alias_reports() {
    let out = run(&["alias", "--suite", "harmonic-inband", "--n", "2"]);
    assert_eq!(code(&out), 0);
    for row in csv_rows(&String::from_utf8(out.stdout).unwrap()) {
        assert!(num(&row[5]) < 1e-12 && num(&row[6]) < 1e-12);
    }

    let out = run(&["alias", "--suite", "cos-p4", "--n", "2"]);
    assert_eq!(code(&out), 0);
    let rows = csv_rows(&String::from_utf8(out.stdout).unwrap());
    assert_eq!(rows.len(), 3);
    for row in rows {
        assert!(num(&row[5]) <= 1e-10 && num(&row[6]) <= 1e-10);
    }

    let out = run(&[
        "alias",
        "--suite",
        "cos-p4",
        "--n",
        "2",
        "--bound-scale",
        "1e-6",
    ]);
    assert_eq!(code(&out), 1);
}

#[test]
fn bounds_exit_codes() {
    for kind in ["coeff", "alias", "time", "cnorm", "refined"] {
        let out = run(&["bounds", "--suite", "cos-p6", "--n", "4", "--kind", kind]);
        assert_eq!(code(&out), 0, "{kind}");
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(text.starts_with("k,measured,bound,holds\n"));
        assert!(csv_rows(&text).iter().all(|r| r[3] == "true"));
    }
    let out = run(&[
        "bounds",
        "--suite",
        "cos-p6",
        "--n",
        "4",
        "--bound-scale",
        "1e-9",
    ]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8(out.stdout).unwrap().contains("false"));
}

#[test]
fn gen_signal_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("f.json");
    assert_eq!(
        code(&run(&[
            "gen-signal",
            "--suite",
            "sin-p4",
            "--out",
            file.to_str().unwrap()
        ])),
        0
    );
    let before = fs::read(&file).unwrap();
    let out = run(&["gen-signal", "--signal", file.to_str().unwrap(), "--n", "2"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("j,t,f\n"));
    assert_eq!(csv_rows(&text).len(), 5);
    // inputs are never modified
    let out = run(&["dft", "--signal", file.to_str().unwrap(), "--n", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(fs::read(&file).unwrap(), before);
}

fn run_to(dir: &Path, name: &str, args: &[&str]) -> Vec<u8> {
    let path = dir.join(name);
    let mut full: Vec<&str> = args.to_vec();
    let p = path.to_str().unwrap().to_owned();
    full.push("--out");
    full.push(&p);
    assert_eq!(code(&run(&full)), 0);
    fs::read(&path).unwrap()
}

#[test]
fn outputs_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [&[&str]; 4] = [
        &["dft", "--suite", "sin-p4", "--n", "8"],
        &[
            "spline",
            "--suite",
            "cos-p6",
            "--n",
            "8",
            "--eval-grid",
            "100",
        ],
        &["response", "--n", "16"],
        &[
            "bounds",
            "--suite",
            "harmonic-mixed",
            "--n",
            "8",
            "--kind",
            "refined",
        ],
    ];
    for (i, args) in cases.iter().enumerate() {
        let a = run_to(dir.path(), &format!("a{i}.out"), args);
        let b = run_to(dir.path(), &format!("b{i}.out"), args);
        assert_eq!(a, b, "{args:?}");
    }
    for sib in ["unfolded.csv", "eval.csv"] {
        assert_eq!(
            fs::read(dir.path().join(format!("a1.{sib}"))).unwrap(),
            fs::read(dir.path().join(format!("b1.{sib}"))).unwrap()
        );
    }
}
