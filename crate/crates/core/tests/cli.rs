use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn diamlimit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diamlimit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn text(bytes: &[u8]) -> String {
    String::from_utf8(bytes.to_vec()).expect("utf-8 output")
}

fn write_config(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn constants_for_reference_ellipse() {
    let out = diamlimit(&["constants", "--a", "1", "--b", "0.5"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for quad in ["1", "2", "3", "4"] {
        let sigma = v[quad]["sigma"].as_f64().unwrap();
        assert!((sigma - 2.026_925_767_547_617_6).abs() < 1e-13);
        assert_eq!(v[quad]["q"].as_f64(), Some(1.0));
    }
}

#[test]
fn constants_from_raw_shape_constant() {
    let out = diamlimit(&[
        "constants",
        "--q",
        "1",
        "--p",
        "0.6366197723675814",
        "--a",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!((v["3"]["c"].as_f64().unwrap() - 0.544_331_053_951_817).abs() < 1e-14);

    let out = diamlimit(&["constants", "--q", "2", "--p", "1", "--a", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(text(&out.stderr).contains("q out of (0,2)"));
}

#[test]
fn validate_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let good = write_config(
        dir.path(),
        "good.json",
        r#"{"region": {"kind": "ellipse", "a": 1, "b": 0.5}}"#,
    );
    let out = diamlimit(&["validate", "--config", &good]);
    assert_eq!(out.status.code(), Some(0), "{}", text(&out.stdout));

    let circle = write_config(
        dir.path(),
        "circle.json",
        r#"{"region": {"kind": "ellipse", "a": 1, "b": 1}}"#,
    );
    let out = diamlimit(&["validate", "--config", &circle]);
    assert_eq!(out.status.code(), Some(1));
    assert!(text(&out.stdout).contains("A2: no unique major axis"));

    let quarter = write_config(
        dir.path(),
        "quarter.json",
        r#"{"region": {"kind": "quarter-ellipse", "a": 1, "b": [0.3, 0.6, 0.2, 0.8]}, "n": 500, "regime": "poissonized"}"#,
    );
    assert_eq!(
        diamlimit(&["validate", "--config", &quarter]).status.code(),
        Some(0)
    );

    let malformed = write_config(
        dir.path(),
        "bad.json",
        r#"{"region": {"kind": "ellipse", "a": 1"#,
    );
    assert_eq!(
        diamlimit(&["validate", "--config", &malformed])
            .status
            .code(),
        Some(2)
    );

    let missing = write_config(
        dir.path(),
        "missing.json",
        r#"{"region": {"kind": "ellipse", "a": 1}}"#,
    );
    assert_eq!(
        diamlimit(&["validate", "--config", &missing]).status.code(),
        Some(2)
    );

    let no_region = write_config(dir.path(), "none.json", r#"{"n": 10}"#);
    assert_eq!(
        diamlimit(&["validate", "--config", &no_region])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn simulate_writes_three_files() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("run");
    let out = diamlimit(&[
        "simulate",
        "--n",
        "300",
        "--reps",
        "50",
        "--seed",
        "5",
        "--out",
        out_dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", text(&out.stderr));

    let samples = text(&fs::read(out_dir.join("samples.csv")).unwrap());
    let mut lines = samples.lines();
    assert_eq!(lines.next(), Some("rep_index,kind,value"));
    assert_eq!(lines.count(), 100);
    assert!(!samples.contains('\r'));

    let ecdf = text(&fs::read(out_dir.join("ecdf.csv")).unwrap());
    assert_eq!(ecdf.lines().next(), Some("t,F_empirical,F_limit"));

    let summary: serde_json::Value =
        serde_json::from_slice(&fs::read(out_dir.join("summary.json")).unwrap()).unwrap();
    assert_eq!(summary["seed"].as_u64(), Some(5));
    assert_eq!(summary["config"]["n"].as_u64(), Some(300));
    assert_eq!(summary["dropped"].as_u64(), Some(0));
    let ks = summary["ks"].as_f64().unwrap();
    assert!((0.0..=1.0).contains(&ks));
    for side in ["empirical", "limit"] {
        let q = &summary["quantiles"][side];
        assert!(q["0.1"].as_f64() <= q["0.5"].as_f64() && q["0.5"].as_f64() <= q["0.9"].as_f64());
    }
}

#[test]
fn flags_override_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        dir.path(),
        "cfg.json",
        r#"{"region": {"kind": "ellipse", "a": 1, "b": 0.5}, "n": 200, "reps": 30, "seed": 9}"#,
    );
    let out_dir = dir.path().join("run");
    let out = diamlimit(&[
        "simulate",
        "--config",
        &cfg,
        "--reps",
        "12",
        "--out",
        out_dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", text(&out.stderr));
    let summary: serde_json::Value =
        serde_json::from_slice(&fs::read(out_dir.join("summary.json")).unwrap()).unwrap();
    assert_eq!(summary["config"]["reps"].as_u64(), Some(12));
    assert_eq!(summary["config"]["n"].as_u64(), Some(200));
    assert_eq!(summary["seed"].as_u64(), Some(9));
}

#[test]
fn unwritable_output_is_an_io_error() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("file");
    fs::write(&blocker, "x").unwrap();
    let target = blocker.join("sub");
    let out = diamlimit(&[
        "simulate",
        "--n",
        "50",
        "--reps",
        "2",
        "--out",
        target.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn limit_csv_and_coupling() {
    let run = |m: &str| {
        let out = diamlimit(&[
            "limit", "--m", m, "--reps", "200", "--seed", "3", "--couple",
        ]);
        assert_eq!(out.status.code(), Some(0));
        text(&out.stdout)
    };
    let (m4, m8) = (run("4"), run("8"));
    assert_eq!(m4.lines().next(), Some("rep_index,value"));
    assert_eq!(m4.lines().count(), 201);
    let values = |s: &str| -> Vec<f64> {
        s.lines()
            .skip(1)
            .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
            .collect()
    };
    for (a, b) in values(&m4).iter().zip(values(&m8)) {
        assert!(b <= *a);
    }
}

#[test]
fn compare_prints_json() {
    let out = diamlimit(&["compare", "--n", "200", "--reps", "100", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["ks"].as_f64().is_some());
    assert!(v["poissonized"]["dropped"].as_u64().is_some());
}

#[test]
fn bad_input_exit_codes() {
    assert_eq!(
        diamlimit(&["simulate", "--n", "1", "--reps", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(diamlimit(&["limit", "--m", "0"]).status.code(), Some(2));
    assert_eq!(diamlimit(&["nonsense"]).status.code(), Some(2));
    let out = diamlimit(&["limit", "--a", "1", "--b", "1", "--reps", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(text(&out.stderr).contains("A2"));
    assert_eq!(diamlimit(&["--help"]).status.code(), Some(0));
}
