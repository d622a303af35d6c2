use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn trexp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trexp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json_stdout(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write_matrix(dir: &Path, name: &str, a11: f64, a22: f64, re: f64, im: f64) -> PathBuf {
    let path = dir.join(name);
    fs::write(
        &path,
        format!(r#"{{"a11": {a11}, "a22": {a22}, "a12": [{re}, {im}]}}"#),
    )
    .unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * b.abs().max(1.0)
}

#[test]
fn reduce_diagonal_and_tau() {
    let dir = TempDir::new().unwrap();
    let a = write_matrix(dir.path(), "a.json", 2.0, 0.0, 0.0, 0.0);
    let b = write_matrix(dir.path(), "b.json", 0.0, 0.0, 1.0, 0.0);
    let out = trexp(&["reduce", "--matrix-a", s(&a), "--matrix-b", s(&b)]);
    assert_eq!(code(&out), 0);
    let v = json_stdout(&out);
    assert!(close(v["alpha"].as_f64().unwrap(), 1.0, 1e-14));
    assert!(close(v["beta"].as_f64().unwrap(), 1.0, 1e-14));
    assert_eq!(v["t0"].as_f64().unwrap(), 0.0);
    assert_eq!(v["degenerate"], false);
    assert!(v["checks"][0]["measured"].as_f64().unwrap() < 1e-10);
    assert_eq!(v["U"].as_array().unwrap().len(), 2);
}

#[test]
fn reduce_degenerate_pair_to_file() {
    let dir = TempDir::new().unwrap();
    let a = write_matrix(dir.path(), "a.json", 1.0, 1.0, 0.0, 0.0);
    let b = write_matrix(dir.path(), "b.json", 0.0, 0.0, 0.0, 0.0);
    let target = dir.path().join("dec.json");
    let out = trexp(&[
        "reduce",
        "--matrix-a",
        s(&a),
        "--matrix-b",
        s(&b),
        "--json",
        s(&target),
    ]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&fs::read_to_string(&target).unwrap()).unwrap();
    assert_eq!(v["degenerate"], true);
    assert_eq!(v["alpha"].as_f64().unwrap(), 0.0);
    assert_eq!(v["beta"].as_f64().unwrap(), 0.0);
    // f(t) = 2 e^t on this path
    assert_eq!(v["lambda"].as_f64().unwrap(), 1.0);
    assert_eq!(v["c"].as_f64().unwrap(), 1.0);
}

#[test]
fn reduce_reports_malformed_field() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, r#"{"a11": 1, "a22": 0}"#).unwrap();
    let b = write_matrix(dir.path(), "b.json", 0.0, 0.0, 1.0, 0.0);
    let out = trexp(&["reduce", "--matrix-a", s(&bad), "--matrix-b", s(&b)]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("a12"));

    fs::write(&bad, r#"{"a11": 1, "a22": "x", "a12": [0, 0]}"#).unwrap();
    let out = trexp(&["reduce", "--matrix-a", s(&bad), "--matrix-b", s(&b)]);
    assert_eq!(code(&out), 2);

    let missing = dir.path().join("missing.json");
    let out = trexp(&["reduce", "--matrix-a", s(&missing), "--matrix-b", s(&b)]);
    assert_eq!(code(&out), 2);
}

#[test]
fn measure_approx_small_n() {
    let out = trexp(&["measure", "approx", "--n", "4", "--beta", "1"]);
    assert_eq!(code(&out), 0);
    let v = json_stdout(&out);
    let atoms = v["atoms"].as_array().unwrap();
    let table: Vec<(f64, f64)> = atoms
        .iter()
        .map(|a| (a["mu"].as_f64().unwrap(), a["weight"].as_f64().unwrap()))
        .collect();
    assert_eq!(
        table,
        vec![
            (-0.5, 0.0625),
            (0.0, 33.0 / 256.0),
            (0.5, 0.1875),
            (1.0, 1.0)
        ]
    );
    assert_eq!(v["mass"].as_f64().unwrap(), 1.37890625);
    assert_eq!(v["checks"][0]["pass"], true);
}

#[test]
fn measure_approx_beta_zero_is_point_mass() {
    let out = trexp(&["measure", "approx", "--n", "100", "--beta", "0"]);
    assert_eq!(code(&out), 0);
    let v = json_stdout(&out);
    let atoms = v["atoms"].as_array().unwrap();
    assert_eq!(atoms.len(), 1);
    assert_eq!(atoms[0]["mu"].as_f64().unwrap(), 1.0);
    assert_eq!(atoms[0]["weight"].as_f64().unwrap(), 1.0);
}

#[test]
fn measure_rejects_bad_parameters() {
    assert_eq!(
        code(&trexp(&["measure", "approx", "--n", "1", "--beta", "1"])),
        3
    );
    assert_eq!(
        code(&trexp(&["measure", "approx", "--n", "8", "--beta", "-1"])),
        3
    );
    assert_eq!(code(&trexp(&["measure", "exact", "--beta", "200"])), 3);
    assert_eq!(
        code(&trexp(&[
            "measure",
            "exact",
            "--beta",
            "1",
            "--grid-points",
            "1"
        ])),
        3
    );
    assert_eq!(
        code(&trexp(&["measure", "approx", "--n", "four", "--beta", "1"])),
        2
    );
}

#[test]
fn measure_exact_mass_and_csv() {
    let dir = TempDir::new().unwrap();
    let csv = dir.path().join("density.csv");
    let out = trexp(&["measure", "exact", "--beta", "1", "--csv", s(&csv)]);
    assert_eq!(code(&out), 0);
    let v = json_stdout(&out);
    assert_eq!(v["type"], "hybrid");
    assert!((v["mass"].as_f64().unwrap() - 1f64.cosh()).abs() <= 1e-9);
    assert_eq!(v["density_grid"].as_array().unwrap().len(), 1001);
    let text = fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "mu,density");
    assert_eq!(lines.len(), 1002);
    assert_eq!(lines[1], "-1,0");
    assert_eq!(lines[1001], "1,0.5");
    assert!(!text.contains('\r'));
}

#[test]
fn measure_approx_csv() {
    let dir = TempDir::new().unwrap();
    let csv = dir.path().join("atoms.csv");
    let out = trexp(&[
        "measure",
        "approx",
        "--n",
        "4",
        "--beta",
        "1",
        "--csv",
        s(&csv),
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        fs::read_to_string(&csv).unwrap(),
        "s,mu,weight\n3,-0.5,0.0625\n2,0,0.12890625\n1,0.5,0.1875\n0,1,1\n"
    );
}

#[test]
fn verify_convergence_first_order() {
    let out = trexp(&[
        "verify",
        "convergence",
        "--alpha",
        "1",
        "--beta",
        "1",
        "--t",
        "1",
        "--n-list",
        "64,128,256",
    ]);
    assert_eq!(code(&out), 0);
    let v = json_stdout(&out);
    assert_eq!(v["command"], "verify convergence");
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 2);
    for c in checks {
        let r = c["measured"].as_f64().unwrap();
        assert!((1.7..=2.3).contains(&r));
        assert_eq!(c["pass"], true);
    }
    assert_eq!(v["outputs"]["table"].as_array().unwrap().len(), 3);
}

#[test]
fn verify_convergence_fails_without_decay() {
    // beta = 0 makes every product exact, so no first-order decay is visible
    let out = trexp(&[
        "verify",
        "convergence",
        "--alpha",
        "1",
        "--beta",
        "0",
        "--t",
        "1",
        "--n-list",
        "64,128",
    ]);
    assert_eq!(code(&out), 5);
    assert_eq!(json_stdout(&out)["checks"][0]["pass"], false);
}

#[test]
fn verify_convergence_needs_doubling_list() {
    let out = trexp(&[
        "verify",
        "convergence",
        "--alpha",
        "1",
        "--beta",
        "1",
        "--t",
        "1",
        "--n-list",
        "64,100",
    ]);
    assert_eq!(code(&out), 3);
}

#[test]
fn verify_representation_negative_range() {
    let dir = TempDir::new().unwrap();
    let report = dir.path().join("report.json");
    let out = trexp(&[
        "verify",
        "representation",
        "--beta",
        "1",
        "--t-range",
        "-5:5:21",
        "--report",
        s(&report),
    ]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    for c in v["checks"].as_array().unwrap() {
        assert!(c["measured"].as_f64().unwrap() < 1e-8);
    }
    assert_eq!(v["outputs"]["table"].as_array().unwrap().len(), 21);
    assert_eq!(v["parameters"]["t_range"], "-5:5:21");
}

#[test]
fn verify_representation_rejects_bad_range() {
    let out = trexp(&[
        "verify",
        "representation",
        "--beta",
        "1",
        "--t-range",
        "5:-5:3",
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_convexity_canonical_pair() {
    let dir = TempDir::new().unwrap();
    let a = write_matrix(dir.path(), "sigma.json", 1.0, -1.0, 0.0, 0.0);
    let b = write_matrix(dir.path(), "tau.json", 0.0, 0.0, 1.0, 0.0);
    let args = [
        "verify",
        "convexity",
        "--matrix-a",
        s(&a),
        "--matrix-b",
        s(&b),
        "--grids",
        "20",
        "--seed",
        "42",
    ];
    let out = trexp(&args);
    assert_eq!(code(&out), 0);
    let v = json_stdout(&out);
    assert_eq!(v["outputs"]["verdict"], "certified-psd");
    assert_eq!(v["outputs"]["grids"].as_array().unwrap().len(), 20);
    assert_eq!(trexp(&args).stdout, out.stdout);

    let other = trexp(&[
        "verify",
        "convexity",
        "--matrix-a",
        s(&a),
        "--matrix-b",
        s(&b),
        "--seed",
        "7",
    ]);
    assert_eq!(code(&other), 0);
    assert_ne!(other.stdout, out.stdout);
}

#[test]
fn sample_csv_format() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("s.csv");
    let out = trexp(&[
        "sample",
        "--alpha",
        "1",
        "--beta",
        "1",
        "--t-range",
        "-1:1:3",
        "--out",
        s(&path),
    ]);
    assert_eq!(code(&out), 0);
    let text = fs::read_to_string(&path).unwrap();
    assert_eq!(
        text,
        "t,f,e1,e2\n\
         -1,4.35636711322,0.8098846846,3.54648242862\n\
         0,3.08616126963,1.54308063482,1.54308063482\n\
         1,4.35636711322,3.54648242862,0.8098846846\n"
    );
}

#[test]
fn sample_beta_zero_is_two_cosh() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("s.csv");
    let out = trexp(&[
        "sample",
        "--alpha",
        "1",
        "--beta",
        "0",
        "--t-range",
        "-3:3:13",
        "--out",
        s(&path),
    ]);
    assert_eq!(code(&out), 0);
    let text = fs::read_to_string(&path).unwrap();
    for line in text.lines().skip(1) {
        let cols: Vec<f64> = line.split(',').map(|c| c.parse().unwrap()).collect();
        assert!(close(cols[1], 2.0 * cols[0].cosh(), 1e-11), "{line}");
        assert!(close(cols[2], cols[0].exp(), 1e-11), "{line}");
        assert!(close(cols[3], (-cols[0]).exp(), 1e-11), "{line}");
    }
}

#[test]
fn sample_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let p1 = dir.path().join("1.csv");
    let p2 = dir.path().join("2.csv");
    for p in [&p1, &p2] {
        let out = trexp(&[
            "sample",
            "--alpha",
            "0.7",
            "--beta",
            "2.5",
            "--t-range",
            "-4:4:101",
            "--out",
            s(p),
        ]);
        assert_eq!(code(&out), 0);
    }
    assert_eq!(fs::read(&p1).unwrap(), fs::read(&p2).unwrap());
}

#[test]
fn sample_unwritable_path() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("no/such/dir/s.csv");
    let out = trexp(&[
        "sample",
        "--alpha",
        "1",
        "--beta",
        "1",
        "--t-range",
        "0:1:2",
        "--out",
        s(&path),
    ]);
    assert_eq!(code(&out), 2);
}
