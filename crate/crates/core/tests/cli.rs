use std::path::PathBuf;
use std::process::{Command, Output};

fn argand(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_argand")).args(args).output().expect("binary runs")
}

fn golden(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(p).expect("golden file present")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn analyze_cnot_matches_golden() {
    let a = argand(&["analyze", "--gate", "CNOT"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(String::from_utf8(a.stdout.clone()).unwrap(), golden("analyze_cnot.json"));
    let b = argand(&["analyze", "--gate", "CNOT"]);
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["measures"]["e_p"], 0.222222222222222);
    assert_eq!(v["measures"]["g_t"], 0.666666666666667);
    assert_eq!(v["measures"]["L"], 0.5);
    assert_eq!(v["pairs"].as_array().unwrap().len(), 4);
}

#[test]
fn sweep_matches_golden() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("sweep.csv");
    let r = argand(&["sweep", "--step", "0.125", "--pi-units", "--out", out.to_str().unwrap()]);
    assert_eq!(r.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&out).unwrap(), golden("sweep_pi8.csv"));
    // the same step in radians
    let r = argand(&["sweep", "--step", &(std::f64::consts::PI / 8.0).to_string()]);
    assert_eq!(String::from_utf8(r.stdout).unwrap(), golden("sweep_pi8.csv"));
}

#[test]
fn argand_cnot_matches_golden() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("cnot.svg");
    let r = argand(&["argand", "--gate", "CNOT", "--out", out.to_str().unwrap()]);
    assert_eq!(r.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&out).unwrap(), golden("argand_cnot.svg"));
}

#[test]
fn analyze_identity_and_swap() {
    let v = json(&argand(&["analyze", "--coords", "0,0,0"]));
    assert_eq!(v["region"]["kind"], "NonPE");
    for m in ["e_p", "g_t", "L"] {
        assert_eq!(v["measures"][m], 0.0);
    }
    let v = json(&argand(&["analyze", "--coords", "0.5,0.5,0.5", "--pi-units"]));
    assert_eq!(v["coordinates"]["pi_units"], serde_json::json!([0.5, 0.5, 0.5]));
    assert_eq!(v["measures"]["g_t"], 2.0);
    assert_eq!(v["measures"]["L"], 0.75);
    assert!(v["measures"]["e_p"].as_f64().unwrap().abs() < 1e-15);
}

#[test]
fn states_commands() {
    let v = json(&argand(&["states", "--gate", "SQRT_SWAP"]));
    assert_eq!(v["pairs"].as_array().unwrap().len(), 3);
    assert_eq!(v["all_pass"], true);

    let r = argand(&["states", "--gate", "SWAP"]);
    assert_eq!(r.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&r.stderr).contains("not a perfect entangler"));

    let v = json(&argand(&["states", "--coords", "0.375,0.25,0", "--pi-units"]));
    let pairs = v["pairs"].as_array().unwrap();
    assert_eq!(pairs.len(), 1);
    assert_eq!(pairs[0]["orthogonal"], true);
    assert_eq!(pairs[0]["simplices"], serde_json::json!([[3, 1, 2], [3, 4, 2]]));
}

#[test]
fn argand_shapes() {
    let s = String::from_utf8(argand(&["argand", "--gate", "I"]).stdout).unwrap();
    assert!(s.contains(">z1,z2,z3,z4<"));
    // only the two axes
    assert_eq!(s.matches("<line").count(), 2);
    let s = String::from_utf8(
        argand(&[
            "argand",
            "--coords",
            "0.3333333333333333,0.3333333333333333,0.16666666666666666",
            "--pi-units",
        ])
        .stdout,
    )
    .unwrap();
    assert!(s.starts_with("<svg") && s.ends_with("</svg>\n"));
    assert!(s.contains(">z1,z4<"));
}

#[test]
fn verify_commands() {
    let v = json(&argand(&["verify", "--gate", "CNOT", "--samples", "100000", "--seed", "7"]));
    assert_eq!(v["pass"], true);
    let mc = v["e_p"]["monte_carlo"]["mean"].as_f64().unwrap();
    assert!((mc - 2.0 / 9.0).abs() < 0.005);

    let v = json(&argand(&["verify", "--gate", "I", "--samples", "1000"]));
    assert_eq!(v["e_p"]["monte_carlo"]["mean"], 0.0);
    assert_eq!(v["e_p"]["chords"], 0.0);

    let v = json(&argand(&["verify", "--gate", "SQRT_SWAP", "--samples", "20000"]));
    assert_eq!(v["pass"], true);
    assert!((v["e_p"]["chords"].as_f64().unwrap() - 1.0 / 6.0).abs() < 1e-12);
}

#[test]
fn matrix_files() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("cnot.json");
    let row = |r: [i32; 4]| r.map(|x| format!("[{x},0]")).join(",");
    let body = format!(
        r#"{{"matrix": [[{}],[{}],[{}],[{}]]}}"#,
        row([1, 0, 0, 0]),
        row([0, 1, 0, 0]),
        row([0, 0, 0, 1]),
        row([0, 0, 1, 0])
    );
    std::fs::write(&good, &body).unwrap();
    let v = json(&argand(&["analyze", "--matrix", good.to_str().unwrap()]));
    assert_eq!(v["region"]["label"], "Special:CNOT");

    let bad = dir.path().join("scaled.json");
    std::fs::write(&bad, body.replace("[1,0]", "[2,0]")).unwrap();
    assert_eq!(argand(&["analyze", "--matrix", bad.to_str().unwrap()]).status.code(), Some(3));

    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, "{\"matrix\": [").unwrap();
    assert_eq!(argand(&["analyze", "--matrix", broken.to_str().unwrap()]).status.code(), Some(2));

    let missing = dir.path().join("missing.json");
    assert_eq!(argand(&["analyze", "--matrix", missing.to_str().unwrap()]).status.code(), Some(5));
}

#[test]
fn usage_errors() {
    assert_eq!(argand(&["sweep", "--step", "0"]).status.code(), Some(2));
    assert_eq!(argand(&["analyze"]).status.code(), Some(2));
    assert_eq!(argand(&["analyze", "--gate", "TOFFOLI"]).status.code(), Some(2));
    assert_eq!(argand(&["analyze", "--gate", "CNOT", "--coords", "1,1,1"]).status.code(), Some(2));
    assert_eq!(argand(&["analyze", "--coords", "1,2"]).status.code(), Some(2));
    assert_eq!(argand(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn unwritable_output() {
    let r = argand(&["argand", "--gate", "CNOT", "--out", "/nonexistent-dir/x.svg"]);
    assert_eq!(r.status.code(), Some(5));
}
