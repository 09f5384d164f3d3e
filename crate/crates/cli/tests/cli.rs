use std::process::{Command, Output};

fn foliations(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_foliations"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn legendrian_degree_two() {
    let o = foliations(&["legendrian", "--degree", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("degree 2224\n"));
}

#[test]
fn pencil_degree_two() {
    let o = foliations(&["pencil", "--degree", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["family"], "pencil");
    assert_eq!(v["degree"], "825");
}

#[test]
fn colliding_pair_sums_exit_two() {
    let o = foliations(&["legendrian", "--degree", "2", "--weights", "0,1,2,3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn degree_below_two_exits_one() {
    let o = foliations(&["legendrian", "--degree", "1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_passes_on_embedded_constants() {
    let o = foliations(&["verify"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 4);
    assert!(out.contains("PASS fiber-e5: 105534"));
}

#[test]
fn verify_names_a_tampered_constant() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("reference.toml");
    let text = foliation_reference().replace("total = \"2224\"", "total = \"2223\"");
    std::fs::write(&path, text).unwrap();
    let o = foliations(&["verify", "--reference", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL total: expected 2223, got 2224"));
}

fn foliation_reference() -> String {
    std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../core/data/reference.toml")).unwrap()
}

#[test]
fn verify_example() {
    let o = foliations(&["verify", "--example"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "PASS contact-example: 0\n");
}

#[test]
fn interpolate_pencil_matches() {
    let o = foliations(&["interpolate", "--family", "pencil", "--min", "2", "--max", "14"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("matches closed form\n"));
}

#[test]
fn interpolate_legendrian_partial() {
    let o = foliations(&[
        "interpolate",
        "--family",
        "legendrian",
        "--min",
        "2",
        "--max",
        "8",
        "--partial",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["mode"], "pointwise");
    assert_eq!(v["points"].as_array().unwrap().len(), 7);
    assert_eq!(v["matches"], true);
    assert!(v.get("polynomial").is_none());
}

#[test]
fn interpolate_legendrian_full() {
    let o = foliations(&[
        "interpolate",
        "--family",
        "legendrian",
        "--min",
        "2",
        "--max",
        "17",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let coeffs = v["polynomial"].as_array().unwrap();
    assert_eq!(coeffs.len(), 16);
    assert_eq!(coeffs[15], "1/933120");
    assert_eq!(v["matches"], true);
}

#[test]
fn interpolate_with_too_few_points_fails() {
    let o = foliations(&["interpolate", "--family", "legendrian", "--min", "2", "--max", "9"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn json_out_file_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let args = [
        "legendrian",
        "--degree",
        "3",
        "--method",
        "both",
        "--out",
        path.to_str().unwrap(),
    ];
    let a = foliations(&args);
    let b = foliations(&["legendrian", "--degree", "3", "--jobs", "1"]);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["degree"], "83520");
    assert_eq!(v["contributions"].as_array().unwrap().len(), 6);
}

#[test]
fn fiber_and_basis_commands() {
    let o = foliations(&["fiber", "--degree", "2", "--pair", "3,4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["weights"].as_array().unwrap().len(), 20);

    let o = foliations(&["basis", "--degree", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 36);

    let o = foliations(&["fiber", "--degree", "2", "--pair", "3,3"]);
    assert_eq!(o.status.code(), Some(1));
}
