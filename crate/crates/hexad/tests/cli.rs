use std::fs;
use std::process::{Command, Output};

use tempfile::TempDir;

fn hexad(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hexad")).args(args).output().unwrap()
}

fn hexad_env(args: &[&str], dir: &TempDir) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hexad"))
        .args(args)
        .env("HEXAD_CATALOG_DIR", dir.path())
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn verify_circle_passes() {
    let o = hexad(&["verify", "--complex", "circle", "--degree", "1", "--seed", "42", "--trials", "100", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["complex"], "circle");
    assert_eq!(v["degree"], 1);
    assert_eq!(v["seed"], 42);
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 12);
    assert!(checks.iter().all(|c| c["status"] == "PASS"));
}

#[test]
fn missing_face_exits_two_naming_the_simplex() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("bad.cplx");
    fs::write(&path, "name bad\nvertices 2\nfacet 0 1 2\n").unwrap();
    let o = hexad(&["verify", "--complex", path.to_str().unwrap(), "--degree", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("missing face (2) of simplex (0 2)"), "{err}");
}

#[test]
fn parse_errors_carry_line_and_column() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("typo.cplx");
    fs::write(&path, "name typo\nvertices 3\nfacet 0 1\nfacett 1 2\n").unwrap();
    let o = hexad(&["compute", "--complex", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 4, column 1: unknown keyword `facett`"), "{}", stderr(&o));
}

#[test]
fn bad_arguments_exit_two() {
    assert_eq!(hexad(&["verify", "--complex", "no-such-thing"]).status.code(), Some(2));
    assert_eq!(hexad(&["verify", "--complex", "circle", "--degree", "3"]).status.code(), Some(2));
    assert_eq!(hexad(&["verify", "--complex", "circle", "--trials", "0"]).status.code(), Some(2));
    assert_eq!(hexad(&["verify", "--complex", "circle", "--format", "yaml"]).status.code(), Some(2));
}

#[test]
fn compute_projective_plane() {
    let o = hexad(&["compute", "--complex", "projective-plane", "--degree", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["cohomology"][2]["cohomology_z"], "Z/2");
    assert_eq!(v["cohomology"][1]["cohomology_q_mod_z"], "Z/2");
    assert_eq!(v["degrees"][0]["off_diagonal"]["status"], "NOT-EXACT-CONFIRMED");

    let o = hexad(&["compute", "--complex", "point", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["degrees"][0]["off_diagonal"]["status"], "NO-COUNTEREXAMPLE-AT-THIS-DEGREE");
}

#[test]
fn report_file_and_several_degrees() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("r.json");
    let o = hexad(&["verify", "--complex", "sphere", "--trials", "3", "--report", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    let degrees: Vec<i64> = v.as_array().unwrap().iter().map(|r| r["degree"].as_i64().unwrap()).collect();
    assert_eq!(degrees, [1, 2, 3]);
}

#[test]
fn user_catalog_directory() {
    let dir = TempDir::new().unwrap();
    fs::write(dir.path().join("square.cplx"), "name square\nvertices 4\nfacet 0 1\nfacet 1 2\nfacet 2 3\nfacet 0 3\n").unwrap();
    let o = hexad_env(&["catalog"], &dir);
    assert!(stdout(&o).contains("square"));
    let o = hexad_env(&["verify", "--complex", "square", "--degree", "1", "--trials", "3", "--format", "text"], &dir);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("PASS faces"));
}

#[test]
fn witness_round_trip() {
    let dir = TempDir::new().unwrap();
    let form = dir.path().join("w.form");
    fs::write(&form, "whitney-form\ndegree 1\nring Q\nvalue (0 1) 1/2\nvalue (1 2) 1/2\n").unwrap();
    let o = hexad(&["witness", "--complex", "circle", "--degree", "1", "--format", "text", form.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    let body = &text[text.find("level").unwrap()..];
    let x = dir.path().join("x.diff");
    fs::write(&x, body).unwrap();
    let o = hexad(&["witness", "--complex", "circle", "--degree", "1", "--format", "json", x.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["kind"], "character summary");

    let third = dir.path().join("third.form");
    fs::write(&third, "whitney-form\ndegree 1\nring Q\nvalue (0 1) 1/3\n").unwrap();
    let o = hexad(&["witness", "--complex", "circle", "--degree", "1", third.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("non-integral period"));
}
