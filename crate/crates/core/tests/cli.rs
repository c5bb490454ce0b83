use std::process::Command;

use serde_json::Value;
use twopar::cli::{run, EXIT_CONSTRUCTION, EXIT_NO_CERTIFICATE, EXIT_OK, EXIT_USAGE};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["twopar"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, out, _) = call(args);
    (code, serde_json::from_str(&out).unwrap_or(Value::Null))
}

#[test]
fn classify_command() {
    let (code, v) = json(&["classify", "2i"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["classical_ts"], "interior");
    assert_eq!(v["schema_version"], 1);
    let (_, v) = json(&["classify", "1/2-1/2i"]);
    assert_eq!(v["whitehead_point"], true);
    let (code, _, err) = call(&["classify", "0"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("nonzero"));
    let (code, _, _) = call(&["classify", "1/0"]);
    assert_eq!(code, EXIT_USAGE);
    let (_, v) = json(&["classify", "-i"]);
    assert_eq!(v["special_boundary_point"], "-i");
}

#[test]
fn certify_command() {
    let (code, v) = json(&["certify", "1/2-1/2i"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["kind"], "dust_and_nonfree");
    assert_eq!(v["verified"], true);
    let (code, v) = json(&["certify", "1/8"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["kind"], "nonfree");
    assert_eq!(v["target"]["family"], "1");
    let (code, out, _) = call(&["certify", "2i", "--format", "text"]);
    assert_eq!(code, EXIT_NO_CERTIFICATE);
    assert_eq!(out, "none\n");
}

#[test]
fn orbit_command() {
    let (code, v) = json(&["orbit", "1/2-1/2i", "--steps", "2"]);
    assert_eq!(code, EXIT_OK);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[1]["report"]["special_boundary_point"], "+i");
    assert_eq!(rows[2]["report"]["special_boundary_point"], "+2");
    let (_, out, err) = call(&["orbit", "0.3", "--program", "L2", "--format", "csv"]);
    assert!(err.contains("warning"));
    let last = out.lines().last().unwrap();
    assert!(last.starts_with("1,L2,0.6"), "{last}");
    assert!(last.contains(",false,"));
    let (_, v) = json(&["orbit", "3/7"]);
    assert_eq!(v["rows"].as_array().unwrap().len(), 1);
    assert_eq!(call(&["orbit", "1", "--program", "V L0"]).0, EXIT_USAGE);
}

#[test]
fn curves_command() {
    let (code, a, _) = call(&["curves", "--samples", "33"]);
    assert_eq!(code, EXIT_OK);
    let (_, b, _) = call(&["curves", "--samples", "33"]);
    assert_eq!(a, b);
    for id in ["jorgensen", "schottky", "nsdc", "ncf"] {
        assert!(a.contains(&format!("<g id=\"{id}\"")));
    }
    let (_, svg, _) = call(&["curves", "--layers", "schottky", "--preimage-depth", "2", "--samples", "33"]);
    assert_eq!(svg.matches("<g id=\"preimages_2\"").count(), 1);
    let (_, v) =
        json(&["curves", "--layers", "schottky", "--preimage-depth", "2", "--samples", "17", "--format", "json"]);
    let names: Vec<&str> = v["curves"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert_eq!(names.iter().filter(|n| n.starts_with("f^-2")).count(), 8);
    assert_eq!(call(&["curves", "--layers", ""]).0, EXIT_USAGE);
    assert_eq!(call(&["curves", "--layers", "nope"]).0, EXIT_USAGE);
    assert_eq!(call(&["curves", "--samples", "1"]).0, EXIT_USAGE);
}

#[test]
fn config_command() {
    let (code, v) = json(&["config", "--case", "classical_boundary", "--lambda", "i"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["verification"]["tangency_count"], 6);
    let (_, v) = json(&["config", "--case", "classical_boundary", "--lambda", "2"]);
    assert_eq!(v["verification"]["tangency_count"], 4);
    let (code, _, _) = call(&["config", "--case", "classical_interior", "--lambda", "0.3"]);
    assert_eq!(code, EXIT_CONSTRUCTION);
    let (code, v) = json(&["config", "--case", "ncf_interior", "--q", "3+0.8i"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["verification"]["ok"], true);
    let (code, svg, _) = call(&["config", "--case", "classical_interior", "--lambda", "2i", "--format", "svg"]);
    assert_eq!(code, EXIT_OK);
    assert!(svg.starts_with("<svg") && svg.contains("id=\"C1\""));
    assert_eq!(call(&["config", "--case", "bogus", "--lambda", "2i"]).0, EXIT_USAGE);
    assert_eq!(call(&["config", "--case", "classical_interior"]).0, EXIT_USAGE);
}

#[test]
fn catalog_command() {
    let (code, v) = json(&["catalog", "--family", "B"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["entries"].as_array().unwrap().len(), 18);
    let (_, out, _) = call(&["catalog", "--family", "pell", "--n-values", "2", "--count", "1", "--format", "text"]);
    assert_eq!(out, "3:N=2,k=1\t2/9\n");
    assert_eq!(call(&["catalog", "--family", "1", "--max", "0"]).0, EXIT_USAGE);
    assert_eq!(call(&["catalog", "--family", "zzz"]).0, EXIT_USAGE);
}

#[test]
fn config_file_and_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let conf = dir.path().join("run.conf");
    let out = dir.path().join("cert.json");
    std::fs::write(&conf, "# settings\nformat = text\nmax_depth = 3\ntarget.cusp = 1/3+1/3i\n").unwrap();
    let (code, text, _) = call(&["--config", conf.to_str().unwrap(), "certify", "2i"]);
    assert_eq!(code, EXIT_NO_CERTIFICATE);
    assert_eq!(text, "none\n");
    // flags override the file
    let (code, _, _) = call(&[
        "--config",
        conf.to_str().unwrap(),
        "--format",
        "json",
        "--out",
        out.to_str().unwrap(),
        "certify",
        "1/8",
    ]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["kind"], "nonfree");
    // registered external target
    let (code, v) = json(&["--config", conf.to_str().unwrap(), "--format", "json", "certify", "1/3+1/3i"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["target"]["name"], "cusp");
    std::fs::write(&conf, "samples = 1\n").unwrap();
    assert_eq!(call(&["--config", conf.to_str().unwrap(), "classify", "2i"]).0, EXIT_USAGE);
    std::fs::write(&conf, "colour = red\n").unwrap();
    assert_eq!(call(&["--config", conf.to_str().unwrap(), "classify", "2i"]).0, EXIT_USAGE);
    assert_eq!(call(&["--tolerance", "0", "classify", "2i"]).0, EXIT_USAGE);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_twopar");
    let st = Command::new(bin).args(["certify", "2i"]).output().unwrap();
    assert_eq!(st.status.code(), Some(EXIT_NO_CERTIFICATE));
    let st = Command::new(bin).args(["classify", "1/2-1/2i"]).output().unwrap();
    assert_eq!(st.status.code(), Some(EXIT_OK));
    let st = Command::new(bin).args(["frobnicate"]).output().unwrap();
    assert_eq!(st.status.code(), Some(EXIT_USAGE));
    let a = Command::new(bin).args(["classify", "3/7+1/9i"]).output().unwrap().stdout;
    let b = Command::new(bin).args(["classify", "3/7+1/9i"]).output().unwrap().stdout;
    assert_eq!(a, b);
}
