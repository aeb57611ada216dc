use std::path::Path;
use std::process::{Command, Output};

fn e0graph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_e0graph")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = e0graph(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn valency_matches_published_rows() {
    assert_eq!(stdout(&["valency", "A3"]).trim(), "0^1.1^3.2^1.3^1.4^3");
    assert_eq!(stdout(&["valency", "--group", "H3"]).trim(), "0^1.1^3.2^4.3^5.4^4.5^5.7^2.8^2.9^2.15^3");
    assert_eq!(stdout(&["-g", "I2(6)", "valency"]).trim(), "0^1.1^2.2^2.3^2");
}

#[test]
fn valency_formats() {
    assert_eq!(stdout(&["valency", "I2(5)", "--format", "csv"]), "valency,count\n0,1\n1,2\n2,2\n");
    let json: serde_json::Value = serde_json::from_str(&stdout(&["valency", "A2", "--format", "json"])).unwrap();
    assert_eq!(json, serde_json::json!([[0, 1], [1, 2]]));
}

#[test]
fn export_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = |name: &str| dir.path().join(name).to_string_lossy().into_owned();

    let json_path = path("a2.json");
    stdout(&["export", "A2", "--format", "json", "--out", &json_path]);
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    assert_eq!(json["group"], "A2");
    assert_eq!(json["vertices"].as_array().unwrap().len(), 3);
    assert_eq!(json["edges"], serde_json::json!([[0, 1]]));

    let dot_path = path("a3.dot");
    stdout(&["export", "A3", "--format", "dot", "--out", &dot_path]);
    let dot = std::fs::read_to_string(&dot_path).unwrap();
    assert!(dot.starts_with("graph \"A3\""));
    assert_eq!(dot.matches(" -- ").count(), 10);

    let csv_path = path("i25.csv");
    stdout(&["export", "I2(5)", "--format", "csv", "--out", &csv_path]);
    assert_eq!(std::fs::read_to_string(&csv_path).unwrap(), "valency,count\n0,1\n1,2\n2,2\n");
}

#[test]
fn diameter_and_pendants() {
    assert!(stdout(&["diameter", "A4"]).contains("diameter 3"));
    assert!(stdout(&["pendant", "D5"]).contains("match true"));
}

#[test]
fn excess_of_involution_is_zero() {
    assert_eq!(stdout(&["excess", "[1,2,1]", "A3"]).trim(), "0");
    assert_eq!(stdout(&["excess", "[1,2]", "A2"]).trim(), "0");
}

#[test]
fn delta_with_oracle() {
    let text = stdout(&["delta", "2", "6", "--oracle"]);
    assert!(text.contains("match true"), "{text}");
    assert!(!e0graph(&["delta", "3", "5"]).status.success());
}

#[test]
fn ball_reports_diameter_two_for_universal_rank_three() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("u3.json");
    let text = stdout(&["ball", "U3", "--radius", "3", "--graph", graph.to_str().unwrap()]);
    let json: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(json["verdict"], "two");
    assert!(Path::new(&graph).exists());
}

#[test]
fn infinite_group_needs_ball() {
    let out = e0graph(&["valency", "U3"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("ball"));
}

#[test]
fn custom_matrix_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a2.json");
    std::fs::write(&path, r#"{"rank":2,"m":[[1,3],[3,1]]}"#).unwrap();
    assert_eq!(stdout(&["valency", path.to_str().unwrap()]).trim(), "0^1.1^2");
}

#[test]
fn dn_cosets_are_classified() {
    let text = stdout(&["cosets", "D4"]);
    assert_eq!(text.lines().count(), 8);
    assert!(text.contains("(Long)"));
}

#[test]
fn verify_exit_codes() {
    let out = e0graph(&["verify", "table1"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("table1: pass"));
    assert!(!e0graph(&["verify", "no-such-check"]).status.success());
}
