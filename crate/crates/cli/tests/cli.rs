use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use brt_cli::format::{to_canonical_json, ComplexFile, MorphismFile};
use serde_json::Value;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn scratch(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn brt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_brt")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn validate_accepts_the_example() {
    let o = brt(&["validate", path(&data("ex4.mmor"))]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v.is_object());
}

#[test]
fn non_homogeneous_entry_is_an_input_error() {
    let o = brt(&["validate", path(&data("broken.mmor"))]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not homogeneous"));
}

#[test]
fn missing_file_and_bad_usage_exit_2() {
    assert_eq!(brt(&["taylor", "/nonexistent/file.mmor"]).status.code(), Some(2));
    assert_eq!(brt(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn zero_column_fails_validation() {
    let file = scratch("zero_column.mmor");
    std::fs::write(
        &file,
        r#"{"field": "Q", "n": 1, "source_degrees": [[1], [2]], "target_degrees": [[0]],
            "entries": [{"row": 1, "col": 1, "coeff": "1"}]}"#,
    )
    .unwrap();
    assert_eq!(brt(&["validate", path(&file)]).status.code(), Some(1));
}

#[test]
fn unknown_fields_are_rejected() {
    let file = scratch("unknown_field.mmor");
    std::fs::write(&file, r#"{"field": "Q", "n": 1, "source_degrees": [], "target_degrees": [], "entries": [], "extra": 1}"#).unwrap();
    assert_eq!(brt(&["validate", path(&file)]).status.code(), Some(2));
}

#[test]
fn morphism_file_round_trip_is_byte_identical() {
    let text = std::fs::read_to_string(data("phi_prime.mmor")).unwrap();
    let file = MorphismFile::parse(&text).unwrap();
    let once = to_canonical_json(&MorphismFile::from_morphism(&file.to_morphism().unwrap()));
    let twice = to_canonical_json(&MorphismFile::from_morphism(&MorphismFile::parse(&once).unwrap().to_morphism().unwrap()));
    assert_eq!(once, twice);
}

#[test]
fn complex_file_round_trip_through_minimize_and_out() {
    let taylor = scratch("taylor.json");
    let o = brt(&["taylor", path(&data("ex4.mmor")), "--out", path(&taylor)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&taylor).unwrap();
    let file = ComplexFile::parse(&text).unwrap();
    let x = file.to_complex().unwrap();
    assert_eq!(to_canonical_json(&ComplexFile::from_complex(&x, &file.vars)), text);

    let o = brt(&["minimize", path(&taylor)]);
    assert_eq!(o.status.code(), Some(0));
    let min = ComplexFile::parse(&stdout(&o)).unwrap().to_complex().unwrap();
    assert_eq!(min.ranks(), vec![2, 4, 2]);
}

#[test]
fn verify_exit_codes() {
    let ex4 = data("ex4.mmor");
    assert_eq!(brt(&["verify", path(&ex4)]).status.code(), Some(0));
    assert_eq!(brt(&["verify", path(&ex4), "--minimal"]).status.code(), Some(1));
    let o = brt(&["verify", path(&ex4), "--complex", "scarf", "--minimal", "--output", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("exact: true, minimal: true"));
}

#[test]
fn verify_reports_a_non_exact_taylor_complex() {
    let file = scratch("rank_drop.mmor");
    std::fs::write(
        &file,
        r#"{"field": "Q", "n": 3, "source_degrees": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
            "target_degrees": [[0, 0, 0], [0, 0, 0]],
            "entries": [{"row": 1, "col": 1, "coeff": "1"}, {"row": 1, "col": 2, "coeff": "2"},
                        {"row": 2, "col": 1, "coeff": "1"}, {"row": 2, "col": 2, "coeff": "2"},
                        {"row": 2, "col": 3, "coeff": "1"}]}"#,
    )
    .unwrap();
    let o = brt(&["verify", path(&file)]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["exact"], Value::Bool(false));
}

#[test]
fn relabel_produces_the_target_resolution() {
    let scarf = scratch("scarf.json");
    assert_eq!(brt(&["scarf", path(&data("ex4.mmor")), "--out", path(&scarf)]).status.code(), Some(0));
    let o = brt(&[
        "relabel",
        path(&data("ex4_to_phi_prime.json")),
        path(&scarf),
        path(&data("phi_prime.mmor")),
        "--output",
        "text",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("[   w     0 ]\n[ -2u  -3uw ]\n[   v   2vw ]\n[   0    uv ]\n"), "{}", stdout(&o));
}

#[test]
fn relabel_with_an_incomplete_map_is_a_negative_result() {
    let scarf = scratch("scarf_for_bad_map.json");
    assert_eq!(brt(&["scarf", path(&data("ex4.mmor")), "--out", path(&scarf)]).status.code(), Some(0));
    let map = scratch("partial_map.json");
    std::fs::write(&map, r#"[{"from": [3, 0], "to": [2, 1, 0]}]"#).unwrap();
    let o = brt(&["relabel", path(&map), path(&scarf), path(&data("phi_prime.mmor"))]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn text_rendering_of_taylor() {
    let o = brt(&["taylor", path(&data("ex4.mmor")), "--output", "text"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("ranks: [2, 4, 4, 2]\n"));
    assert!(text.contains("[  y^2  -2y^3  -3y^3      0 ]"), "{text}");
}

#[test]
fn analyze_reports_genericity() {
    let o = brt(&["analyze", path(&data("ex4.mmor"))]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["rank"], 2);
    assert_eq!(v["uniform_rank"], Value::Bool(true));
    assert_eq!(v["scarf_system"].as_array().unwrap().len(), 2);
}
