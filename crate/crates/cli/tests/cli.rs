use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn catalog(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "catalog", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superquad")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn check_valid_algebras_exit_zero() {
    for name in ["sl2.json", "osp12.json", "gl11.json", "abelian.json"] {
        let o = run(&["check", &catalog(name)]);
        assert_eq!(code(&o), 0, "{name}: {}", stdout(&o));
    }
}

#[test]
fn check_names_the_odd_block_failure() {
    let o = run(&["check", &catalog("invalid_odd_block.json")]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("FAIL  odd block antisymmetric"));
}

#[test]
fn malformed_and_missing_input_exit_two() {
    let dir = std::env::temp_dir().join(format!("superquad-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{\"name\": ").unwrap();
    let o = run(&["check", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).contains("line 1"));
    let o = run(&["kostant", dir.join("absent.json").to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    let o = run(&["dirac", &catalog("sl2.json")]);
    assert_eq!(code(&o), 2, "--r is required for a plain algebra");
}

#[test]
fn overall_exit_is_the_worst_file() {
    let o = run(&["check", &catalog("sl2.json"), &catalog("invalid_odd_block.json")]);
    assert_eq!(code(&o), 1);
}

#[test]
fn cubic_extract_and_synthesize() {
    let o = run(&["cubic", &catalog("sl2.json")]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("φ = 1/2·h∧e∧f"));
    let o = run(&["--json", "cubic", &catalog("rank1_phi.json")]);
    assert_eq!(code(&o), 1);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["data"]["is_lie"], Value::Bool(false));
    assert_eq!(v["data"]["defect"][0]["c"], "1/4");
}

#[test]
fn kostant_verdicts() {
    let o = run(&["kostant", &catalog("rank1_pair.json")]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("first failing triple (y1, y1, y2)"));
    let o = run(&["kostant", &catalog("sl2_odd_pair_k1_2.json")]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("-3/4 vs -3/4"));
}

#[test]
fn dirac_split_and_flag() {
    let o = run(&["dirac", &catalog("osp12_even_split.json")]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("EQUAL"));
    let o = run(&["dirac", &catalog("osp12.json"), "--r", "h"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("c = 1/4"));
}

#[test]
fn json_round_trips_byte_identically() {
    let files = [catalog("sl2_odd_pair_k1.json"), catalog("rank1_pair.json"), catalog("osp12_even_split.json")];
    let mut args = vec!["--json", "kostant"];
    args.extend(files.iter().map(String::as_str));
    let out = stdout(&run(&args));
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(v.is_array());
    assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", out);

    let single = stdout(&run(&["--json", "check", &catalog("sl2.json")]));
    let v: Value = serde_json::from_str(&single).unwrap();
    assert!(v.is_object());
    assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", single);
}

#[test]
fn output_independent_of_jobs() {
    let names = [
        "sl2_cartan_split.json",
        "osp12_even_split.json",
        "gl11_even_split.json",
        "abelian_zero_split.json",
        "sl2_zero_split.json",
    ];
    let files: Vec<String> = names.iter().map(|n| catalog(n)).collect();
    let mut base: Vec<&str> = vec!["--json", "dirac"];
    base.extend(files.iter().map(String::as_str));
    let one = stdout(&run(&[&["--jobs", "1"][..], &base[..]].concat()));
    let four = stdout(&run(&[&["--jobs", "4"][..], &base[..]].concat()));
    assert_eq!(one, four);
    let v: Value = serde_json::from_str(&one).unwrap();
    let order: Vec<&str> = v.as_array().unwrap().iter().map(|r| r["file"].as_str().unwrap()).collect();
    assert_eq!(order, files.iter().map(String::as_str).collect::<Vec<_>>());
}
