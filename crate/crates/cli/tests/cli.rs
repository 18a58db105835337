use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quiverrep")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn temp(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("quiverrep-{}-{name}", std::process::id()))
}

#[test]
fn build_reports_dimension_and_vertices() {
    let o = run(&["build", "--iyama", "2", "4"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("vertices: 5"), "{s}");
    assert!(s.contains("dimension: 9"), "{s}");

    let o = run(&["build", "--iyama", "3", "3"]);
    assert!(stdout(&o).contains("vertices: 10"));

    let path = temp("alg.json");
    let o = run(&["build", "--fixture", "example-2.8", "--json", path.to_str().unwrap()]);
    assert!(stdout(&o).contains("dimension: 14"));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["algebra"]["dimension"], 14);
    std::fs::remove_file(path).ok();
}

#[test]
fn construction_errors_exit_with_two() {
    assert_eq!(run(&["build", "--fixture", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["build", "--iyama", "2", "2", "--field", "fp:4"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "torsion"]).status.code(), Some(2));
}

#[test]
fn enumerate_counts_and_caps() {
    let o = run(&["enumerate", "--fixture", "kA(2)"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "Complete: 3");

    let dot = temp("a42.dot");
    let o = run(&["enumerate", "--iyama", "4", "2", "--dot", dot.to_str().unwrap()]);
    assert_eq!(stdout(&o).trim(), "Complete: 56");
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("digraph"));
    std::fs::remove_file(dot).ok();

    let o = run(&["enumerate", "--iyama", "4", "3", "--max-modules", "150"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).starts_with("ExceededCap"));
}

#[test]
fn enumerate_over_a_prime_field() {
    let o = run(&["enumerate", "--iyama", "3", "2", "--field", "fp:32003"]);
    assert_eq!(stdout(&o).trim(), "Complete: 17");
}

#[test]
fn torsion_suite_on_example_2_8() {
    let o = run(&["verify", "--suite", "torsion", "--fixture", "example-2.8"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pass"], true);
    let r = &v["reports"][0];
    assert_eq!(r["algebra"]["fixture"], "example-2.8");
    assert_eq!(r["counts"]["Fac(ν⁻¹Q)"], 10);
    assert_eq!(r["counts"]["⊥Q"], 2);
    assert_eq!(r["counts"]["Sub Q"], 11);
    let w = r["witnesses"].as_array().unwrap();
    let outside = w.iter().find(|w| w["name"] == "Fac \\ Sub").unwrap();
    assert_eq!(outside["value"], serde_json::json!(["0001100"]));
}

#[test]
fn strata_suite_on_example_3_5() {
    let o = run(&["verify", "--suite", "strata", "--fixture", "example-3.5(4)"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let c = &v["reports"][0]["counts"];
    assert_eq!(c["t"][0], 1);
    assert_eq!(c["non-projective"], 5);
}

#[test]
fn tower_and_theorem_suites_on_single_cases() {
    let o = run(&["verify", "--suite", "tower", "--iyama", "3", "3"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let o = run(&["verify", "--suite", "theorem48", "--iyama", "3", "3"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v["reports"][0]["formulas"].as_array().unwrap();
    let count = rows.iter().find(|r| r["name"] == "count").unwrap();
    assert_eq!(count["observed"], 36);
}

#[test]
fn failed_rows_exit_with_four() {
    // kA(3) is not a higher Auslander algebra, so the strata suite fails
    let o = run(&["verify", "--suite", "strata", "--fixture", "kA(3)"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn output_is_deterministic() {
    let a = run(&["verify", "--suite", "torsion", "--iyama", "3", "3"]);
    let b = run(&["verify", "--suite", "torsion", "--iyama", "3", "3"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}
