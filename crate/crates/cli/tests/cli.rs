use std::io::Write;
use std::process::{Command, Output, Stdio};

fn artin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_artin")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn normal_form_of_the_basic_example() {
    let o = artin(&["A2", "nf", "s2 s1 s1 s2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "Δ^0 · (s2 s1)(s1 s2)");
}

#[test]
fn normal_form_round_trips_through_json() {
    let o = artin(&["A4", "nf", "--format", "json", "s1 s2^-1 s3 s4 s3 s1^-1"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let p = v["deltaPower"].as_i64().unwrap();
    let mut word = format!("D^{p}");
    for f in v["factors"].as_array().unwrap() {
        for s in f.as_array().unwrap() {
            word.push_str(&format!(" s{}", s.as_u64().unwrap()));
        }
    }
    let again = artin(&["A4", "nf", "--format", "json", &word]);
    assert!(again.status.success(), "{}", String::from_utf8_lossy(&again.stderr));
    assert_eq!(again.stdout, o.stdout);
}

#[test]
fn output_is_deterministic() {
    let args = ["A3", "summit", "--kind", "uss", "--format", "json", "s1 s2 s3^-1"];
    assert_eq!(artin(&args).stdout, artin(&args).stdout);
}

#[test]
fn word_read_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_artin"))
        .args(["A2", "nf", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"s2 s1 s1 s2\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(stdout(&o).trim(), "Δ^0 · (s2 s1)(s1 s2)");
}

#[test]
fn bad_input_exits_with_two() {
    assert_eq!(artin(&["X9", "nf", "s1"]).status.code(), Some(2));
    assert_eq!(artin(&["A2", "nf", "s7"]).status.code(), Some(2));
    assert_eq!(artin(&["A2", "nf", "s1 ?"]).status.code(), Some(2));
}

#[test]
fn exhausted_budget_exits_with_three() {
    let dir = std::env::temp_dir().join(format!("artin-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("tiny.json");
    std::fs::write(&cfg, r#"{"maxGraphVertices": 2}"#).unwrap();
    let o = artin(&["A4", "summit", "--kind", "pos", "--config", cfg.to_str().unwrap(), "s1 s2"]);
    assert_eq!(o.status.code(), Some(3), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn summit_graph_as_dot() {
    let o = artin(&["A3", "summit", "--kind", "sss", "--format", "dot", "s1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("digraph"));
    assert_eq!(text.matches("[label=").count(), 3 + 9);
}

#[test]
fn closure_and_standardizer() {
    let o = artin(&["A3", "closure", "s1 s2 s1^-1"]);
    assert_eq!(stdout(&o).trim(), "(s1) · A_{s2} · (s1)^-1");
    let o = artin(&["A3", "phi", "s1 s2 s3"]);
    assert!(o.status.success());
    let o = artin(&["A3", "standardize", "1:s2 s1"]);
    assert!(stdout(&o).contains("base: {s1}"));
}

#[test]
fn lattice_operations_report_certificates() {
    let o = artin(&["A3", "join", "--format", "json", "1", "3"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["subgroup"]["base"], serde_json::json!([1, 3]));
    assert_eq!(v["certificate"]["complete"], serde_json::json!(true));
    let o = artin(&["A3", "intersect", "1,2", "2,3"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("A_{s2}"));
}

#[test]
fn figures_list_the_positive_conjugates() {
    let o = artin(&["A4", "figures"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("6 vertices, 18 arrows"));
    assert!(text.contains("Action on central elements"));
}

#[test]
fn custom_matrix_from_config() {
    let dir = std::env::temp_dir().join(format!("artin-cli-matrix-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("b2.json");
    std::fs::write(&good, r#"{"coxeterMatrix": [[1, 4], [4, 1]]}"#).unwrap();
    let o = artin(&["custom", "nf", "--config", good.to_str().unwrap(), "s1 s2 s1 s2 s1"]);
    assert_eq!(stdout(&o).trim(), "Δ^1 · (s1)");
    let affine = dir.join("affine.json");
    std::fs::write(&affine, r#"{"coxeterMatrix": [[1, 0], [0, 1]]}"#).unwrap();
    assert_eq!(artin(&["custom", "nf", "--config", affine.to_str().unwrap(), "s1"]).status.code(), Some(2));
}
