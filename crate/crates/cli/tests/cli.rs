use std::process::{Command, Output};

use regbound::MonomialIdeal;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_regbound")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn five_cycle() {
    assert_eq!(stdout(&["reg", "--family", "cycle:5"]).trim(), "reg I(C5) = 3");
    assert_eq!(stdout(&["bounds", "--family", "cycle:5"]).trim(), "C5: hansen=3, kwok=5/2, alpha=2, c=1");
}

#[test]
fn all_checks_pass_on_a_path() {
    let text = stdout(&["check", "--all", "--family", "path:3", "--smax", "2"]);
    assert!(text.trim_end().ends_with("verdicts passed"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["check", "--checks", "nope", "--family", "path:3"]).status.code(), Some(2));
    assert_eq!(run(&["reg", "--family", "wheel:4"]).status.code(), Some(2));
    assert_eq!(run(&["reg", "--family", "cycle:5", "--field", "p7"]).status.code(), Some(2));
    assert_eq!(run(&["betti", "--family", "cycle:5", "--lattice-cap", "3"]).status.code(), Some(3));
}

#[test]
fn json_output_parses_back() {
    let text = stdout(&["ideal", "--family", "path:2", "--which", "jpol", "--format", "json"]);
    let i: MonomialIdeal = serde_json::from_str(&text).unwrap();
    assert_eq!(i.ring().vars(), ["x1", "x2", "y1", "y2"]);
    assert_eq!(i.gens().len(), 3);

    let text = stdout(&["betti", "--family", "cycle:5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert!(v.is_object());
}

#[test]
fn output_is_reproducible() {
    let args = ["sweep", "--corpus", "paths:2-4,cycle:5", "--smax", "1", "--format", "csv"];
    let a = stdout(&args);
    assert_eq!(a, stdout(&args));
    let mut jobs = args.to_vec();
    jobs.extend(["--jobs", "2"]);
    assert_eq!(a, stdout(&jobs));
    assert!(a.starts_with("graph_id,n,e,s,"));
}
