use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_quandle"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin().args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_str(String::from_utf8_lossy(&out.stdout).lines().next().unwrap()).unwrap()
}

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(format!("cli-{}-{name}", std::process::id()))
}

#[test]
fn enumerate_then_validate_round_trips() {
    for (spec, n) in [("trefoil", "3"), ("artin(A3)", "2"), ("coxeter(B3)", "2"), ("braid(4)", "2")] {
        let path = tmp(&format!("rt-{}.json", spec.replace(['(', ')'], "")));
        let out = run(&["enumerate", spec, "--n", n, "--out", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{spec}");
        let size = json(&out)["size"].clone();
        let v = run(&["validate", path.to_str().unwrap()]);
        assert_eq!(v.status.code(), Some(0));
        assert_eq!(json(&v)["size"], size);
    }
}

#[test]
fn iso_is_symmetric() {
    let a = tmp("iso-a.json");
    let b = tmp("iso-b.json");
    let c = tmp("iso-c.json");
    run(&["coxeter-quandle", "A2", "--out", a.to_str().unwrap()]);
    run(&["pquandle", "--g", "1", "--n", "2", "--out", b.to_str().unwrap()]);
    run(&["coxeter-quandle", "I2(4)", "--out", c.to_str().unwrap()]);
    for (x, y, expected) in [(&a, &b, true), (&a, &c, false), (&b, &c, false)] {
        let xy = json(&run(&["iso", x.to_str().unwrap(), y.to_str().unwrap()]));
        let yx = json(&run(&["iso", y.to_str().unwrap(), x.to_str().unwrap()]));
        assert_eq!(xy["isomorphic"], expected);
        assert_eq!(yx["isomorphic"], expected);
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["enumerate", "trefoil", "--cap", "500"]).status.code(), Some(2));
    assert_eq!(run(&["group-order", "braid(3)", "--cap", "500"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "quandle< a | a * b = a >"]).status.code(), Some(1));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(run(&["enumerate", "trefoil", "--n", "1"]).status.code(), Some(1));
    assert_eq!(run(&["validate", "/definitely/missing.json"]).status.code(), Some(1));
    assert_eq!(run(&["symp", "check-lemma", "5.1", "--g", "1", "--p", "4"]).status.code(), Some(1));
    assert_eq!(run(&["dehn", "--group", "S5", "--subset", "all", "--cap", "10"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn invalid_tables_are_rejected() {
    let bad = tmp("bad.json");
    std::fs::write(&bad, r#"{"size": 2, "table": [[0, 0], [0, 1]]}"#).unwrap();
    let out = run(&["validate", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn min_quotient_reads_stdin() {
    let table = String::from_utf8(run(&["pquandle", "--g", "1", "--n", "2"]).stdout).unwrap();
    let out = run_stdin(&["min-quotient"], &table);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["smallest"], 3);
    assert!(v["smallest_proper"].is_null());
    let out = run_stdin(&["min-quotient", "-"], &table);
    assert_eq!(json(&out)["size"], 3);
}

#[test]
fn presentations_from_files_and_text() {
    let file = tmp("trefoil.pres");
    std::fs::write(&file, "# trefoil\nquandle< a, b | a*b*a = b ; b*a*b = a >\n").unwrap();
    let a = json(&run(&["enumerate", file.to_str().unwrap(), "--n", "4"]));
    let b = json(&run(&["enumerate", "quandle< a, b | a*b*a = b ; b*a*b = a >", "--n", "4"]));
    assert_eq!(a, b);
    assert_eq!(a["size"], 6);
    let g = json(&run(&["group-order", "group< s, t | s t s t^-1 s^-1 t^-1 ; s^2 ; t^2 >"]));
    assert_eq!(g["order"], 6);
}

#[test]
fn env_prints_a_parseable_group() {
    let out = run(&["env", "trefoil", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.trim_start().starts_with("group<"));
    let g = json(&run(&["group-order", text.trim(), "--power", "3"]));
    assert_eq!(g["status"], "finished");
}

#[test]
fn dehn_group_specs() {
    let cases = [
        ("S4", "(1 2)", 6),
        ("S4", "(1 2 3)", 8),
        ("D5", "gens", 5),
        ("B3", "gens", 9),
        ("4:(1 2 3 4);(1 2)", "(1 2)(3 4)", 3),
    ];
    for (group, subset, size) in cases {
        let out = run(&["dehn", "--group", group, "--subset", subset]);
        assert_eq!(out.status.code(), Some(0), "{group}");
        assert_eq!(json(&out)["size"], size, "{group} {subset}");
    }
}

#[test]
fn symp_aliases_and_jobs() {
    let a = json(&run(&["--jobs", "2", "symp", "check-lemma", "shape", "--g", "1", "--p", "3"]));
    let b = json(&run(&["symp", "check-lemma", "5.1", "--g", "1", "--p", "3"]));
    assert_eq!(a, b);
    assert_eq!(a["lemma"], "5.1");
    let c = json(&run(&["symp", "check-lemma", "generators", "--g", "1", "--p", "3"]));
    assert_eq!(c["lemma"], "5.2");
    assert_eq!(c["equal"], true);
}

#[test]
fn output_is_deterministic() {
    let a = run(&["enumerate", "trefoil", "--n", "5"]).stdout;
    let b = run(&["--jobs", "1", "enumerate", "trefoil", "--n", "5"]).stdout;
    assert_eq!(a, b);
    let a = run(&["pquandle", "--g", "2", "--n", "3"]).stdout;
    let b = run(&["--jobs", "3", "pquandle", "--g", "2", "--n", "3"]).stdout;
    assert_eq!(a, b);
}
