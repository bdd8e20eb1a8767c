//! End-to-end runs of the binary: documented outputs are reproduced
//! byte-for-byte across invocations, and the exit-code contract holds.

use std::path::PathBuf;
use std::process::{Command, Output};

fn cutlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cutlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("cutlab-cli-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn gen_path_then_analyze_reproduces_documented_numbers() {
    let p4 = tmp("p4.txt");
    let out = cutlab(&["gen", "path", "--n", "4", "--out", p4.to_str().unwrap()]);
    assert!(out.status.success());

    let analyze = cutlab(&[
        "analyze",
        "--graph",
        p4.to_str().unwrap(),
        "--family",
        "groupcut:1,1",
    ]);
    assert!(analyze.status.success());
    assert_eq!(
        stdout_of(&analyze),
        "instances,distinct,redundancy_factor,theoretical_bound\n6,3,2.0,3\n"
    );

    // Identical bytes on a second run.
    let again = cutlab(&[
        "analyze",
        "--graph",
        p4.to_str().unwrap(),
        "--family",
        "groupcut:1,1",
    ]);
    assert_eq!(analyze.stdout, again.stdout);

    let solve = cutlab(&[
        "solve",
        "--graph",
        p4.to_str().unwrap(),
        "--demands",
        "K:{0},{3}",
    ]);
    assert!(solve.status.success());
    assert_eq!(stdout_of(&solve), "value=2\npartition={0 | 1 2 3}\n");

    std::fs::remove_file(&p4).ok();
}

#[test]
fn scheme_build_and_query_from_file() {
    let p5 = tmp("p5.txt");
    let scheme = tmp("p5.scheme");
    assert!(
        cutlab(&["gen", "path", "--n", "5", "--out", p5.to_str().unwrap()])
            .status
            .success()
    );
    assert!(cutlab(&[
        "scheme",
        "build",
        "--graph",
        p5.to_str().unwrap(),
        "--family",
        "groupcut:1,1",
        "--out",
        scheme.to_str().unwrap(),
    ])
    .status
    .success());
    // Graph file gone; queries answer from the scheme alone.
    std::fs::remove_file(&p5).unwrap();
    let q = cutlab(&[
        "scheme",
        "query",
        "--scheme",
        scheme.to_str().unwrap(),
        "--demands",
        "K:{0},{4}",
    ]);
    assert!(q.status.success());
    assert!(stdout_of(&q).starts_with("value=2\n"), "{}", stdout_of(&q));
    std::fs::remove_file(&scheme).ok();
}

#[test]
fn attack_reports_exact_recovery() {
    let out = cutlab(&["attack", "--n", "6", "--seed", "3"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("RECOVERED: exact"), "{text}");
    assert!(text.starts_with("queries="), "{text}");
    let again = cutlab(&["attack", "--n", "6", "--seed", "3"]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn exit_codes_distinguish_contract_and_guard() {
    let p4 = tmp("codes-p4.txt");
    assert!(
        cutlab(&["gen", "path", "--n", "4", "--out", p4.to_str().unwrap()])
            .status
            .success()
    );

    // Contract violation: demand endpoint out of range.
    let bad = cutlab(&[
        "solve",
        "--graph",
        p4.to_str().unwrap(),
        "--demands",
        "K:{0},{9}",
    ]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(!String::from_utf8_lossy(&bad.stderr).is_empty());

    // Guard refusal: partition enumeration over 13 vertices.
    let p13 = tmp("codes-p13.txt");
    assert!(
        cutlab(&["gen", "path", "--n", "13", "--out", p13.to_str().unwrap()])
            .status
            .success()
    );
    let guard = cutlab(&[
        "analyze",
        "--graph",
        p13.to_str().unwrap(),
        "--family",
        "multicut:1",
    ]);
    assert_eq!(guard.status.code(), Some(2));

    // Malformed graph file: parse error names the line.
    let broken = tmp("broken.txt");
    std::fs::write(&broken, "2 1 u\n0 2 1\n").unwrap();
    let parse = cutlab(&[
        "solve",
        "--graph",
        broken.to_str().unwrap(),
        "--demands",
        "K:{0},{1}",
    ]);
    assert_eq!(parse.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&parse.stderr).contains("line 2"));

    for f in [p4, p13, broken] {
        std::fs::remove_file(f).ok();
    }
}

#[test]
fn certify_prints_pass_lines() {
    let out = cutlab(&["certify", "multiway", "--n", "5", "--k", "3"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.lines().all(|l| l.starts_with("PASS")), "{text}");
    assert!(text.lines().count() >= 6, "{text}");
}
