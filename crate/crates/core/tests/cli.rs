//! End-to-end runs of the binary on the sample inputs in `data/`.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_interlace"))
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn q_on_k2_matches_across_pipelines() {
    let o = run(&["q", "--input", "data/k2.lg", "--method", "both"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("q_N = 2x"));
    assert!(text.contains("poly x: 0 2"));
    assert!(text.ends_with("MATCH\n"));
}

#[test]
fn euler_count_on_two_loops() {
    let o = run(&["euler-count", "--input", "data/loops1.dg"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "euler circuits = 1\n");
}

#[test]
fn every_sample_agrees_across_pipelines() {
    let cases: [&[&str]; 9] = [
        &["Q", "--input", "data/c5.lg"],
        &["q2", "--input", "data/k2.lg"],
        &["qm", "--input", "data/c5.lg"],
        &["martin", "--input", "data/triangle_doubled.g4"],
        &["martin", "--input", "data/loops1.dg"],
        &["tutte-diag", "--input", "data/k4.plane"],
        &["tm", "--input", "data/c5.lg"],
        &["delta", "q", "--input", "data/example.ss"],
        &["delta", "qbar", "--input", "data/c5.lg"],
    ];
    for args in cases {
        let mut all = args.to_vec();
        all.extend(["--method", "both"]);
        let o = run(&all);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert!(stdout(&o).contains("MATCH"), "{args:?}");
    }
}

#[test]
fn two_variable_output_grammar() {
    let o = run(&["q2", "--input", "data/k2.lg"]);
    assert_eq!(
        stdout(&o),
        "q = x^2 - 2x + 2y\ncoef 0 1 2\ncoef 1 0 -2\ncoef 2 0 1\n"
    );
}

#[test]
fn input_errors_exit_with_usage_status() {
    let o = run(&["q", "--input", "data/missing.lg"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["martin", "--input", "data/k2.lg"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("digraph4 or graph4"));
    let o = run(&[
        "delta",
        "Q",
        "--input",
        "data/example.ss",
        "--method",
        "both",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn check_suite_reports_zero_failures() {
    let o = run(&[
        "check", "euler", "--seed", "3", "--trials", "5", "--max-n", "4",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 failures"));
}
