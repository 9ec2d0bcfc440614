//! The command line, driven in-process through `cli::run` and once through the
//! built binary.

use std::io::Cursor;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use serde_json::Value;

use cwl::harness::cli::{run, EXIT_INPUT, EXIT_OK};

struct Outcome {
    code: i32,
    out: String,
    err: String,
}

fn cwl(args: &[&str], stdin: &str) -> Outcome {
    let mut input = Cursor::new(stdin.as_bytes().to_vec());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("cwl").chain(args.iter().copied());
    let code = run(argv, &mut input, &mut out, &mut err);
    Outcome {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn json_lines(s: &str) -> Vec<Value> {
    s.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn check_sink_example() {
    let r = cwl(&["check", &data("sink_example.json")], "");
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    let v = &json_lines(&r.out)[0];
    assert_eq!(v["certificate"]["theorem_tag"], "sink-characterization");
    assert_eq!(v["certificate"]["value"], true);
    assert_eq!(v["engine"]["cl"], true);
    assert_eq!(v["engine"]["lq"], true);
    assert_eq!(v["engine"]["vs"], true);
    assert_eq!(v["engine"]["regularity"], 5);
    assert_eq!(v["classifier_agrees"], true);
    assert_eq!(v["conjecture_consistent"], true);
    assert_eq!(v["ideal"].as_array().unwrap().len(), 6);
    assert_eq!(v["engine"]["lq_order"].as_array().unwrap().len(), 6);
}

#[test]
fn check_reads_text_from_stdin() {
    let r = cwl(&["check"], &std::fs::read_to_string(data("single_heavy_vertex.txt")).unwrap());
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    let v = &json_lines(&r.out)[0];
    assert_eq!(v["certificate"]["theorem_tag"], "vplus1-characterization");
    assert_eq!(v["engine"]["vs"], true);
    let dash = cwl(&["check", "-"], "a -> b\nweight b = 3\n");
    assert_eq!(dash.code, EXIT_OK);
    assert_eq!(json_lines(&dash.out)[0]["ideal"][0], "a*b^3");
}

#[test]
fn check_pretty_out_fork() {
    let r = cwl(&["check", "--pretty", &data("out_fork.txt")], "");
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.contains("not componentwise linear [forbidden-config]"));
    assert!(r.out.contains("regularity   4"));
    assert!(r.out.contains("via Betti numbers"));
}

#[test]
fn empty_graph_is_vacuous() {
    let r = cwl(&["check", &data("empty.json")], "");
    assert_eq!(r.code, EXIT_OK);
    let v = &json_lines(&r.out)[0];
    assert_eq!(v["engine"]["cl"], true);
    assert_eq!(v["engine"]["regularity"], Value::Null);
}

#[test]
fn input_errors_exit_with_two() {
    let r = cwl(&["check"], "a -> \n");
    assert_eq!(r.code, EXIT_INPUT);
    assert!(r.err.contains("line 1, column 6"), "{}", r.err);
    assert_eq!(cwl(&["check"], "a -> b\nb -> a\n").code, EXIT_INPUT);
    assert_eq!(cwl(&["check"], "{\"vertices\": [").code, EXIT_INPUT);
    assert_eq!(cwl(&["check", "/nonexistent/graph.json"], "").code, EXIT_INPUT);
    assert_eq!(cwl(&["betti"], "vars: x y\n").code, EXIT_INPUT);
    assert_eq!(cwl(&["betti", "--field", "fp:4"], "x*y\n").code, EXIT_INPUT);
    assert_eq!(cwl(&["fuzz", "--n", "0"], "").code, EXIT_INPUT);
    assert_eq!(cwl(&["enumerate", "--n", "9", "--max-weight", "4"], "").code, EXIT_INPUT);
    assert_eq!(cwl(&["frobnicate"], "").code, EXIT_INPUT);
    let r = cwl(&["betti"], "vars: x y\nx*z\n");
    assert_eq!(r.code, EXIT_INPUT);
    assert!(r.err.contains("line 2, column 3"), "{}", r.err);
}

#[test]
fn betti_rows_and_summary() {
    let r = cwl(&["betti", "--ideal", &data("five_cycle.txt")], "");
    assert_eq!(r.code, EXIT_OK);
    let lines = json_lines(&r.out);
    assert_eq!(lines.len(), 12);
    assert_eq!(lines[10]["multidegree"], "x1*x2*x3*x4*x5");
    assert_eq!(lines[10]["i"], 2);
    let s = &lines[11]["summary"];
    assert_eq!(s["regularity"], 3);
    assert_eq!(s["totals"], serde_json::json!([5, 5, 1]));

    let sq = cwl(&["betti", "--ideal", &data("five_cycle_squared.txt")], "");
    let s = json_lines(&sq.out).last().unwrap()["summary"].clone();
    assert_eq!(s["regularity"], 4);
    assert_eq!(s["totals"], serde_json::json!([15, 24, 10]));

    let pretty = cwl(&["betti", "--pretty", "--field", "fp:2", "--ideal", &data("five_cycle.txt")], "");
    assert!(pretty.out.contains("total:     5     5     1"), "{}", pretty.out);
    assert!(pretty.out.contains("regularity 3"));
}

#[test]
fn polarize_names_slots() {
    let r = cwl(&["polarize", "--ideal", &data("pure_powers.json")], "");
    assert_eq!(r.code, EXIT_OK);
    let v = &json_lines(&r.out)[0];
    assert_eq!(v["ideal"], serde_json::json!(["x1_1*x1_2", "x3_1*x3_2"]));
    assert_eq!(v["variables"]["x3_2"], serde_json::json!(["x3", 2]));
    let pretty = cwl(&["polarize", "--pretty"], "x^2*y\ny^3\n");
    assert!(pretty.out.starts_with('('));
    assert!(pretty.out.contains("y_3 = y slot 3"), "{}", pretty.out);
}

#[test]
fn fuzz_is_deterministic() {
    let args = ["fuzz", "--seed", "7", "--count", "60", "--verify-all"];
    let a = cwl(&args, "");
    let b = cwl(&args, "");
    assert_eq!(a.code, EXIT_OK, "{}", a.err);
    assert_eq!(a.out, b.out);
    let summary = json_lines(&a.out).last().unwrap()["summary"].clone();
    assert_eq!(summary["instances"], 60);
    assert_eq!(summary["engine_runs"], 60);
    assert_eq!(summary["implication_violations"], 0);
    assert!(a.err.contains("instances in"));
    let other = cwl(&["fuzz", "--seed", "8", "--count", "60", "--verify-all"], "");
    assert_ne!(a.out, other.out);
}

#[test]
fn enumerate_three_vertices() {
    let r = cwl(&["enumerate", "--n", "3", "--max-weight", "2"], "");
    assert_eq!(r.code, EXIT_OK);
    let summary = json_lines(&r.out).last().unwrap()["summary"].clone();
    assert_eq!(summary["instances"], 61);
    assert_eq!(summary["classifier_disagreements"], 0);
    assert_eq!(summary["conjecture_inconsistent"], 0);
    let pretty = cwl(&["enumerate", "--n", "2", "--max-weight", "2", "--pretty"], "");
    assert_eq!(pretty.code, EXIT_OK);
    assert!(!pretty.out.is_empty());
}

#[test]
fn help_and_version() {
    let r = cwl(&["--help"], "");
    assert_eq!(r.code, EXIT_OK);
    for sub in ["check", "betti", "polarize", "fuzz", "enumerate"] {
        assert!(r.out.contains(sub), "{sub} missing from help");
    }
    assert_eq!(cwl(&["--version"], "").code, EXIT_OK);
}

#[test]
fn binary_honours_thread_setting() {
    let child = Command::new(env!("CARGO_BIN_EXE_cwl"))
        .args(["fuzz", "--count", "40", "--seed", "3"])
        .env("CWL_THREADS", "2")
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .output()
        .unwrap();
    assert!(child.status.success());
    let single = Command::new(env!("CARGO_BIN_EXE_cwl"))
        .args(["fuzz", "--count", "40", "--seed", "3"])
        .env("CWL_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(child.stdout, single.stdout);
    assert!(String::from_utf8_lossy(&child.stderr).contains("instances in"));

    let bad = Command::new(env!("CARGO_BIN_EXE_cwl"))
        .args(["check", "/nonexistent/graph.json"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_INPUT));
}
