//! End-to-end runs of the `formwork` binary.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn formwork(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_formwork"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const THREE_PLUS_ONE: &str = "kind: word
init: 11↑=11↑
step: one-up @ 5+2
to: 11↑=1↑0
step: one-up @ 4+2
to: 11↑=↑00
step: eq-up @ 3+2
to: 11↑=100
";

#[test]
fn derive_prints_the_transcript() {
    let o = formwork(&["derive", "builtin", "11↑=11↑", "11↑=100"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), THREE_PLUS_ONE);
    let ascii = formwork(&["derive", "builtin", "11^=11^", "11^=100"], "");
    assert_eq!(stdout(&ascii), THREE_PLUS_ONE);
}

#[test]
fn derive_exit_codes() {
    let o = formwork(&["derive", "builtin", "11↑=11↑", "11↑=101"], "");
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("not derivable"));
    let o = formwork(
        &["derive", "builtin", "11↑=11↑", "11↑=100", "--max", "2"],
        "",
    );
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("exhausted"));
    let o = formwork(&["derive", "builtin", "12", "11"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_accepts_and_rejects() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.txt");
    std::fs::write(&good, THREE_PLUS_ONE).unwrap();
    let o = formwork(&["verify", "builtin", good.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "accept\n");

    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, THREE_PLUS_ONE.replace("to: 11↑=↑00", "to: 11↑=↑01")).unwrap();
    let o = formwork(&["verify", "builtin", bad.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stderr(&o).trim(), "step 2: result mismatch");

    let o = formwork(&["--json", "verify", "builtin", bad.to_str().unwrap()], "");
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "reject");
    assert_eq!(v["step"], 2);

    let missing = dir.path().join("missing.txt");
    let o = formwork(&["verify", "builtin", missing.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_with_a_system_file() {
    let dir = tempfile::tempdir().unwrap();
    let sys = dir.path().join("ab.sys");
    std::fs::write(&sys, "alphabet: a b\nrule swap: b a => a b\n").unwrap();
    let o = formwork(&["derive", sys.to_str().unwrap(), "bba", "abb"], "");
    assert_eq!(o.status.code(), Some(0));
    let transcript = dir.path().join("t.txt");
    std::fs::write(&transcript, stdout(&o)).unwrap();
    // No axioms, so the start has to be waived.
    let o = formwork(
        &[
            "verify",
            sys.to_str().unwrap(),
            transcript.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stderr(&o).trim(), "step 0: axiom violation");
    let o = formwork(
        &[
            "verify",
            sys.to_str().unwrap(),
            transcript.to_str().unwrap(),
            "--any-start",
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn json_transcript_shape() {
    let o = formwork(&["--json", "increment", "3"], "");
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["kind"], "word");
    assert_eq!(v["init"], "11↑=11↑");
    let steps = v["steps"].as_array().unwrap();
    assert_eq!(steps.len(), 3);
    assert_eq!(steps[0]["rule"], "one-up");
    assert_eq!(steps[0]["pos"], "5+2");
    assert_eq!(steps[2]["to"], "11↑=100");

    let o = formwork(&["--json", "normalize", "--trace", "S K K a"], "");
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["kind"], "term");
    assert_eq!(v["steps"][0]["pos"], "ε");
    assert_eq!(v["steps"][0]["subst"]["z"], "a");
}

#[test]
fn normalize_trace_verifies() {
    let o = formwork(&["normalize", "--trace", "S (K S) K a b c"], "");
    assert_eq!(o.status.code(), Some(0));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("trace.txt");
    std::fs::write(&path, stdout(&o)).unwrap();
    let o = formwork(&["verify", "sk", path.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(0));
    let o = formwork(&["verify", "builtin", path.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn normalize_budget_and_syntax() {
    let omega = "S (S K K) (S K K) (S (S K K) (S K K))";
    let o = formwork(&["normalize", omega, "--max", "100"], "");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("100 steps"));
    let o = formwork(&["normalize", "S (K"], "");
    assert_eq!(o.status.code(), Some(2));
    let o = formwork(&["normalize", "K K K S K S"], "");
    assert_eq!(stdout(&o), "S S\n");
}

#[test]
fn bridge_commands() {
    let o = formwork(&["abstract", "x", "x"], "");
    assert_eq!(stdout(&o), "S K K\n");
    let o = formwork(&["abstract", "x", "f x"], "");
    assert_eq!(stdout(&o), "S (K f) (S K K)\n");
    let o = formwork(&["compile", "\\x. y"], "");
    assert_eq!(stdout(&o), "K y\n");
    let o = formwork(&["arith", "3 + 1"], "");
    assert_eq!(stdout(&o), "4\n");
    let o = formwork(&["--json", "arith", "succ 6"], "");
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], 7);
    let o = formwork(&["arith", "65 + 1"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn repl_over_a_pipe() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("session.txt");
    let script = format!("0\n0\nw {}\nq\n", path.display());
    let o = formwork(&["repl", "term", "S K K a"], &script);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("[0] rule2 @ ε"));
    assert!(out.contains("(no redexes)"));
    assert!(out.contains("wrote 2 steps"));
    let o = formwork(&["verify", "sk", path.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(formwork(&[], "").status.code(), Some(2));
    assert_eq!(formwork(&["increment"], "").status.code(), Some(2));
    assert_eq!(formwork(&["frobnicate"], "").status.code(), Some(2));
}
