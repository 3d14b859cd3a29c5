use std::io::Write;
use std::process::{Command, Output, Stdio};

use signed_brauer::groups::enumerate_signed;

fn sbrauer(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sbrauer"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn golden_outputs() {
    let out = sbrauer(&["embed", "+2 +1"], "");
    assert_eq!((out.status.code(), stdout(&out).as_str()), (Some(0), "(1 2)(3 4)\n"));
    let out = sbrauer(&["mul", "+2 +1", "-1 +2"], "");
    assert_eq!(stdout(&out), "+2 -1\n(1 2 3 4)\n");
    let out = sbrauer(&["verify", "--claim", "thm_3_1", "--n", "4"], "");
    assert_eq!(stdout(&out), "claim=thm_3_1 n=4 checked=384 failures=0\n");
    let out = sbrauer(&["decompose", "(1 7 3 9)(6 2 8 4)(5 10)", "--degree", "10"], "");
    assert_eq!(stdout(&out), "(1 7 3 9)(2 8 4 6)(5 10)\ntype=(4,4,2) parity=odd\n");
}

#[test]
fn decompose_invert_round_trips() {
    for n in 1..=4 {
        for s in enumerate_signed(n).unwrap() {
            let image = stdout(&sbrauer(&["embed", &s.to_string()], ""));
            let degree = (2 * n).to_string();
            let out = sbrauer(&["decompose", image.trim(), "--degree", &degree, "--invert"], "");
            assert_eq!(stdout(&out).trim(), s.to_string());
        }
    }
}

#[test]
fn enumerate_counts() {
    let even = stdout(&sbrauer(&["enumerate", "--even", "--n", "3"], ""));
    assert_eq!(even.lines().count(), 24);
    let full = stdout(&sbrauer(&["enumerate", "--n", "3"], ""));
    assert_eq!(full.lines().count(), 48);
    assert_eq!(full.lines().next(), Some("+1 +2 +3"));
}

#[test]
fn verify_all_passes_at_six() {
    let out = sbrauer(&["verify", "--all", "--n", "6", "--jobs", "4"], "");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 11);
    let bsgs = sbrauer(&["verify", "--all", "--n", "6", "--oracle", "bsgs"], "");
    assert_eq!(bsgs.status.code(), Some(0));
}

#[test]
fn jobs_do_not_change_output() {
    let args = ["verify", "--claim", "thm_3_1", "--n", "9", "--samples", "20000"];
    let one = stdout(&sbrauer(&[&args[..], &["--jobs", "1"]].concat(), ""));
    let four = stdout(&sbrauer(&[&args[..], &["--jobs", "4"]].concat(), ""));
    assert_eq!(one, four);
    assert_eq!(one, "claim=thm_3_1 n=9 checked=20000 failures=0\n");
}

#[test]
fn render_reads_stdin() {
    let out = sbrauer(&["render"], "n=2; 1-2:+; 3-4:-\n");
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("n=2; 1-2:+; 3-4:-\n"), "{}", stdout(&out));
    let dot = stdout(&sbrauer(&["render", "--format", "dot"], "n=1; 1-2:-"));
    assert!(dot.contains("graph diagram {"));
    assert!(dot.contains("style=dashed"));
    let again = stdout(&sbrauer(&["render", "--format", "dot"], &dot));
    assert_eq!(dot, again);
}

#[test]
fn json_output() {
    let out = stdout(&sbrauer(&["embed", "-1 +2", "--format", "json"], ""));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["embedding"], "(1 3)");
    let out = stdout(&sbrauer(&["verify", "--claim", "lem_2_3", "--n", "4", "--format", "json"], ""));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[0]["checked"], 24);
    assert_eq!(v[0]["failures"], 0);
    let out = stdout(&sbrauer(&["valuation", "--limit", "100", "--format", "json"], ""));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["valuation"]["failures"], 0);
}

#[test]
fn valuation_summary() {
    let out = sbrauer(&["valuation", "--limit", "10"], "");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "valuation limit=10 exact_limit=30 checked=9 failures=0\n\
         divisibility limit=10 exact_limit=30 checked=9 failures=0\n"
    );
}

#[test]
fn errors_exit_2_on_stderr() {
    let out = sbrauer(&["embed", "+1 +1"], "");
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let out = sbrauer(&["mul", "+1 q", "+1 +2"], "");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("`q`"));
    assert_eq!(sbrauer(&["render"], "n=2; 1-2:+").status.code(), Some(2));
    assert_eq!(sbrauer(&["decompose", "(1 2)", "--degree", "4", "--invert"], "").status.code(), Some(2));
    assert_eq!(sbrauer(&["enumerate", "--n", "9"], "").status.code(), Some(2));
}
