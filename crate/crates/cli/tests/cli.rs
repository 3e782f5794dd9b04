use std::io::Write;
use std::process::{Command, Stdio};

use gauss_cli::{run, Outcome, EXIT_INVALID, EXIT_NOT_APPLICABLE, EXIT_OK};

const EXAMPLE_1: &str = "O1-U2-O3-U1-U4+U3-O2-O4+";
const EXAMPLE_2: &str = "O3+U4-O1+U2-U1+U3+O2-O4-";

fn gauss(args: &[&str]) -> Outcome {
    gauss_stdin(args, "")
}

fn gauss_stdin(args: &[&str], input: &str) -> Outcome {
    let argv = std::iter::once("gauss").chain(args.iter().copied());
    run(argv, &mut input.as_bytes())
}

fn json(outcome: &Outcome) -> serde_json::Value {
    serde_json::from_str(&outcome.stdout).unwrap_or_else(|e| panic!("{e}: {:?}", outcome.stdout))
}

#[test]
fn example_two_lists_its_r3_moves() {
    let out = gauss(&["moves", EXAMPLE_2]);
    assert_eq!(out.code, EXIT_OK);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert!(lines.contains(&"r3:1,3,4"), "{lines:?}");
    assert!(lines.iter().all(|l| l.starts_with("r3:")), "{lines:?}");
}

/// The exact listing asked for. {1,2,4} is also a movable triple of this
/// diagram, so an exact "r3:1,3,4" cannot hold.
#[test]
#[ignore = "example 2 also has the movable triple {1,2,4}"]
fn example_two_lists_exactly_one_move() {
    assert_eq!(gauss(&["moves", EXAMPLE_2]).stdout, "r3:1,3,4\n");
}

#[test]
fn example_one_simplifies_to_the_unknot() {
    let out = gauss(&["simplify", EXAMPLE_1, "--trace"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert!(out.stdout.starts_with("final: \"\"\n"), "{}", out.stdout);
    assert!(out.stdout.contains("steps: 3\n"));
    for step in ["r2:del:1,4", "r1:del:3", "r1:del:2"] {
        assert!(out.stdout.contains(step), "{}", out.stdout);
    }
}

#[test]
fn r1_on_the_trefoil_is_not_applicable() {
    let out = gauss(&["apply", "O1-O2-U1-U2-", "--move", "r1:del:1"]);
    assert_eq!(out.code, EXIT_NOT_APPLICABLE);
    assert_eq!(out.stdout, "");
    assert!(out.stderr.contains("chord 1's endpoints are not adjacent"), "{}", out.stderr);
}

#[test]
fn apply_prints_the_result() {
    let out = gauss(&["apply", EXAMPLE_1, "--move", "r2:del:1,4"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(gauss(&["validate", out.stdout.trim()]).stdout, "valid: 2 chords, writhe -2\n");
}

#[test]
fn usage_errors_exit_one() {
    for args in [&["frobnicate"][..], &["validate"], &["moves", "O1+U1+", "--bogus"], &[]] {
        let out = gauss(args);
        assert_eq!(out.code, EXIT_INVALID, "{args:?}");
        assert!(out.stderr.contains("Usage"), "{args:?}: {}", out.stderr);
    }
    let bad_move = gauss(&["apply", "O1+U1+", "--move", "r9"]);
    assert_eq!(bad_move.code, EXIT_INVALID);
}

#[test]
fn parse_errors_exit_one() {
    let out = gauss(&["validate", "O1+ U1-"]);
    assert_eq!(out.code, EXIT_INVALID);
    assert_eq!(out.stderr, "error: token 1: sign mismatch for chord 1 (+ then -)\n");
}

#[test]
fn help_and_version_succeed() {
    for args in [&["--help"][..], &["simplify", "--help"], &["--version"]] {
        let out = gauss(args);
        assert_eq!(out.code, EXIT_OK, "{args:?}");
        assert!(!out.stdout.is_empty());
        assert_eq!(out.stderr, "");
    }
}

#[test]
fn dash_reads_standard_input() {
    let out = gauss_stdin(&["canonical", "-"], "U1+ O1+\n");
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout, "O1+ U1+\n");
    assert_eq!(gauss_stdin(&["validate", "-"], EXAMPLE_2).stdout, "valid: 4 chords, writhe 0\n");
}

#[test]
fn json_envelope() {
    let ok = json(&gauss(&["moves", "--json", EXAMPLE_2]));
    assert_eq!(ok["ok"], true);
    assert!(ok["error"].is_null());
    assert!(ok["result"].as_array().unwrap().contains(&"r3:1,3,4".into()));

    let out = gauss(&["simplify", "--json", "--trace", EXAMPLE_1]);
    // keys come out sorted
    assert!(out.stdout.starts_with(r#"{"error":null,"ok":true,"result":{"#), "{}", out.stdout);
    let v = json(&out);
    assert_eq!(v["result"]["final"], "");
    assert_eq!(v["result"]["steps"], 3);
    assert_eq!(v["result"]["trace"][0]["move"], "r2:del:1,4");

    let failed = gauss(&["moves", "--json", "O1+"]);
    assert_eq!(failed.code, EXIT_INVALID);
    let v = json(&failed);
    assert_eq!(v["ok"], false);
    assert!(v["result"].is_null());
    assert_eq!(v["error"], "token 0: chord 1 occurs only once");
}

#[test]
fn output_is_deterministic() {
    let invocations: [&[&str]; 5] = [
        &["moves", "--insertions", EXAMPLE_2],
        &["simplify", "--trace", EXAMPLE_2],
        &["render", "--format", "svg", EXAMPLE_2],
        &["random", "--chords", "6", "--seed", "9"],
        &["census", "--chords", "3", "--count", "movable-triples"],
    ];
    for args in invocations {
        let first = gauss(args);
        assert_eq!(first.code, EXIT_OK, "{args:?}: {}", first.stderr);
        assert_eq!(gauss(args), first, "{args:?}");
    }
}

#[test]
fn random_codes_validate() {
    let out = gauss(&["random", "--chords", "3", "--seed", "42"]);
    let check = gauss(&["validate", out.stdout.trim()]);
    assert_eq!(check.code, EXIT_OK);
    assert!(check.stdout.starts_with("valid: 3 chords"));
    assert_eq!(gauss(&["random", "--chords", "0", "--seed", "5"]).stdout, "\n");
}

#[test]
fn census_reports_the_counts() {
    let out = gauss(&["census", "--chords", "3", "--count", "movable-triples"]);
    assert_eq!(out.code, EXIT_OK);
    for line in ["diagrams: 960", "movable triples: 192", "movable triples up to rotation: 32"] {
        assert!(out.stdout.lines().any(|l| l == line), "{line}: {}", out.stdout);
    }
    assert_eq!(gauss(&["census", "--chords", "2", "--count", "movable-triples"]).code, EXIT_INVALID);
}

#[test]
fn render_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ex2.svg");
    let out = gauss(&["render", EXAMPLE_2, "--format", "svg", "-o", path.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert_eq!(out.stdout, "");
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, gauss(&["render", EXAMPLE_2, "--format", "svg"]).stdout);
    assert_eq!(written.matches("marker-end").count(), 4);

    let ascii = gauss(&["render", "O1-O2-U1-U2-", "--format", "ascii"]);
    assert!(ascii.stdout.contains("1: 0\u{2192}2 -\n2: 1\u{2192}3 -\n"), "{}", ascii.stdout);
}

#[test]
fn binary_exit_codes_and_stdin() {
    let bin = env!("CARGO_BIN_EXE_gauss");
    let mut child = Command::new(bin)
        .args(["simplify", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(EXAMPLE_1.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("final: \"\"\n"));

    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["apply", "O1-O2-U1-U2-", "--move", "r1:del:1"]), Some(2));
    assert_eq!(status(&["validate", "O1+"]), Some(1));
    assert_eq!(status(&["nope"]), Some(1));
}
