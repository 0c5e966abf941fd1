//! Black-box tests of the command-line binary: outputs, determinism
//! and exit statuses.

use std::process::{Command, Output};

fn qdec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qdec"))
        .args(args)
        .output()
        .expect("run qdec binary")
}

fn stdout(args: &[&str]) -> String {
    let out = qdec(args);
    assert!(out.status.success(), "qdec {args:?} failed: {out:?}");
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn list_lex_small() {
    assert_eq!(
        stdout(&["list", "--n", "4", "--q", "1", "--order", "lex"]),
        "0000\n0001\n0010\n1000\n1001\n1100\n1110\n1111\n"
    );
}

#[test]
fn list_orders_agree_on_the_set() {
    let mut lex: Vec<String> = stdout(&["list", "--n", "7", "--q", "1"])
        .lines()
        .map(str::to_string)
        .collect();
    for order in ["brgc", "gray1"] {
        let mut other: Vec<String> = stdout(&["list", "--n", "7", "--q", "1", "--order", order])
            .lines()
            .map(str::to_string)
            .collect();
        other.sort();
        lex.sort();
        assert_eq!(lex, other, "order {order}");
    }
}

#[test]
fn list_gray1_requires_q_1() {
    let out = qdec(&["list", "--n", "4", "--q", "2", "--order", "gray1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("q = 1"));
}

#[test]
fn count_matches_reference_values() {
    assert_eq!(stdout(&["count", "--n", "6", "--q", "1"]), "21\n");
    assert_eq!(stdout(&["count", "--n", "4", "--q", "2"]), "13\n");
}

#[test]
fn count_by_ones_rows() {
    assert_eq!(
        stdout(&["count", "--n", "4", "--q", "1", "--by-ones"]),
        "0,1\n1,3\n2,2\n3,1\n4,1\n"
    );
}

#[test]
fn series_json_output() {
    let text = stdout(&[
        "series", "--kind", "fq", "--q", "1", "--n-max", "6", "--format", "json",
    ]);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["kind"], "fq");
    assert_eq!(value["q"], 1);
    let coeffs: Vec<&str> = value["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap())
        .collect();
    assert_eq!(coeffs, ["1", "2", "3", "5", "8", "13", "21"]);
}

#[test]
fn series_csv_output() {
    let text = stdout(&["series", "--kind", "dq", "--q", "2", "--n-max", "4"]);
    assert_eq!(text, "n,coeff\n0,1\n1,0\n2,0\n3,-1\n4,1\n");
}

#[test]
fn map_examples() {
    assert_eq!(
        stdout(&["map", "--dir", "phi", "--q", "2", "--word", "1100"]),
        "0011\n"
    );
    assert_eq!(
        stdout(&["map", "--dir", "phi-inv", "--q", "2", "--word", "0011"]),
        "1100\n"
    );
    assert_eq!(
        stdout(&["map", "--dir", "psi", "--q", "1", "--word", "0"]),
        "001\n"
    );
    assert_eq!(
        stdout(&["map", "--dir", "psi-inv", "--q", "1", "--word", "001"]),
        "0\n"
    );
}

#[test]
fn map_domain_errors_exit_1() {
    for args in [
        ["map", "--dir", "phi-inv", "--q", "1", "--word", "0011"],
        ["map", "--dir", "psi-inv", "--q", "1", "--word", "0101"],
        ["map", "--dir", "phi", "--q", "1", "--word", "11"],
        ["map", "--dir", "phi", "--q", "1", "--word", "01x1"],
    ] {
        let out = qdec(&args);
        assert_eq!(out.status.code(), Some(1), "args {args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["list", "--n", "4", "--frobnicate"],
        vec!["list"],
        vec!["count", "--n", "4", "--q", "0"],
        vec!["series", "--kind", "nope", "--n-max", "3"],
        vec!["nonsense"],
    ] {
        let out = qdec(&args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
    }
}

#[test]
fn verify_reports_pass() {
    let text = stdout(&["verify", "--n", "8", "--q", "1", "--order", "brgc"]);
    assert!(text.starts_with("pass "), "got {text}");
    let text = stdout(&["verify", "--n", "8", "--q", "1", "--order", "gray1"]);
    assert!(text.contains("max_distance=1"), "got {text}");
}

#[test]
fn graph_dot_output() {
    assert_eq!(
        stdout(&["graph", "--n", "1"]),
        "graph run_graph_1 {\n  node [shape=circle];\n  \"000\";\n  \"100\";\n  \"000\" -- \"100\";\n}\n"
    );
    let text = stdout(&["graph", "--n", "3", "--with-path"]);
    assert_eq!(text.matches("style=bold").count(), 4);
    assert_eq!(text.matches("style=dashed").count(), 1);
}

#[test]
fn graph_dot_file_and_summary() {
    let dir = std::env::temp_dir().join("qdec-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("r3.dot");
    let text = stdout(&[
        "graph",
        "--n",
        "3",
        "--with-path",
        "--dot",
        file.to_str().unwrap(),
    ]);
    assert_eq!(text, "vertices=5 edges=5 cycle=false\n");
    let written = std::fs::read_to_string(&file).unwrap();
    assert!(written.starts_with("graph run_graph_3 {"));
    std::fs::remove_file(&file).unwrap();
}

#[test]
fn search_finds_small_codes() {
    let text = stdout(&["search", "--n", "3", "--q", "2"]);
    assert!(text.starts_with("found\n"), "got {text}");
    assert_eq!(text.lines().count(), 1 + 7); // header + |W^2_3| = 7 words
}

#[test]
fn search_budget_env_variable() {
    let out = Command::new(env!("CARGO_BIN_EXE_qdec"))
        .args(["search", "--n", "5", "--q", "2"])
        .env("QDEC_SEARCH_BUDGET", "1")
        .output()
        .expect("run qdec binary");
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("inconclusive"), "got {text}");
}

#[test]
fn output_is_deterministic() {
    let cases: [&[&str]; 3] = [
        &["list", "--n", "9", "--q", "1", "--order", "brgc"],
        &["list", "--n", "9", "--q", "1", "--order", "gray1"],
        &["graph", "--n", "5", "--with-path"],
    ];
    for args in cases {
        assert_eq!(stdout(args), stdout(args), "args {args:?}");
    }
}
