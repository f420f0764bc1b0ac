use std::process::Command;

use proptest::prelude::*;
use serde_json::Value;
use unibranch_cli::{run, Outcome, EXIT_INVALID, EXIT_MISMATCH, EXIT_OK};

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("unibranch").chain(args.iter().copied()))
}

fn ok(args: &[&str]) -> String {
    let out = cli(args);
    assert_eq!(out.code, EXIT_OK, "{args:?}: {}", out.stderr);
    assert!(out.stderr.is_empty());
    out.stdout
}

#[test]
fn jump_examples() {
    let out = ok(&["jump", "--pairs", "2,3;5,11"]);
    assert!(out.lines().any(|l| l == "11/30"));

    let out = ok(&["jump", "--semigroup", "4,6,13"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.first(), Some(&"5/12"));
    assert_eq!(lines.last(), Some(&"25/26"));
    assert_eq!(lines.len(), 8);

    let out = ok(&["jump", "--pairs", "2,3;5,11", "--contributors"]);
    assert!(out.lines().any(|l| l == "11/30 {3,9}"));
}

#[test]
fn non_plane_semigroup_is_rejected() {
    let out = cli(&["jump", "--semigroup", "4,6"]);
    assert_eq!(out.code, EXIT_INVALID);
    assert!(out.stdout.is_empty());
    assert!(out.stderr.contains("gcd"), "{}", out.stderr);
}

#[test]
fn convert_examples() {
    assert_eq!(
        ok(&["convert", "--char", "4;6,7", "--to", "pairs"]),
        "2,3;2,3\n"
    );
    assert_eq!(
        ok(&["convert", "--pairs", "2,3;5,11", "--to", "semigroup"]),
        "10,15,36\n"
    );
    assert_eq!(
        ok(&["convert", "--semigroup", "5,7", "--to", "char"]),
        "5;7\n"
    );
    assert_eq!(
        ok(&[
            "convert",
            "--semigroup",
            "7,5,12,14",
            "--to",
            "characteristic"
        ]),
        "5;7\n"
    );
    assert_eq!(ok(&["convert", "--semigroup", "1", "--to", "pairs"]), "\n");
}

#[test]
fn tree_examples() {
    let weights = |args: &[&str]| {
        ok(args)
            .lines()
            .find(|l| l.starts_with("weights:"))
            .map(str::to_string)
    };
    assert_eq!(
        weights(&["tree", "--pairs", "5,7"]).as_deref(),
        Some("weights: 5 2 2 1 1")
    );
    assert_eq!(
        weights(&["tree", "--char", "4;6,7"]).as_deref(),
        Some("weights: 4 2 2 1 1")
    );

    let text = ok(&["tree", "--pairs", "5,7"]);
    assert!(text.contains("edges: 1-2:slant 2-3:horizontal 3-4:horizontal 4-5:vertical"));
    assert!(text.contains("relevant: 5\n"));
    assert!(text.contains("e: 5 7 14 20 35\n"));
    assert!(text.contains("k: 1 2 4 6 11\n"));
    assert!(text.contains("P_5 -> 4 3\n"));
}

#[test]
fn dot_output() {
    let dot = ok(&["tree", "--pairs", "2,3;5,11", "--format", "dot"]);
    assert!(dot.starts_with("digraph enriques {\n"));
    assert!(dot.ends_with("}\n"));
    let nodes = dot.lines().filter(|l| l.contains("[label=")).count();
    let edges = dot.lines().filter(|l| l.contains("->")).count();
    assert_eq!((nodes, edges), (9, 8));
    let relevant: Vec<&str> = dot
        .lines()
        .filter(|l| l.contains("relevant=true"))
        .collect();
    assert_eq!(relevant.len(), 2);
    assert!(relevant[0].starts_with("  P3 ") && relevant[1].starts_with("  P9 "));
    assert!(dot.contains("P1 -> P2 [kind=slant];"));
    assert!(dot.contains("P1 [label=\"P_1 (w=10)\"];"));

    let out = cli(&["jump", "--pairs", "2,3", "--format", "dot"]);
    assert_eq!(out.code, EXIT_INVALID);
    assert!(out.stdout.is_empty());
}

#[test]
fn json_schema() {
    let out = ok(&["jump", "--pairs", "2,3;5,11", "--format", "json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(
        keys,
        [
            "input",
            "pairs",
            "semigroup",
            "characteristic",
            "qbar",
            "jumping_numbers",
            "lct"
        ]
    );
    assert_eq!(v["pairs"], "2,3;5,11");
    assert_eq!(v["semigroup"], "10,15,36");
    assert_eq!(v["characteristic"], "10;15,21");
    assert_eq!(v["qbar"], serde_json::json!([3, 36]));
    assert_eq!(v["lct"], "1/6");
    let hit = v["jumping_numbers"]
        .as_array()
        .unwrap()
        .iter()
        .find(|n| n["num"] == 11 && n["den"] == 30)
        .unwrap();
    assert_eq!(hit["contributors"], serde_json::json!([3, 9]));
}

#[test]
fn big_inputs_stay_exact() {
    // 2^70 + 1 and 2^71 + 1 are coprime and overflow i64.
    let p = "1180591620717411303425";
    let q = "2361183241434822606849";
    let out = ok(&[
        "convert",
        "--pairs",
        &format!("2,3;{p},{q}"),
        "--to",
        "semigroup",
    ]);
    assert!(out.trim().split(',').count() == 3);
    let back = ok(&["convert", "--semigroup", out.trim(), "--to", "pairs"]);
    assert_eq!(back.trim(), format!("2,3;{p},{q}"));
}

#[test]
fn oversized_requests_are_refused() {
    let pairs = "2,3;1180591620717411303425,2361183241434822606849";
    for sub in ["jump", "tree"] {
        let out = cli(&[sub, "--pairs", pairs]);
        assert_eq!(out.code, EXIT_INVALID);
        assert!(out.stdout.is_empty());
        assert!(out.stderr.contains("input too large"), "{}", out.stderr);
    }
}

#[test]
fn verify_flag() {
    let out = ok(&["jump", "--pairs", "3,4;2,5", "--verify"]);
    assert_eq!(out, ok(&["jump", "--pairs", "3,4;2,5"]));
}

#[test]
fn error_paths_are_clean() {
    for args in [
        vec!["jump", "--pairs", "2,3;5"],
        vec!["jump", "--pairs", "3,6"],
        vec!["jump", "--semigroup", "4,x,13"],
        vec!["jump", "--char", "4;6,8"],
        vec!["jump", "--semigroup", "0,3"],
        vec!["jump", "--semigroup", "3,4,5"],
        vec!["convert", "--pairs", "5,3", "--to", "semigroup"],
        vec!["tree", "--char", "4;6;7"],
        vec!["tree", "--pairs", "2,3", "--format", "json"],
        vec!["jump", "--pairs", "2,3", "--semigroup", "2,3"],
        vec!["jump"],
        vec!["bogus"],
    ] {
        let out = cli(&args);
        assert_eq!(out.code, EXIT_INVALID, "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
    let out = cli(&["jump", "--semigroup", "4,x,13"]);
    assert!(out.stderr.contains("byte 2"), "{}", out.stderr);
    let out = cli(&["jump", "--char", "4;6,8"]);
    assert!(out.stderr.contains("divisible by m_2"), "{}", out.stderr);
}

#[test]
fn selftest_paths() {
    let small = [
        "--max-g",
        "2",
        "--max-p",
        "3",
        "--max-q",
        "7",
        "--seeds",
        "4",
        "--rset-max-q",
        "10",
    ];
    let mut args = vec!["selftest"];
    args.extend(small);
    let out = ok(&args);
    assert!(out.contains("formula/oracle agreement"));

    args.extend(["--inject-fault", "rset"]);
    let out = cli(&args);
    assert_eq!(out.code, EXIT_MISMATCH);
    assert!(out.stdout.is_empty());
    assert!(
        out.stderr.contains("first counterexample"),
        "{}",
        out.stderr
    );
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_unibranch");
    let out = Command::new(bin)
        .args(["jump", "--pairs", "2,3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "5/6\n");
    let out = Command::new(bin)
        .args(["jump", "--semigroup", "4,6"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

fn pair_list() -> impl Strategy<Value = String> {
    prop::collection::vec(
        (2i64..=5)
            .prop_flat_map(|p| (Just(p), p + 1..=13))
            .prop_filter("coprime", |&(p, q)| num_integer::gcd(p, q) == 1),
        1..=3,
    )
    .prop_map(|v| {
        v.iter()
            .map(|(p, q)| format!("{p},{q}"))
            .collect::<Vec<_>>()
            .join(";")
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn json_strings_reproduce_the_report(pairs in pair_list()) {
        let json = ok(&["jump", "--pairs", &pairs, "--format", "json"]);
        let v: Value = serde_json::from_str(&json).unwrap();
        let strip = |mut v: Value| {
            v.as_object_mut().unwrap().remove("input");
            v
        };
        let reference = strip(v.clone());
        for (flag, field) in [("--pairs", "pairs"), ("--semigroup", "semigroup"), ("--char", "characteristic")] {
            let text = v[field].as_str().unwrap();
            let again: Value = serde_json::from_str(&ok(&["jump", flag, text, "--format", "json"])).unwrap();
            prop_assert_eq!(strip(again), reference.clone());
        }
    }

    #[test]
    fn output_is_deterministic(pairs in pair_list()) {
        for args in [
            vec!["jump", "--pairs", &pairs, "--contributors"],
            vec!["tree", "--pairs", &pairs, "--format", "dot"],
            vec!["tree", "--pairs", &pairs],
        ] {
            prop_assert_eq!(cli(&args), cli(&args));
        }
    }
}
