//! End-to-end tests that drive the compiled `shpf` binary.
//!
//! Exit-code contract: 0 = success, 1 = a verification suite found a failing
//! identity, 2 = usage error. Every bundled identity holds, so no invocation
//! of the released binary can exercise exit code 1 through `verify`
//! (triggering it would require corrupting the library); the tests below pin
//! the 0 and 2 paths and the exact output formats.

use std::process::{Command, Output};

fn shpf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shpf"))
        .args(args)
        .output()
        .expect("binary should run")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout should be UTF-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr should be UTF-8")
}

fn expect_ok(args: &[&str]) -> String {
    let out = shpf(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?} should succeed, stderr: {}",
        stderr(&out)
    );
    stdout(&out)
}

#[test]
fn expand_text_matches_hand_computed_tables() {
    let table = [
        (1, "2*P1"),
        (2, "6*P1^2"),
        (3, "20*P1^3 + 2*P3"),
        (4, "70*P1^4 + 20*P3*P1"),
        (5, "252*P1^5 + 140*P3*P1^2 + 2*P5"),
        (6, "924*P1^6 + 840*P3*P1^3 + 28*P5*P1 + 14*P3^2"),
    ];
    for (n, expected) in table {
        let n = n.to_string();
        let got = expect_ok(&["expand", "--n", &n, "--basis", "vodd"]);
        assert_eq!(got, format!("{expected}\n"), "n = {n}");
    }

    assert_eq!(expect_ok(&["expand", "--n", "2", "--basis", "p"]), "6*p[1,1]\n");
    assert_eq!(
        expect_ok(&["expand", "--n", "4", "--basis", "vany"]),
        "16*P1^4 + 48*P2*P1^2 + 16*P3*P1 + 8*P2^2 + 2*P4\n"
    );
    assert_eq!(
        expect_ok(&["expand", "--n", "3", "--basis", "P"]),
        "22*P[3] + 20*P[2,1]\n"
    );
}

#[test]
fn expand_defaults_to_power_sum_basis() {
    assert_eq!(
        expect_ok(&["expand", "--n", "3"]),
        expect_ok(&["expand", "--n", "3", "--basis", "p"])
    );
}

#[test]
fn expand_latex_output() {
    assert_eq!(
        expect_ok(&["expand", "--n", "4", "--basis", "vodd", "--format", "latex"]),
        "70P_1^4 + 20P_3P_1\n"
    );
    assert_eq!(
        expect_ok(&["expand", "--n", "3", "--basis", "p", "--format", "latex"]),
        "\\frac{2}{3}p_{(3)} + \\frac{64}{3}p_{(1,1,1)}\n"
    );
}

#[test]
fn expand_json_lists_terms_in_canonical_order() {
    let got = expect_ok(&["expand", "--n", "2", "--basis", "P", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&got).expect("valid JSON");
    assert_eq!(doc["command"], "expand");
    assert_eq!(doc["n"], 2);
    assert_eq!(doc["basis"], "P");
    assert_eq!(doc["terms"], serde_json::json!([{"partition": [2], "coeff": "6"}]));

    let got = expect_ok(&["expand", "--n", "6", "--basis", "vodd", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&got).expect("valid JSON");
    let partitions: Vec<&serde_json::Value> = doc["terms"]
        .as_array()
        .expect("terms array")
        .iter()
        .map(|t| &t["partition"])
        .collect();
    // JSON uses the canonical partition order (largest part first within a
    // weight), not the display order.
    assert_eq!(
        partitions,
        [
            &serde_json::json!([5, 1]),
            &serde_json::json!([3, 3]),
            &serde_json::json!([3, 1, 1, 1]),
            &serde_json::json!([1, 1, 1, 1, 1, 1]),
        ]
    );
}

#[test]
fn usage_errors_exit_two_with_a_message() {
    let bad: &[&[&str]] = &[
        &["expand", "--n", "6", "--basis", "q"],
        &["expand", "--n", "6", "--basis", "Vodd"],
        &["expand", "--n", "0"],
        &["expand", "--n", "17", "--basis", "p"],
        &["expand", "--n", "11", "--basis", "P"],
        &["verify", "--suite", "nonsense"],
        &["verify", "--suite", "routes", "--max-n", "11"],
        &["nspf", "--n", "0"],
        &["nspf", "--n", "9"],
        &["nspf", "--n", "7", "--list-blocks"],
        &["schroeder"],
        &["frobnicate"],
    ];
    for args in bad {
        let out = shpf(args);
        assert_eq!(out.status.code(), Some(2), "{args:?} should be a usage error");
        assert!(
            stderr(&out).contains("error"),
            "{args:?} should explain itself on stderr"
        );
    }
}

#[test]
fn basis_names_are_case_sensitive() {
    // `p` is the power-sum basis, `P` the Schur P basis; they differ.
    let lower = expect_ok(&["expand", "--n", "4", "--basis", "p"]);
    let upper = expect_ok(&["expand", "--n", "4", "--basis", "P"]);
    assert_ne!(lower, upper);
    assert!(lower.contains("p["));
    assert!(upper.contains("P["));
}

#[test]
fn max_degree_raises_the_cap_with_a_warning() {
    let out = shpf(&["expand", "--n", "11", "--basis", "P", "--max-degree", "11"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr(&out).contains("warning"));
    assert!(stdout(&out).contains("P[11]"));

    // The raise applies to verify bounds as well.
    let out = shpf(&[
        "verify", "--suite", "dim", "--max-n", "11", "--max-degree", "11",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert!(stderr(&out).contains("warning"));

    // Without the raise the same bound is rejected.
    let out = shpf(&["verify", "--suite", "dim", "--max-n", "11"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_single_suite_prints_every_check() {
    let got = expect_ok(&["verify", "--suite", "schroeder", "--max-n", "6"]);
    assert!(got.starts_with("suite schroeder (bound 6)\n"));
    assert_eq!(got.matches("PASS").count(), 6);
    assert!(!got.contains("FAIL"));
    assert!(got.contains("1806"));
    assert!(got.ends_with("verified: 1 suite(s), 6 checks, all pass\n"));
}

#[test]
fn verify_all_covers_every_suite() {
    let got = expect_ok(&["verify", "--max-n", "2", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&got).expect("valid JSON");
    assert_eq!(doc["passed"], true);
    let suites = doc["suites"].as_array().expect("suites array");
    assert_eq!(suites.len(), 10);
    for s in suites {
        assert_eq!(s["passed"], true, "suite {}", s["suite"]);
        assert!(!s["checks"].as_array().expect("checks").is_empty());
    }
}

#[test]
fn verify_latex_emits_a_table() {
    let got = expect_ok(&[
        "verify", "--suite", "catalan", "--max-n", "2", "--format", "latex",
    ]);
    assert!(got.starts_with("\\begin{tabular}"));
    assert!(got.ends_with("\\end{tabular}\n"));
    assert!(got.contains("& pass"));
    assert!(!got.contains("fail"));
}

#[test]
fn json_output_is_deterministic_and_round_trips() {
    let commands: &[&[&str]] = &[
        &["expand", "--n", "8", "--basis", "P", "--format", "json"],
        &["nspf", "--n", "4", "--list-blocks", "--format", "json"],
        &["verify", "--suite", "pexp", "--max-n", "4", "--format", "json"],
        &["schroeder", "--n", "10", "--format", "json"],
    ];
    for args in commands {
        let first = expect_ok(args);
        let second = expect_ok(args);
        assert_eq!(first, second, "{args:?} should be deterministic");
        let doc: serde_json::Value = serde_json::from_str(&first).expect("valid JSON");
        let reprinted = serde_json::to_string_pretty(&doc).expect("serializes") + "\n";
        assert_eq!(first, reprinted, "{args:?} should survive a parse/print cycle");
    }
}

#[test]
fn census_of_length_two_lists_all_six_blocks() {
    let got = expect_ok(&["nspf", "--n", "2", "--list-blocks"]);
    assert_eq!(
        got,
        "length 2: 12 colored parking functions in 6 blocks\n\
         \x20 shape (1,1): 4 blocks of size 2\n\
         \x20 shape (2): 2 blocks of size 2\n\
         blocks:\n\
         \x20 [1] shape (2): {11, 11*}\n\
         \x20 [1*] shape (2): {1*1, 1*1*}\n\
         \x20 [12] shape (1,1): {12, 21}\n\
         \x20 [1*2] shape (1,1): {1*2, 21*}\n\
         \x20 [12*] shape (1,1): {12*, 2*1}\n\
         \x20 [1*2*] shape (1,1): {1*2*, 2*1*}\n"
    );
}

#[test]
fn census_of_length_one_has_two_singleton_blocks() {
    let got = expect_ok(&["nspf", "--n", "1", "--list-blocks"]);
    assert_eq!(
        got,
        "length 1: 2 colored parking functions in 2 blocks\n\
         \x20 shape (1): 2 blocks of size 1\n\
         blocks:\n\
         \x20 [1] shape (1): {1}\n\
         \x20 [1*] shape (1): {1*}\n"
    );
}

#[test]
fn census_without_listing_reports_shape_statistics() {
    let got = expect_ok(&["nspf", "--n", "7"]);
    assert!(got.starts_with("length 7: 33554432 colored parking functions in "));
    assert!(got.contains("shape (1,1,1,1,1,1,1): 128 blocks of size 5040\n"));
    assert!(!got.contains("blocks:\n"));
}

#[test]
fn census_json_lists_members_as_colored_entries() {
    let got = expect_ok(&["nspf", "--n", "2", "--list-blocks", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&got).expect("valid JSON");
    assert_eq!(doc["total"], "12");
    let blocks = doc["blocks"].as_array().expect("blocks array");
    assert_eq!(blocks.len(), 6);
    assert_eq!(
        blocks[0]["members"],
        serde_json::json!([
            [{"value": 1, "color": "blue"}, {"value": 1, "color": "blue"}],
            [{"value": 1, "color": "blue"}, {"value": 1, "color": "red"}],
        ])
    );
    // Without --list-blocks the members are omitted entirely.
    let got = expect_ok(&["nspf", "--n", "2", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&got).expect("valid JSON");
    assert!(doc.get("blocks").is_none() || doc["blocks"].is_null());
}

#[test]
fn schroeder_outputs() {
    assert_eq!(expect_ok(&["schroeder", "--n", "6"]), "r_6 = 1806\n");
    assert_eq!(expect_ok(&["schroeder", "--n", "0"]), "r_0 = 1\n");
    assert_eq!(
        expect_ok(&["schroeder", "--n", "6", "--format", "latex"]),
        "$r_{6} = 1806$\n"
    );
    let got = expect_ok(&["schroeder", "--n", "7", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&got).expect("valid JSON");
    assert_eq!(doc["value"], "8558");
}

#[test]
fn help_and_version_exit_zero() {
    for args in [&["--help"][..], &["expand", "--help"][..], &["--version"][..]] {
        let out = shpf(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
    }
    assert!(stdout(&shpf(&["--version"])).contains("shpf"));
}
