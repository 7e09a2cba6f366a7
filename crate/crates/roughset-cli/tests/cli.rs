//! End-to-end tests of the `roughset` binary: byte-stable golden outputs
//! for the worked examples, JSON shape checks for the verifiers, and the
//! exit-code contract (0 success, 1 domain/verification failure, 2 usage).

use std::path::PathBuf;
use std::process::Command;

fn run_with(args: &[&str], env: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_roughset"));
    cmd.args(args);
    cmd.env_remove("ROUGHSET_EPSILON");
    for (key, value) in env {
        cmd.env(key, value);
    }
    let out = cmd.output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
    )
}

fn run(args: &[&str]) -> (i32, String, String) {
    run_with(args, &[])
}

fn write_csv(content: &str) -> (tempfile::TempDir, PathBuf) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.csv");
    std::fs::write(&path, content).unwrap();
    (dir, path)
}

const EXAMPLE_PARTITION: &str = "a1|a2,a3|a4,a5";
const EXAMPLE_SET: &str = "a1,a2,a3,a4";

#[test]
fn approx_json_golden() {
    let (code, stdout, _) = run(&[
        "approx",
        "--partition",
        EXAMPLE_PARTITION,
        "--set",
        EXAMPLE_SET,
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "{\"lower\":\"a1,a2,a3\",\"upper\":\"a1,a2,a3,a4,a5\",\"boundary\":\"a4,a5\",\
         \"exact\":false,\"accuracy\":\"0.600000\",\"accuracy_exact\":\"3/5\",\
         \"roughness\":\"0.400000\",\"roughness_exact\":\"2/5\"}\n"
    );
}

#[test]
fn approx_pretty_golden() {
    let (code, stdout, _) = run(&[
        "approx",
        "--partition",
        EXAMPLE_PARTITION,
        "--set",
        EXAMPLE_SET,
        "--pretty",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "lower:     a1,a2,a3\n\
         upper:     a1,a2,a3,a4,a5\n\
         boundary:  a4,a5\n\
         exact:     no\n\
         accuracy:  0.600000 (3/5)\n\
         roughness: 0.400000 (2/5)\n"
    );
}

#[test]
fn approx_of_the_empty_set() {
    let (code, stdout, _) = run(&["approx", "--partition", EXAMPLE_PARTITION, "--set", ""]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "{\"lower\":\"\",\"upper\":\"\",\"boundary\":\"\",\"exact\":true,\
         \"accuracy\":\"1.00000\",\"accuracy_exact\":\"1/1\",\
         \"roughness\":\"0.00000\",\"roughness_exact\":\"0/1\"}\n"
    );
}

#[test]
fn roughness_beta_l_golden() {
    let (code, stdout, _) = run(&[
        "roughness",
        "--measure",
        "beta_L",
        "--partition",
        EXAMPLE_PARTITION,
        "--set",
        EXAMPLE_SET,
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "{\"measure\":\"beta_L\",\"value\":\"0.144000\",\"beta_P\":\"0.400000\",\
         \"beta_P_exact\":\"2/5\",\"h_partition\":\"9.00000\",\"h_trivial\":\"25.0000\"}\n"
    );
}

#[test]
fn roughness_beta_p_omits_the_decomposition() {
    let (code, stdout, _) = run(&[
        "roughness",
        "--measure",
        "beta_P",
        "--partition",
        EXAMPLE_PARTITION,
        "--set",
        EXAMPLE_SET,
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "{\"measure\":\"beta_P\",\"value\":\"0.400000\",\"beta_P\":\"0.400000\",\
         \"beta_P_exact\":\"2/5\"}\n"
    );
}

#[test]
fn roughness_all_strong_measures_on_the_worked_example() {
    // Six-significant-digit values of the five compositions on the same
    // partition/set pair.
    let cases = [
        ("beta_X", "0.167266"),
        ("beta_L", "0.144000"),
        ("beta_E", "0.137816"),
        ("beta_Eprime", "0.0551266"),
        ("beta_CG", "0.0320000"),
    ];
    for (measure, value) in cases {
        let (code, stdout, _) = run(&[
            "roughness",
            "--measure",
            measure,
            "--partition",
            EXAMPLE_PARTITION,
            "--set",
            EXAMPLE_SET,
        ]);
        assert_eq!(code, 0, "{measure}");
        let json: serde_json::Value = serde_json::from_str(&stdout).unwrap();
        assert_eq!(json["measure"], measure);
        assert_eq!(json["value"], value, "{measure}");
        assert_eq!(json["beta_P"], "0.400000");
    }
}

#[test]
fn roughness_pretty_golden() {
    let (code, stdout, _) = run(&[
        "roughness",
        "--measure",
        "beta_L",
        "--partition",
        EXAMPLE_PARTITION,
        "--set",
        EXAMPLE_SET,
        "--pretty",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "beta_L = 0.144000\n\
         \x20 beta_P     = 0.400000 (2/5)\n\
         \x20 h(pi)      = 9.00000\n\
         \x20 h(trivial) = 25.0000\n"
    );
}

#[test]
fn roughness_from_a_table_matches_the_literal_form() {
    let (_dir, path) = write_csv("id,shade\na1,x\na2,y\na3,y\na4,z\na5,z\n");
    let (code, from_table, _) = run(&[
        "roughness",
        "--measure",
        "beta_L",
        "--table",
        path.to_str().unwrap(),
        "--attrs",
        "shade",
        "--set",
        EXAMPLE_SET,
    ]);
    assert_eq!(code, 0);
    let (_, from_literal, _) = run(&[
        "roughness",
        "--measure",
        "beta_L",
        "--partition",
        EXAMPLE_PARTITION,
        "--set",
        EXAMPLE_SET,
    ]);
    assert_eq!(from_table, from_literal);
}

#[test]
fn table_partitions_golden() {
    let (_dir, path) = write_csv("id,shade\na1,x\na2,y\na3,y\na4,z\na5,z\n");
    let (code, stdout, _) = run(&[
        "table",
        "partitions",
        "--table",
        path.to_str().unwrap(),
        "--attrs",
        "shade",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "a1|a2,a3|a4,a5\n");
}

#[test]
fn table_partitions_with_joint_attributes() {
    let (_dir, path) = write_csv("id,s,t\na1,x,p\na2,x,q\na3,y,q\na4,y,p\na5,y,p\n");
    let (code, stdout, _) = run(&[
        "table",
        "partitions",
        "--table",
        path.to_str().unwrap(),
        "--attrs",
        "s,t",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "a1|a2|a3|a4,a5\n");
}

#[test]
fn enumerate_n3_golden() {
    let (code, stdout, _) = run(&["enumerate", "--n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "a1,a2,a3\na1,a2|a3\na1,a3|a2\na1|a2,a3\na1|a2|a3\n");
}

#[test]
fn enumerate_count_only() {
    let (code, stdout, _) = run(&["enumerate", "--n", "4", "--count-only"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "15\n");
    let (code, stdout, _) = run(&["enumerate", "--n", "10", "--count-only"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "115975\n");
}

#[test]
fn verify_roughness_passes_with_default_n() {
    let (code, stdout, _) = run(&["verify", "--kind", "roughness", "--measure", "beta_CG"]);
    assert_eq!(code, 0);
    let json: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(json["measure"], "beta_CG");
    assert_eq!(json["n"], 5);
    let axioms = json["axioms"].as_array().unwrap();
    assert_eq!(axioms.len(), 3);
    assert!(axioms.iter().all(|a| a["pass"] == true));
    assert!(json["elapsed_ms"].is_u64());
}

#[test]
fn verify_weak_and_propositions_pass() {
    let (code, _, _) = run(&["verify", "--kind", "weak", "--measure", "indicator"]);
    assert_eq!(code, 0);
    let (code, stdout, _) = run(&[
        "verify",
        "--kind",
        "propositions",
        "--measure",
        "beta_L",
        "--n",
        "4",
    ]);
    assert_eq!(code, 0);
    let json: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(json["axioms"].as_array().unwrap().len(), 8);
}

#[test]
fn verify_partition_measure_reports_the_n2_degeneracy() {
    // Graph connectivity is constant across both partitions of a
    // two-element universe, so strict monotonicity fails there.
    let (code, stdout, _) = run(&[
        "verify",
        "--kind",
        "partition-measure",
        "--measure",
        "graph-connectivity",
        "--n",
        "2",
    ]);
    assert_eq!(code, 1);
    let json: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(json["pass"], false);
    let violations = json["violations"].as_array().unwrap();
    assert!(!violations.is_empty());
    assert_eq!(violations[0]["kind"], "strict-monotonicity");

    // At n = 3 the degeneracy disappears.
    let (code, _, _) = run(&[
        "verify",
        "--kind",
        "partition-measure",
        "--measure",
        "graph-connectivity",
        "--n",
        "3",
    ]);
    assert_eq!(code, 0);
}

#[test]
fn verify_partition_measure_passes_for_all_five_at_default_n() {
    for measure in [
        "granulation",
        "co-entropy",
        "pseudo-co-entropy",
        "combination-granulation",
        "graph-connectivity",
    ] {
        let (code, stdout, _) = run(&["verify", "--kind", "partition-measure", "--measure", measure]);
        assert_eq!(code, 0, "{measure}");
        let json: serde_json::Value = serde_json::from_str(&stdout).unwrap();
        assert_eq!(json["pass"], true);
        assert_eq!(json["violations"].as_array().unwrap().len(), 0);
    }
}

#[test]
fn epsilon_override_is_honored() {
    // A malformed or negative tolerance is a usage error …
    for bad in ["abc", "-1", "nan"] {
        let (code, _, stderr) = run_with(
            &["verify", "--kind", "roughness", "--measure", "beta_P", "--n", "3"],
            &[("ROUGHSET_EPSILON", bad)],
        );
        assert_eq!(code, 2, "ROUGHSET_EPSILON={bad}");
        assert!(stderr.contains("ROUGHSET_EPSILON"), "{stderr}");
    }
    // … an explicit valid value works …
    let (code, _, _) = run_with(
        &["verify", "--kind", "roughness", "--measure", "beta_P", "--n", "3"],
        &[("ROUGHSET_EPSILON", "1e-9")],
    );
    assert_eq!(code, 0);
    // … and an absurdly coarse tolerance really is applied: at n = 4 the
    // value 1/2 falls within it, so inexact sets claim roughness zero and
    // zero-iff-exact breaks.
    let (code, stdout, _) = run_with(
        &["verify", "--kind", "roughness", "--measure", "beta_P", "--n", "4"],
        &[("ROUGHSET_EPSILON", "0.5")],
    );
    assert_eq!(code, 1);
    let json: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(json["axioms"][0]["id"], "zero-iff-exact");
    assert_eq!(json["axioms"][0]["pass"], false);
}

#[test]
fn usage_errors_exit_2() {
    // No subcommand.
    let (code, _, _) = run(&[]);
    assert_eq!(code, 2);
    // Unknown measure names.
    let (code, _, stderr) = run(&[
        "roughness",
        "--measure",
        "nope",
        "--partition",
        "a|b",
        "--set",
        "a",
    ]);
    assert_eq!(code, 2);
    assert!(stderr.contains("unknown roughness measure `nope`"));
    let (code, _, _) = run(&["verify", "--kind", "partition-measure", "--measure", "nope"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["verify", "--kind", "propositions", "--measure", "beta_P"]);
    assert_eq!(code, 2);
    // Missing required arguments.
    let (code, _, _) = run(&["approx", "--partition", "a|b"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["roughness", "--measure", "beta_P", "--set", "a"]);
    assert_eq!(code, 2);
    // --table requires --attrs; --partition conflicts with --table.
    let (code, _, _) = run(&[
        "roughness",
        "--measure",
        "beta_P",
        "--table",
        "x.csv",
        "--set",
        "a",
    ]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&[
        "roughness",
        "--measure",
        "beta_P",
        "--partition",
        "a|b",
        "--table",
        "x.csv",
        "--attrs",
        "s",
        "--set",
        "a",
    ]);
    assert_eq!(code, 2);
}

#[test]
fn domain_errors_exit_1() {
    // Malformed partition literal.
    let (code, _, stderr) = run(&["approx", "--partition", "a1||a2", "--set", ""]);
    assert_eq!(code, 1);
    assert!(stderr.contains("cannot parse"));
    // Subset element outside the universe.
    let (code, _, _) = run(&["approx", "--partition", "a|b", "--set", "c"]);
    assert_eq!(code, 1);
    // Missing table file.
    let (code, _, _) = run(&[
        "table",
        "partitions",
        "--table",
        "/nonexistent/t.csv",
        "--attrs",
        "s",
    ]);
    assert_eq!(code, 1);
    // Unknown attribute.
    let (_dir, path) = write_csv("id,s\na1,x\n");
    let (code, _, stderr) = run(&[
        "table",
        "partitions",
        "--table",
        path.to_str().unwrap(),
        "--attrs",
        "nope",
    ]);
    assert_eq!(code, 1);
    assert!(stderr.contains("unknown attribute"));
    // Beyond the enumeration bound / empty universe.
    let (code, _, _) = run(&["enumerate", "--n", "13"]);
    assert_eq!(code, 1);
    let (code, _, _) = run(&["verify", "--kind", "roughness", "--measure", "beta_P", "--n", "0"]);
    assert_eq!(code, 1);
}

#[test]
fn closed_pipe_ends_the_stream_quietly() {
    // `roughset enumerate | head` style usage: the reader going away must
    // not produce a panic or a nonzero exit.
    let mut child = Command::new(env!("CARGO_BIN_EXE_roughset"))
        .args(["enumerate", "--n", "10"])
        .stdout(std::process::Stdio::piped())
        .stderr(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    drop(child.stdout.take()); // close the read end before the 116k lines fit
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stderr.is_empty(), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn verify_pretty_layout() {
    let (code, stdout, _) = run(&[
        "verify",
        "--kind",
        "roughness",
        "--measure",
        "beta_E",
        "--n",
        "4",
        "--pretty",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("measure beta_E, n = 4: PASS"));
    assert!(stdout.contains("  zero-iff-exact: pass\n"));
    assert!(stdout.contains("  strict-order-monotonicity: pass\n"));
    assert!(stdout.contains("  relabeling-invariance: pass\n"));
}
