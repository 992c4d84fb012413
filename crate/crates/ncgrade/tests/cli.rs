//! End-to-end tests of the `ncgrade` binary: output schemas, exit
//! codes, determinism, the environment degree cap, and one negative
//! control per check.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ncgrade"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is JSON: {e}\nstdout: {}\nstderr: {}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

/// Writes a config file into a fresh temp dir and returns (dir, path);
/// the dir must stay alive while the path is used.
fn config_file(content: &str) -> (tempfile::TempDir, PathBuf) {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("config.json");
    std::fs::write(&path, content).expect("writes config");
    (dir, path)
}

fn run_with_config(subcmd: &[&str], content: &str) -> Output {
    let (_dir, path) = config_file(content);
    let mut cmd = bin();
    cmd.args(subcmd).arg("--config").arg(&path);
    cmd.output().expect("binary runs")
}

fn without_wall_time(mut v: Value) -> Value {
    match &mut v {
        Value::Object(map) => {
            map.remove("wall_time_ms");
            if let Some(Value::Array(reports)) = map.get_mut("reports") {
                for r in reports {
                    if let Value::Object(m) = r {
                        m.remove("wall_time_ms");
                    }
                }
            }
            v
        }
        _ => v,
    }
}

// ---------------------------------------------------------------------------
// check command basics
// ---------------------------------------------------------------------------

#[test]
fn check_reports_the_documented_schema() {
    let out = run(&["check", "lemma-1.6-completion", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    for key in ["name", "pass", "details", "assumptions", "wall_time_ms"] {
        assert!(report.get(key).is_some(), "report has '{key}'");
    }
    assert_eq!(report["name"], "lemma-1.6-completion");
    assert_eq!(report["pass"], true);
    assert_eq!(report["details"]["rule_count"], 5);
    let notes = report["assumptions"].as_array().unwrap();
    assert!(
        notes.iter().any(|a| a.as_str().unwrap().contains("verified up to degree 8")),
        "bounded-verification language present: {notes:?}"
    );
}

#[test]
fn check_output_is_deterministic_modulo_wall_time() {
    let first = run(&["check", "prop-1.12-case-3b", "--format", "json"]);
    let second = run(&["check", "prop-1.12-case-3b", "--format", "json"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(
        without_wall_time(stdout_json(&first)),
        without_wall_time(stdout_json(&second))
    );
}

#[test]
fn max_degree_flag_overrides_the_default() {
    let out = run(&[
        "check",
        "lemma-1.6-basis",
        "--max-degree",
        "6",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["details"]["max_degree"], 6);
}

#[test]
fn environment_cap_clamps_and_is_reported() {
    let out = bin()
        .args(["check", "lemma-1.6-basis", "--format", "json"])
        .env("NCGRADE_MAX_DEGREE", "6")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    assert_eq!(report["details"]["max_degree"], 6);
    let notes = report["assumptions"].as_array().unwrap();
    assert!(
        notes.iter().any(|a| a.as_str().unwrap().contains("capped at 6")),
        "cap note present: {notes:?}"
    );
}

#[test]
fn environment_cap_below_the_relation_degree_is_a_config_error() {
    let out = bin()
        .args(["check", "lemma-1.6-completion"])
        .env("NCGRADE_MAX_DEGREE", "2")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_environment_cap_is_a_config_error() {
    let out = bin()
        .args(["check", "lemma-1.6-completion"])
        .env("NCGRADE_MAX_DEGREE", "six")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn config_file_and_cli_name_must_agree() {
    let out = run_with_config(&["check", "lemma-1.7"], r#"{"check": "hilbert"}"#);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("hilbert"), "names the conflict: {err}");
}

#[test]
fn config_file_with_unknown_fields_is_rejected() {
    let out = run_with_config(
        &["check", "hilbert"],
        r#"{"check": "hilbert", "max_degre": 6}"#,
    );
    assert_eq!(out.status.code(), Some(2), "typo'd field must not be ignored");
}

#[test]
fn check_accepts_a_full_config_file() {
    let out = run_with_config(
        &["check", "hilbert", "--format", "json"],
        r#"{
            "check": "hilbert",
            "max_degree": 8,
            "presentation": {"generators": [{"name": "x"}, {"name": "y"}],
                             "relations": [], "label": "free"},
            "numerator": [1],
            "denominator": [1, -2]
        }"#,
    );
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    assert_eq!(report["pass"], true);
    assert_eq!(report["details"]["presentations"][0]["label"], "free");
}

// ---------------------------------------------------------------------------
// suite command
// ---------------------------------------------------------------------------

#[test]
fn default_suite_passes_and_orders_reports_by_name() {
    let out = run(&["suite", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let suite = stdout_json(&out);
    assert_eq!(suite["all_pass"], true);
    let names: Vec<&str> = suite["reports"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["name"].as_str().unwrap())
        .collect();
    assert_eq!(names.len(), 14, "all checks run by default");
    let mut sorted = names.clone();
    sorted.sort_unstable();
    assert_eq!(names, sorted, "aggregate order is fixed by check name");
}

#[test]
fn suite_config_runs_listed_checks_and_fails_on_any_red() {
    let out = run_with_config(
        &["suite", "--format", "json"],
        r#"[
            {"check": "lemma-1.6-completion", "max_degree": 3},
            {"check": "hilbert", "max_degree": 6}
        ]"#,
    );
    assert_eq!(out.status.code(), Some(1), "one failing check fails the suite");
    let suite = stdout_json(&out);
    assert_eq!(suite["all_pass"], false);
    let reports = suite["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 2);
    assert_eq!(reports[0]["name"], "hilbert");
    assert_eq!(reports[0]["pass"], true);
    assert_eq!(reports[1]["name"], "lemma-1.6-completion");
    assert_eq!(reports[1]["pass"], false);
}

#[test]
fn suite_text_output_prints_one_line_per_check() {
    let out = run_with_config(
        &["suite"],
        r#"{"checks": [{"check": "lemma-1.6-completion"}, {"check": "lemma-1.7", "max_degree": 6}]}"#,
    );
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("PASS lemma-1.6-completion"));
    assert!(text.contains("PASS lemma-1.7"));
    assert!(text.contains("suite: all 2 checks passed"));
}

#[test]
fn suite_output_is_deterministic_modulo_wall_time() {
    let cfg = r#"[{"check": "prop-1.12-case-2a"}, {"check": "lemma-1.6-completion"}]"#;
    let first = run_with_config(&["suite", "--format", "json"], cfg);
    let second = run_with_config(&["suite", "--format", "json"], cfg);
    assert_eq!(
        without_wall_time(stdout_json(&first)),
        without_wall_time(stdout_json(&second))
    );
}

// ---------------------------------------------------------------------------
// one negative control per check
// ---------------------------------------------------------------------------

#[test]
fn negative_control_completion_bound_too_low_fails() {
    let out = run(&["check", "lemma-1.6-completion", "--max-degree", "3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn negative_control_basis_fails_on_another_algebra() {
    let out = run_with_config(
        &["check", "lemma-1.6-basis"],
        r#"{"check": "lemma-1.6-basis", "max_degree": 6,
            "presentation": {"builtin": "H"}}"#,
    );
    assert_eq!(out.status.code(), Some(1), "different normal words must fail");
}

#[test]
fn negative_control_left_subword_bound_below_pattern_is_config_error() {
    let out = run(&["check", "lemma-1.7", "--max-degree", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn negative_control_independence_fails_in_a_commutative_quotient() {
    let out = run_with_config(
        &["check", "lemma-1.9-independence"],
        r#"{"check": "lemma-1.9-independence", "max_degree": 6,
            "presentation": {
                "generators": [{"name": "x"}, {"name": "y"}],
                "relations": [[
                    {"coeff": "1", "word": ["x", "y"]},
                    {"coeff": "-1", "word": ["y", "x"]}
                ]],
                "label": "commutative plane"
            }}"#,
    );
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn negative_control_certificates_reject_a_wrong_component_assignment() {
    let out = run_with_config(
        &["check", "lemma-2.2"],
        r#"{"check": "lemma-2.2", "grading": {"u": "rho", "d": "r"}}"#,
    );
    assert_eq!(
        out.status.code(),
        Some(2),
        "module generators land in the wrong components"
    );
}

#[test]
fn negative_control_worked_example_fails_on_the_wrong_group() {
    let out = run_with_config(
        &["check", "example-2.1"],
        r#"{"check": "example-2.1", "group": {"builtin": "dihedral", "n": 3}}"#,
    );
    assert_eq!(out.status.code(), Some(1), "order-6 dihedral grading fails");
}

#[test]
fn negative_control_quaternion_check_fails_on_an_abelian_group() {
    let out = run_with_config(
        &["check", "prop-1.4-q8"],
        r#"{"check": "prop-1.4-q8", "max_degree": 6,
            "group": {"builtin": "cyclic", "n": 4},
            "grading": {"u": "g", "d": "g"}}"#,
    );
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn negative_control_dihedral_check_rejects_non_involution_degrees() {
    let out = run_with_config(
        &["check", "prop-1.10"],
        r#"{"check": "prop-1.10", "grading": {"x": "rho", "y": "r"}}"#,
    );
    assert_eq!(out.status.code(), Some(2), "deg x must be an involution");
}

#[test]
fn negative_control_parameter_samples_outside_the_case_are_rejected() {
    let out = run_with_config(
        &["check", "prop-1.12-case-2a"],
        r#"{"check": "prop-1.12-case-2a", "samples": ["1"]}"#,
    );
    assert_eq!(out.status.code(), Some(2), "beta = 1 is outside case 2a");

    let out = run_with_config(
        &["check", "prop-1.12-case-3b"],
        r#"{"check": "prop-1.12-case-3b", "samples": [["0", "1", "2"]]}"#,
    );
    assert_eq!(out.status.code(), Some(2), "alpha = 0 is outside case 3b");
}

#[test]
fn negative_control_oracle_check_rejects_unknown_builtins() {
    let out = run_with_config(
        &["check", "oracle-equivalence"],
        r#"{"check": "oracle-equivalence", "presentation": {"builtin": "nope"}}"#,
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn negative_control_hilbert_fails_on_a_wrong_series() {
    let out = run_with_config(
        &["check", "hilbert"],
        r#"{"check": "hilbert", "max_degree": 6,
            "numerator": [1], "denominator": [1, -2]}"#,
    );
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn negative_control_beta_zero_is_rejected_everywhere() {
    let out = run_with_config(
        &["check", "hilbert"],
        r#"{"check": "hilbert",
            "presentation": {"builtin": "downup", "alpha": "1", "beta": "0"}}"#,
    );
    assert_eq!(out.status.code(), Some(2));
}

// ---------------------------------------------------------------------------
// direct task subcommands
// ---------------------------------------------------------------------------

#[test]
fn nf_reduces_a_relation_to_zero() {
    let out = run_with_config(
        &["nf", "--format", "json"],
        r#"{
            "presentation": {"builtin": "downup", "alpha": "0", "beta": "1"},
            "poly": [
                {"coeff": "1", "word": ["u", "u", "d"]},
                {"coeff": "-1", "word": ["d", "u", "u"]}
            ],
            "max_degree": 6
        }"#,
    );
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["normal_form"], serde_json::json!([]), "relations reduce to zero");
    assert_eq!(v["normal_form_display"], "0");
}

#[test]
fn basis_lists_dimensions_and_words() {
    let out = run_with_config(
        &["basis", "--format", "json"],
        r#"{"presentation": {"builtin": "F"}, "max_degree": 4}"#,
    );
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["dims"], serde_json::json!([1, 2, 4, 6, 9]));
    let degree1 = v["degrees"][1]["words"].as_array().unwrap();
    assert_eq!(degree1.len(), 2);
}

#[test]
fn hilbert_task_exits_one_on_mismatch() {
    let ok = run_with_config(
        &["hilbert", "--format", "json"],
        r#"{"presentation": {"builtin": "downup", "alpha": "2", "beta": "-1"},
            "max_degree": 8}"#,
    );
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(stdout_json(&ok)["match"], true);

    let bad = run_with_config(
        &["hilbert", "--format", "json"],
        r#"{"presentation": {"builtin": "downup", "alpha": "2", "beta": "-1"},
            "max_degree": 8, "numerator": [1], "denominator": [1, -2]}"#,
    );
    assert_eq!(bad.status.code(), Some(1));
    assert_eq!(stdout_json(&bad)["match"], false);
}

#[test]
fn complete_prints_the_rule_list() {
    let out = run_with_config(
        &["complete", "--format", "json"],
        r#"{"presentation": {"builtin": "F"}, "max_degree": 8}"#,
    );
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["rule_count"], 5);
    assert_eq!(v["confluent"], true);
    assert_eq!(v["rules"][0]["lhs"], serde_json::json!(["y", "x", "y"]));
    assert_eq!(
        v["rules"][0]["rhs"],
        serde_json::json!([{"coeff": "1", "word": ["x", "x", "x"]}])
    );
}

#[test]
fn fixed_ring_lists_the_invariant_basis() {
    let out = run_with_config(
        &["fixed-ring", "--format", "json"],
        r#"{
            "presentation": {"builtin": "downup", "alpha": "0", "beta": "1"},
            "group": {"builtin": "dihedral", "n": 4},
            "grading": {"u": "r", "d": "rho"},
            "max_degree": 8
        }"#,
    );
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["dims"], serde_json::json!([1, 0, 1, 0, 4, 0, 4, 0, 9]));
    assert_eq!(v["degrees"][2]["words"], serde_json::json!(["u^2"]));
}

#[test]
fn fixed_ring_rejects_inadmissible_gradings() {
    let out = run_with_config(
        &["fixed-ring", "--format", "json"],
        r#"{
            "presentation": {"builtin": "downup", "alpha": "2", "beta": "-1"},
            "group": {"builtin": "dihedral", "n": 4},
            "grading": {"u": "r", "d": "rho"},
            "max_degree": 6
        }"#,
    );
    assert_eq!(out.status.code(), Some(2), "mixed-degree relations are rejected");
}

#[test]
fn min_gens_reports_the_generator_set() {
    let out = run_with_config(
        &["min-gens", "--format", "json"],
        r#"{
            "presentation": {"builtin": "downup", "alpha": "0", "beta": "1"},
            "group": {"builtin": "dihedral", "n": 4},
            "grading": {"u": "r", "d": "rho"},
            "max_degree": 8
        }"#,
    );
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["generator_degrees"], serde_json::json!([2, 4, 4, 4]));
    assert_eq!(v["obstruction_flag"], true);
    assert_eq!(v["complete_to"], 8);
}

#[test]
fn tasks_reject_configs_missing_required_fields() {
    // nf without a poly.
    let out = run_with_config(
        &["nf"],
        r#"{"presentation": {"builtin": "F"}}"#,
    );
    assert_eq!(out.status.code(), Some(2));

    // min-gens without a grading.
    let out = run_with_config(
        &["min-gens"],
        r#"{"presentation": {"builtin": "downup", "alpha": "0", "beta": "1"}}"#,
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tasks_honor_the_environment_cap() {
    let (_dir, path) = config_file(r#"{"presentation": {"builtin": "F"}, "max_degree": 10}"#);
    let out = bin()
        .args(["basis", "--format", "json", "--config"])
        .arg(&path)
        .env("NCGRADE_MAX_DEGREE", "5")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["max_degree"], 5);
    assert_eq!(v["dims"], serde_json::json!([1, 2, 4, 6, 9, 12]));
}
