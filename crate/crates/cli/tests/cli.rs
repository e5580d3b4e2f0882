//! End-to-end tests of the binary: exit codes, stable text output, and the
//! JSON report schema.

use std::process::{Command, Output};

fn sepclass(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sepclass"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

#[test]
fn verify_equal_exits_zero_with_json_schema() {
    let out = sepclass(&[
        "verify",
        "main-2",
        "--order",
        "60",
        "--format",
        "json",
        "--no-timing",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["identity"], "main-2");
    assert_eq!(report["order"], 60);
    assert_eq!(report["marker_bound"], 0);
    assert_eq!(report["status"], "equal");
    assert_eq!(report["first_mismatch"], serde_json::Value::Null);
    assert!(report.get("millis").is_none(), "--no-timing drops millis");
}

#[test]
fn verify_includes_timing_by_default() {
    let out = sepclass(&["verify", "jsum", "--order", "20", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert!(report["millis"].is_u64());
}

#[test]
fn verify_text_line_is_timing_free() {
    let out = sepclass(&["verify", "euler-2", "--order", "30"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_of(&out),
        "euler-2: equal (order=30, marker_bound=30)\n"
    );
}

#[test]
fn unknown_identity_is_a_usage_error() {
    let out = sepclass(&["verify", "main-9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_subcommand_is_a_usage_error() {
    let out = sepclass(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_all_runs_every_identity_and_is_deterministic() {
    let args = [
        "verify-all",
        "--order",
        "12",
        "--format",
        "json",
        "--no-timing",
    ];
    let first = sepclass(&args);
    assert_eq!(first.status.code(), Some(0));
    let reports: Vec<serde_json::Value> =
        serde_json::from_str(&stdout_of(&first)).unwrap();
    assert_eq!(reports.len(), 23);
    assert!(reports.iter().all(|r| r["status"] == "equal"));
    // identical invocations are bit-identical
    let second = sepclass(&args);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn verify_all_text_summary_is_deterministic() {
    let out = sepclass(&["verify-all", "--order", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.lines().count() == 24, "23 reports plus a summary");
    assert!(text.ends_with("all 23 identities equal\n"));
    let again = sepclass(&["verify-all", "--order", "8"]);
    assert_eq!(out.stdout, again.stdout, "default output is bit-identical");
}

#[test]
fn enumerate_partitions_golden() {
    let out = sepclass(&["enumerate", "partitions", "--weight", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "4\n3+1\n2+2\n2+1+1\n1+1+1+1\n");
}

#[test]
fn enumerate_family_members_by_weight() {
    let out = sepclass(&["enumerate", "od_ed", "--weight", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "6\n5+1\n4+2\n");
}

#[test]
fn enumerate_o4_contains_the_paper_members() {
    let out = sepclass(&["enumerate", "O", "--parts", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 16);
    assert!(lines.contains(&"2,2,1~,1"));
    assert!(lines.contains(&"4~,3~,2~,1~"));
}

#[test]
fn enumerate_count_summary_as_json() {
    let out = sepclass(&["enumerate", "G1", "--parts", "5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let summary: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(summary["family"], "G1");
    assert_eq!(summary["m"], 5);
    assert_eq!(summary["count"], 32);
}

#[test]
fn enumerate_overpartitions_streams_all_decorations() {
    let out = sepclass(&["enumerate", "overpartitions", "--weight", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "3\n3~\n2,1\n2~,1\n2,1~\n2~,1~\n1,1,1\n1~,1,1\n");
}

#[test]
fn enumerate_wrong_selector_is_usage_error() {
    assert_eq!(
        sepclass(&["enumerate", "O", "--weight", "4"]).status.code(),
        Some(2)
    );
    assert_eq!(
        sepclass(&["enumerate", "partitions", "--parts", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        sepclass(&["enumerate", "mystery", "--weight", "4"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn basis_matches_paper_and_modulus_matters() {
    let out = sepclass(&[
        "basis",
        "od_ed",
        "--modulus",
        "2",
        "--max-parts",
        "3",
        "--check-against-paper",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("m=2 w=4 3+1"));
    assert!(text.trim_end().ends_with("OK: extracted basis matches paper"));

    // with modulus 1 the extracted basis collapses and the diff is reported
    let out = sepclass(&[
        "basis",
        "od_ed",
        "--modulus",
        "1",
        "--max-parts",
        "2",
        "--check-against-paper",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout_of(&out).contains("DIFF at m=1"));
}

#[test]
fn basis_json_emits_separability_report() {
    let out = sepclass(&["basis", "ed_od", "--max-parts", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["family"], "ed_od");
    assert_eq!(report["k"], 2);
    assert_eq!(report["violations"], serde_json::json!([]));
}

#[test]
fn streaming_enumeration_survives_a_closed_pipe() {
    use std::io::{BufRead, BufReader};
    use std::process::Stdio;
    // ~35k lines, far past the pipe buffer; drop the reader after one line
    let mut child = Command::new(env!("CARGO_BIN_EXE_sepclass"))
        .args(["enumerate", "overpartitions", "--weight", "30"])
        .stdout(Stdio::piped())
        .spawn()
        .expect("spawns");
    {
        let stdout = child.stdout.take().unwrap();
        let mut first = String::new();
        BufReader::new(stdout).read_line(&mut first).unwrap();
        assert_eq!(first.trim_end(), "30");
        // reader dropped here, closing the pipe
    }
    let status = child.wait().unwrap();
    assert!(status.success(), "broken pipe must not panic: {status:?}");
}

#[test]
fn table_csv_layout() {
    let out = sepclass(&["table", "D_o", "--max-n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("m,n,count"));
    assert!(text.contains("1,1,1\n"));
    assert!(text.contains("2,4,1\n")); // D_o(2,4) = 1, namely (3,1)
    let out = sepclass(&["table", "p_ou_ed", "--max-n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("1,1,1\n"));
    let out = sepclass(&["table", "q_bogus", "--max-n", "3"]);
    assert_eq!(out.status.code(), Some(2));
}
