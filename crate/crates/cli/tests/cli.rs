//! End-to-end tests of the command surface: file formats, verdicts and
//! the exit-code contract.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_simplicial-lines"))
}

fn run_in(dir: &Path, args: &[&str]) -> Output {
    bin()
        .args(args)
        .current_dir(dir)
        .env_remove("SL_MAX_FACETS")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("exit code")
}

fn write(dir: &Path, name: &str, contents: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

const TRIANGLE_PENDANT: &str = "4 4\n1 2\n1 3\n2 3\n3 4\n";

#[test]
fn gen_writes_both_formats() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["gen", "wheel", "4", "w5.json"]);
    assert_eq!(code(&out), 0);
    let value: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("w5.json")).unwrap())
            .unwrap();
    assert_eq!(value["n"], 5);
    assert_eq!(value["edges"].as_array().unwrap().len(), 8);

    let out = run_in(dir.path(), &["gen", "friendship", "2", "f2.txt"]);
    assert_eq!(code(&out), 0);
    let text = std::fs::read_to_string(dir.path().join("f2.txt")).unwrap();
    assert!(text.starts_with("5 6\n"));
    assert_eq!(text.lines().count(), 7);
}

#[test]
fn gen_rejects_bad_parameters() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["gen", "prism", "0", "p.txt"]);
    assert_eq!(code(&out), 2);
    let out = run_in(dir.path(), &["gen", "moebius", "3", "m.txt"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn analyze_reports_worked_example() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "fig.txt", TRIANGLE_PENDANT);
    let out = run_in(dir.path(), &["analyze", "fig.txt", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["theorems"]["t2"]["status"], "PASS");
    assert_eq!(report["theorems"]["t2"]["line_euler"], 1);
    assert_eq!(report["theorems"]["t2"]["gallai_euler"], 0);
    assert_eq!(report["theorems"]["t2"]["anti_gallai_count"], 1);

    // Byte-identical output across runs.
    let again = run_in(dir.path(), &["analyze", "fig.txt", "--format", "json"]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn analyze_skips_verdicts_on_isolated_vertices() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "iso.txt", "3 1\n1 2\n");
    let out = run_in(dir.path(), &["analyze", "iso.txt", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["theorems"]["t1"]["status"], "SKIPPED");
    assert_eq!(report["theorems"]["t2"]["status"], "SKIPPED");
}

#[test]
fn analyze_input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["analyze", "missing.txt"]);
    assert_eq!(code(&out), 2);

    write(dir.path(), "dup.txt", "2 2\n1 2\n2 1\n");
    let out = run_in(dir.path(), &["analyze", "dup.txt"]);
    assert_eq!(code(&out), 2);
    let out = run_in(dir.path(), &["analyze", "dup.txt", "--dedupe"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn shell_search_verdicts_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    run_in(dir.path(), &["gen", "cycle", "5", "c5.json"]);
    run_in(dir.path(), &["gen", "wheel", "7", "w8.json"]);
    run_in(dir.path(), &["gen", "friendship", "3", "f3.json"]);

    let out = run_in(
        dir.path(),
        &["shell", "c5.json", "--complex", "line", "--mode", "search", "--format", "json"],
    );
    assert_eq!(code(&out), 4);
    let cert: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(cert["verdict"], "NOT_SHELLABLE");
    assert_eq!(cert["refutation"]["exhaustive"], true);

    let out = run_in(
        dir.path(),
        &["shell", "w8.json", "--complex", "anti-gallai", "--mode", "search", "--format", "json"],
    );
    assert_eq!(code(&out), 0);
    let cert: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(cert["verdict"], "SHELLABLE");
    assert_eq!(cert["ordering"].as_array().unwrap().len(), 7);

    let out = run_in(dir.path(), &["shell", "f3.json", "--complex", "anti-gallai"]);
    assert_eq!(code(&out), 4);
}

#[test]
fn shell_bound_contract() {
    let dir = tempfile::tempdir().unwrap();
    run_in(dir.path(), &["gen", "friendship", "4", "f4.json"]);

    // 28 facets, no ordering file: refuse with exit 6.
    let out = run_in(dir.path(), &["shell", "f4.json", "--complex", "line"]);
    assert_eq!(code(&out), 6);

    // Raised bound: the greedy pass finds an order.
    let out = run_in(
        dir.path(),
        &["shell", "f4.json", "--complex", "line", "--max-facets", "28"],
    );
    assert_eq!(code(&out), 0);

    // Environment override works the same way.
    let out = bin()
        .args(["shell", "f4.json", "--complex", "line"])
        .current_dir(dir.path())
        .env("SL_MAX_FACETS", "28")
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
}

#[test]
fn shell_verify_mode() {
    let dir = tempfile::tempdir().unwrap();
    run_in(dir.path(), &["gen", "cycle", "5", "c5.json"]);

    // The bad cycle ordering fails at position 4: inconclusive.
    write(
        dir.path(),
        "bad.json",
        "[[1,2,3],[2,3,4],[1,2,5],[3,4,5],[1,4,5]]",
    );
    let out = run_in(
        dir.path(),
        &[
            "shell", "c5.json", "--complex", "line", "--mode", "verify",
            "--ordering-file", "bad.json", "--format", "json",
        ],
    );
    assert_eq!(code(&out), 5);
    let cert: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(cert["verdict"], "INCONCLUSIVE");
    let failing: Vec<u64> = cert["steps"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|s| s["ok"] == false)
        .map(|s| s["position"].as_u64().unwrap())
        .collect();
    assert_eq!(failing, vec![4]);

    // Index form of an ordering file; a valid listing for the wheel
    // anti-Gallai complex in sorted order is its rim order.
    run_in(dir.path(), &["gen", "wheel", "6", "w7.json"]);
    write(dir.path(), "rim.json", "[0, 1, 2, 3, 4, 5]");
    let out = run_in(
        dir.path(),
        &[
            "shell", "w7.json", "--complex", "anti-gallai", "--mode", "verify",
            "--ordering-file", "rim.json",
        ],
    );
    assert_eq!(code(&out), 0);

    let out = run_in(
        dir.path(),
        &["shell", "c5.json", "--complex", "line", "--mode", "verify"],
    );
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_suites() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(
        dir.path(),
        &["verify", "--suite", "wheel-euler", "--max-n", "12"],
    );
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.matches("\n  PASS").count(), 9);

    let out = run_in(
        dir.path(),
        &["verify", "--suite", "t2-exhaustive", "--max-n", "4"],
    );
    assert_eq!(code(&out), 0);

    let out = run_in(dir.path(), &["verify", "--suite", "no-such-suite"]);
    assert_eq!(code(&out), 2);
}
