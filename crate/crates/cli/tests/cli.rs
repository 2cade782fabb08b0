//! End-to-end tests of the `partid` binary: exit codes, golden reports,
//! and flag handling.

use std::path::Path;
use std::process::{Command, Output};

fn partid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_partid"))
        .args(args)
        .output()
        .expect("failed to launch partid")
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(path).expect("missing golden file")
}

const SMALL: &[&str] = &["verify", "--max-n", "3", "--s", "1..2", "--checks", "main,reduced"];

#[test]
fn small_json_report_matches_golden() {
    let out = partid(&[SMALL, &["--format", "json"]].concat());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden("small.json"));
}

#[test]
fn small_text_report_matches_golden() {
    let out = partid(&[SMALL, &["--format", "text"]].concat());
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden("small.txt"));
}

#[test]
fn duration_goes_to_stderr_not_stdout() {
    let out = partid(SMALL);
    let stdout = String::from_utf8(out.stdout).unwrap();
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(!stdout.contains("duration"));
    assert!(stderr.contains("# duration (non-canonical):"));
}

#[test]
fn output_flag_writes_the_same_bytes_as_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let args: Vec<&str> = [SMALL, &["--format", "json"]].concat();

    let direct = partid(&args);
    let to_file = partid(
        &[args.as_slice(), &["--output", path.to_str().unwrap()]].concat(),
    );
    assert!(to_file.status.success());
    assert!(to_file.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), direct.stdout);
}

#[test]
fn usage_errors_exit_with_code_2() {
    let bad_invocations: &[&[&str]] = &[
        &["verify", "--s", "6..1"],                 // empty range
        &["verify", "--s", "0..3"],                 // s must start at 1
        &["verify", "--s", "7"],                    // not lo..hi
        &["verify", "--max-n", "0"],                // empty grid
        &["verify", "--checks", "bogus"],           // unknown family
        &["verify", "--jobs", "0"],                 // zero workers
        &["verify", "--oracle-cap", "0"],           // zero cap
        &["verify", "--format", "yaml"],            // unknown format
        &["frobnicate"],                            // unknown subcommand
    ];
    for args in bad_invocations {
        let out = partid(args);
        assert_eq!(
            out.status.code(),
            Some(2),
            "expected usage error for {:?}, stderr: {}",
            args,
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

#[test]
fn max_n_one_collapses_the_main_grid_to_one_cell_per_s() {
    let out = partid(&["verify", "--max-n", "1", "--s", "1..2", "--checks", "main", "--format", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let results = doc["results"].as_array().unwrap();
    assert_eq!(results.len(), 2);
    for (row, s) in results.iter().zip([1, 2]) {
        assert_eq!(row["params"], serde_json::json!({"n": 1, "r": 1, "s": s}));
    }
}

#[test]
fn duplicate_check_selections_run_once() {
    let once = partid(&["verify", "--max-n", "2", "--s", "1..1", "--checks", "main", "--format", "json"]);
    let twice = partid(&["verify", "--max-n", "2", "--s", "1..1", "--checks", "main,main", "--format", "json"]);
    let parse = |o: &Output| -> serde_json::Value {
        serde_json::from_slice(&o.stdout).unwrap()
    };
    assert_eq!(
        parse(&once)["results"].as_array().unwrap().len(),
        parse(&twice)["results"].as_array().unwrap().len()
    );
}

#[test]
fn worker_count_does_not_change_results() {
    let base: &[&str] = &["verify", "--max-n", "4", "--checks", "main,chu", "--format", "json"];
    let auto = partid(base);
    let serial = partid(&[base, &["--jobs", "1"]].concat());
    let four = partid(&[base, &["--jobs", "4"]].concat());
    let results = |o: &Output| -> serde_json::Value {
        serde_json::from_slice::<serde_json::Value>(&o.stdout).unwrap()["results"].clone()
    };
    assert_eq!(results(&auto), results(&serial));
    assert_eq!(results(&auto), results(&four));
}

#[test]
fn negative_control_fails_with_witness_and_exit_1() {
    let out = partid(&[
        "verify",
        "--max-n",
        "2",
        "--s",
        "1..2",
        "--checks",
        "main",
        "--negative-control",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let results = doc["results"].as_array().unwrap();
    let failures: Vec<_> = results
        .iter()
        .filter(|r| r["status"] == "fail")
        .collect();
    assert!(!failures.is_empty(), "the control must trip somewhere");
    for f in &failures {
        assert!(f["witness"].is_string(), "fail rows carry a witness");
    }
    // s = 1 cells are untouched by the perturbation, so some rows still pass
    assert!(results.iter().any(|r| r["status"] == "pass"));
    assert_eq!(doc["config"]["negative_control"], serde_json::json!(true));
}
