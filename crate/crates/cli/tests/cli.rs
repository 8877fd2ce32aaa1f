//! End-to-end checks of the binary: exit codes and the shape of the
//! structured output document.

use std::process::Command;

fn run(args: &[&str]) -> (serde_json::Value, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_parcont"))
        .args(args)
        .current_dir(concat!(env!("CARGO_MANIFEST_DIR"), "/../.."))
        .output()
        .expect("binary runs");
    let stdout = String::from_utf8(out.stdout).unwrap();
    let stderr = String::from_utf8(out.stderr).unwrap();
    let doc = if stdout.is_empty() {
        serde_json::Value::Null
    } else {
        serde_json::from_str(&stdout).expect("stdout is one JSON document")
    };
    (doc, stderr, out.status.code().unwrap_or(-1))
}

#[test]
fn gb_reports_the_reduced_basis() {
    let (doc, _, code) = run(&["gb", "families/quadratic.fam"]);
    assert_eq!(code, 0);
    assert_eq!(doc["command"], "gb");
    assert_eq!(doc["result"]["basis"][0], "a*x^2 + b*x + c");
    assert_eq!(doc["family"]["vars"][0], "x");
    assert!(doc["timings"].as_object().unwrap().is_empty());
}

#[test]
fn count_command_matches_known_values() {
    let (doc, _, code) = run(&["count", "families/circle_system.fam", "--at", "a=2"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["count"], 2);

    let (doc, _, code) = run(&["count", "families/circle_system.fam", "--at", "a=1"]);
    assert_eq!(code, 0, "a guarded point is still a valid count query");
    assert_eq!(doc["result"]["count"], 0);
}

#[test]
fn specialize_guard_failure_exits_one() {
    let (doc, _, code) = run(&["specialize", "families/quadratic.fam", "--at", "a=1,b=-2,c=1"]);
    assert_eq!(code, 1);
    assert_eq!(doc["result"]["guard"], "failed");
    let vanishing = doc["result"]["vanishing"].as_array().unwrap();
    assert!(vanishing.iter().any(|v| v["coefficient"] == "4*a*c - b^2"));

    let (doc, _, code) = run(&["specialize", "families/quadratic.fam", "--at", "a=1,b=3,c=2"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["basis"][0], "x^2 + 3*x + 2");
}

#[test]
fn input_errors_exit_two() {
    let (_, stderr, code) = run(&["gb", "families/does_not_exist.fam"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("error"));

    let (_, stderr, code) = run(&["count", "families/quadratic.fam", "--at", "a=1"]);
    assert_eq!(code, 2, "missing parameter assignments are input errors");
    assert!(stderr.contains("missing assignment"));

    let (_, stderr, code) = run(&["count", "families/quadratic.fam", "--at", "a=1,b=2,c=x"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("invalid rational"));
}

#[test]
fn solve_reports_roots_and_regular_count() {
    let (doc, _, code) = run(&["solve", "families/quadratic.fam", "--at", "a=1,b=3,c=2"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["regular_count"], 2);
    let mut roots: Vec<f64> = doc["result"]["solutions"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s[0]["re"].as_f64().unwrap())
        .collect();
    roots.sort_by(f64::total_cmp);
    assert!((roots[0] + 2.0).abs() < 1e-9);
    assert!((roots[1] + 1.0).abs() < 1e-9);
}

#[test]
fn track_command_reaches_target_roots() {
    let (doc, _, code) = run(&[
        "track",
        "families/quadratic.fam",
        "--from",
        "a=1,b=3,c=2",
        "--to",
        "a=1,b=-5,c=6",
    ]);
    assert_eq!(code, 0);
    let paths = doc["result"]["paths"].as_array().unwrap();
    assert_eq!(paths.len(), 2);
    let mut ends: Vec<f64> = paths.iter().map(|p| p["end"][0]["re"].as_f64().unwrap()).collect();
    ends.sort_by(f64::total_cmp);
    assert!(paths.iter().all(|p| p["status"] == "converged"));
    assert!((ends[0] - 2.0).abs() < 1e-6);
    assert!((ends[1] - 3.0).abs() < 1e-6);
}

#[test]
fn degenerate_family_exits_one() {
    let dir = tempdir();
    let path = dir.join("flat.fam");
    std::fs::write(&path, "vars: x\nparams: p1\nf1 = p1\n").unwrap();
    let (doc, _, code) = run(&["discriminant", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(doc["result"]["generic_count"], 0);
    assert!(doc["result"]["degenerate"].is_string());
}

#[test]
fn timings_flag_adds_wall_clock() {
    let (doc, _, _) = run(&["--timings", "gb", "families/quadratic.fam"]);
    assert!(doc["timings"]["wall_ms"].as_f64().unwrap() >= 0.0);
}

fn tempdir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("parcont-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
