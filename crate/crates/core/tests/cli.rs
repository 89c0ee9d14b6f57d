use std::path::Path;
use std::process::{Command, Output};

use mtclab::cli::{EXIT_FOUND, EXIT_INPUT, EXIT_OK};

fn mtclab(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mtclab")).args(args).current_dir(dir).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn with_catalog() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&mtclab(dir.path(), &["examples-export", "--out", "catalog"])), EXIT_OK);
    dir
}

#[test]
fn validate_bundled_z3_is_clean() {
    let dir = with_catalog();
    let o = mtclab(dir.path(), &["validate", "catalog/z3.ring"]);
    assert_eq!(code(&o), EXIT_OK);
    assert!(stdout(&o).contains("valid"));
    let o = mtclab(dir.path(), &["--format", "machine", "validate", "catalog/z3.ring"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["violations"], serde_json::json!([]));
}

#[test]
fn validate_reports_a_broken_ring() {
    let dir = with_catalog();
    let path = dir.path().join("catalog/z3.ring");
    let text = std::fs::read_to_string(&path).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    // Drop one fusion entry: associativity and unit laws break.
    v["coeffs"].as_array_mut().unwrap().pop();
    std::fs::write(dir.path().join("broken.ring"), v.to_string()).unwrap();
    let o = mtclab(dir.path(), &["validate", "broken.ring"]);
    assert_eq!(code(&o), EXIT_FOUND, "{}", stdout(&o));
}

#[test]
fn classify_13_writes_the_golden_trace() {
    let dir = tempfile::tempdir().unwrap();
    let o = mtclab(dir.path(), &["classify", "--rank", "13", "--trace", "out.trace"]);
    assert_eq!(code(&o), EXIT_OK);
    assert!(stdout(&o).starts_with("rank 13: pointed"));
    let trace = std::fs::read_to_string(dir.path().join("out.trace")).unwrap();
    let golden =
        std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/rank13.trace")).unwrap();
    assert_eq!(trace, golden);
}

#[test]
fn classify_exit_codes_follow_the_verdict() {
    let dir = tempfile::tempdir().unwrap();
    for (rank, want, verdict) in
        [("15", EXIT_OK, "pointed"), ("17", EXIT_FOUND, "open"), ("21", EXIT_OK, "pointed-or-perfect")]
    {
        let o = mtclab(dir.path(), &["classify", "--rank", rank]);
        assert_eq!(code(&o), want, "rank {rank}");
        assert!(stdout(&o).starts_with(&format!("rank {rank}: {verdict}\n")), "{}", stdout(&o));
    }
}

#[test]
fn oracle_dims_rank_15() {
    let dir = tempfile::tempdir().unwrap();
    let o = mtclab(dir.path(), &["oracle-dims", "--rank", "15", "--bound", "99"]);
    assert_eq!(code(&o), EXIT_OK);
    assert_eq!(stdout(&o), "0 solutions\n");
}

#[test]
fn input_errors_exit_2() {
    let dir = with_catalog();
    std::fs::write(dir.path().join("junk.ring"), "{ not json").unwrap();
    let cases: &[&[&str]] = &[
        &["validate", "missing.ring"],
        &["validate", "junk.ring"],
        &["analyze", "junk.ring"],
        &["modular-verify", "catalog/z3.ring"],
        &["classify", "--rank", "14"],
        &["classify", "--rank", "101"],
        &["oracle-dims", "--rank", "14", "--bound", "99"],
        &["oracle-dims", "--rank", "15", "--bound", "98"],
        &["classify"],
        &["frobnicate"],
    ];
    for args in cases {
        let o = mtclab(dir.path(), args);
        assert_eq!(code(&o), EXIT_INPUT, "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?} gave no diagnostic");
    }
}

#[test]
fn input_errors_name_the_file() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("junk.ring"), "[1, 2").unwrap();
    let o = mtclab(dir.path(), &["validate", "junk.ring"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("junk.ring"));
}

#[test]
fn machine_output_is_byte_identical_across_runs() {
    let dir = with_catalog();
    let mut rings: Vec<String> = Vec::new();
    let mut modular: Vec<String> = Vec::new();
    for e in std::fs::read_dir(dir.path().join("catalog")).unwrap() {
        let name = format!("catalog/{}", e.unwrap().file_name().to_string_lossy());
        if name.ends_with(".ring") {
            rings.push(name);
        } else {
            modular.push(name);
        }
    }
    rings.sort();
    modular.sort();
    let mut commands: Vec<Vec<String>> = vec![
        [vec!["validate".to_string()], rings.clone()].concat(),
        [vec!["analyze".to_string()], rings.clone()].concat(),
        [vec!["modular-verify".to_string()], modular.clone()].concat(),
        vec!["oracle-dims".into(), "--rank".into(), "17".into(), "--bound".into(), "45".into()],
        vec!["examples-export".into(), "--out".into(), "again".into()],
    ];
    for r in [13, 15, 17, 19, 21, 23] {
        commands.push(vec!["classify".into(), "--rank".into(), r.to_string()]);
    }
    for cmd in commands {
        let mut args = vec!["--format", "machine"];
        args.extend(cmd.iter().map(String::as_str));
        let a = mtclab(dir.path(), &args);
        let b = mtclab(dir.path(), &args);
        assert_eq!(a.status, b.status, "{cmd:?}");
        assert_eq!(a.stdout, b.stdout, "{cmd:?}");
        assert!(serde_json::from_slice::<serde_json::Value>(&a.stdout).is_ok(), "{cmd:?}");
    }
    // Exported files are identical too.
    for name in rings.iter().chain(&modular) {
        let again = name.replacen("catalog/", "again/", 1);
        assert_eq!(std::fs::read(dir.path().join(name)).unwrap(), std::fs::read(dir.path().join(again)).unwrap());
    }
}

#[test]
fn step_budget_env_var_is_honoured() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_mtclab"))
        .args(["classify", "--rank", "15"])
        .env("MTCLAB_STEP_BUDGET", "3")
        .current_dir(dir.path())
        .output()
        .unwrap();
    // With too small a budget nothing may be refuted, so the verdict is open.
    assert_eq!(code(&o), EXIT_FOUND, "{}", stdout(&o));
}
