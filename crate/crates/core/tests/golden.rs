//! Golden files under tests/golden. Set `UPDATE_GOLDEN=1` to rewrite them.

use std::path::{Path, PathBuf};
use std::process::Command;

use mtclab::classifier::classify;

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn check_golden(name: &str, actual: &str) {
    let path = golden_dir().join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(golden_dir()).unwrap();
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("{}: {e} (run with UPDATE_GOLDEN=1 to create it)", path.display()));
    if expected != actual {
        let line = expected.lines().zip(actual.lines()).position(|(a, b)| a != b).unwrap_or(0);
        panic!(
            "{name} differs from the golden file at line {}:\n  expected: {:?}\n  actual:   {:?}",
            line + 1,
            expected.lines().nth(line),
            actual.lines().nth(line)
        );
    }
}

#[test]
fn classification_traces_match_golden() {
    for rank in [13, 15, 17, 19, 21, 23] {
        let c = classify(rank).unwrap();
        check_golden(&format!("rank{rank}.trace"), &c.trace_text());
    }
}

fn mtclab(dir: &Path, args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_mtclab")).args(args).current_dir(dir).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn exported() -> (tempfile::TempDir, Vec<String>, Vec<String>) {
    let dir = tempfile::tempdir().unwrap();
    let (code, _) = mtclab(dir.path(), &["examples-export", "--out", "catalog"]);
    assert_eq!(code, 0);
    let mut names: Vec<String> = std::fs::read_dir(dir.path().join("catalog"))
        .unwrap()
        .map(|e| format!("catalog/{}", e.unwrap().file_name().to_string_lossy()))
        .collect();
    names.sort();
    let rings = names.iter().filter(|n| n.ends_with(".ring")).cloned().collect();
    let modular = names.iter().filter(|n| n.ends_with(".modular")).cloned().collect();
    (dir, rings, modular)
}

#[test]
fn exported_catalog_reports_match_golden() {
    let (dir, rings, modular) = exported();
    assert_eq!(rings.len(), 9);
    assert_eq!(modular.len(), 6);

    for (cmd, files, golden) in [
        ("validate", &rings, "export_validate.json"),
        ("analyze", &rings, "export_analyze.json"),
        ("modular-verify", &modular, "export_modular_verify.json"),
    ] {
        let mut args = vec!["--format", "machine", cmd];
        args.extend(files.iter().map(String::as_str));
        let (code, out) = mtclab(dir.path(), &args);
        assert_eq!(code, 0, "{cmd} failed:\n{out}");
        check_golden(golden, &out);
    }
}
