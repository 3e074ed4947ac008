use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinspread"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

#[test]
fn spin_reports_degree() {
    let o = run(&["spin", "--n", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("degree: 8"));
    let o = run(&["spin", "--n", "9"]);
    assert!(stdout(&o).contains("degree: 16"));
    assert_eq!(run(&["spin", "--n", "2"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["spread"]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["quadtype", "--parts", "4"]).status.code(), Some(2));
    assert_eq!(
        run(&["verify", "--spread", "/nonexistent/spread.json"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["spread", "--m", "4", "--extend"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn quadtype_answers() {
    let o = run(&["quadtype", "--parts", "4,2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "false");
    assert_eq!(stdout(&run(&["quadtype", "--parts", "4,3"])).trim(), "true");
}

#[test]
fn spread_files_verify_and_carry_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let out = path(dir.path(), "sigma3.json");
    let o = run(&["spread", "--m", "3", "--out", &out]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("members: 7"));
    assert!(dir.path().join("sigma3.cert.json").exists());

    let ext = path(dir.path(), "ext3.json");
    let o = run(&["spread", "--m", "3", "--extend", "--out", &ext]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("members: 9") && text.contains("complete: true"));
    assert!(!text.contains("FAIL"));

    let o = run(&["verify", "--spread", &ext]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("FAIL"));

    let cert: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("ext3.cert.json")).unwrap())
            .unwrap();
    assert_eq!(cert["command"], "spread");
    assert!(cert["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["pass"] == true));
}

#[test]
fn tampered_file_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let ext = path(dir.path(), "ext3.json");
    assert_eq!(
        run(&["spread", "--m", "3", "--extend", "--out", &ext])
            .status
            .code(),
        Some(0)
    );
    let mut j: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&ext).unwrap()).unwrap();
    let row = j["members"][2][0].as_str().unwrap().to_string();
    let flipped: String = row
        .chars()
        .enumerate()
        .map(|(i, c)| {
            if i == 7 {
                if c == '0' {
                    '1'
                } else {
                    '0'
                }
            } else {
                c
            }
        })
        .collect();
    j["members"][2][0] = serde_json::Value::String(flipped);
    std::fs::write(&ext, serde_json::to_string(&j).unwrap()).unwrap();
    let o = run(&["verify", "--spread", &ext]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn a9_and_group_actions() {
    let dir = tempfile::tempdir().unwrap();
    let a9 = path(dir.path(), "a9.json");
    let o = run(&["a9", "--out", &a9]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("complete: true"));
    for spec in ["elemabelian:9", "cyclic:9"] {
        let o = run(&["action", "--group", spec, "--spread", &a9]);
        assert_eq!(o.status.code(), Some(0), "{spec}");
        assert!(stdout(&o).contains("regular: true"), "{spec}");
    }
    let o = run(&["action", "--group", "quaternion8", "--spread", &a9]);
    assert!(stdout(&o).contains("regular: false"));
    assert_eq!(
        run(&["action", "--group", "cyclic:6", "--spread", &a9])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["action", "--group", "nonsense", "--spread", &a9])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (path(dir.path(), "a.json"), path(dir.path(), "b.json"));
    let first = run(&["--seed", "5", "a9", "--out", &a]);
    let second = run(&["--seed", "5", "a9", "--out", &b]);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(
        std::fs::read(dir.path().join("a.cert.json")).unwrap(),
        std::fs::read(dir.path().join("b.cert.json")).unwrap()
    );
    let strip = |o: &Output| {
        stdout(o)
            .lines()
            .filter(|l| !l.starts_with("wrote "))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(strip(&first), strip(&second));
}
