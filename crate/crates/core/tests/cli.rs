use std::io::Write;
use std::process::{Command, Output};

fn permrel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_permrel"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn classify_exits_zero() {
    let out = permrel(&["--n", "3", "--l", "2", "--perm", "(1 2 3)", "classify"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"semi_regular\":true"), "{text}");
}

#[test]
fn malformed_cycle_is_a_usage_error() {
    let out = permrel(&["--n", "3", "--l", "2", "--perm", "(1 2", "classify"]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8(out.stderr).unwrap().contains("unclosed"));
    assert_eq!(code(&permrel(&["--n", "3", "classify"])), 1);
    assert_eq!(code(&permrel(&["--n", "3", "--l", "2", "frobnicate"])), 1);
}

#[test]
fn verify_json_schema() {
    let out = permrel(&[
        "--n", "2", "--l", "2", "--perm", "(1 2)", "--format", "json", "verify",
    ]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["config_echo"]["n"], 2);
    let results = v["results"].as_array().unwrap();
    assert!(results.iter().all(|r| r["status"] == "pass"));
    for key in ["check", "status", "data"] {
        assert!(results.iter().all(|r| r.get(key).is_some()));
    }
    assert_eq!(v["timings"].as_array().unwrap().len(), results.len());
}

#[test]
fn failed_check_exits_two() {
    let mut file = tempfile();
    writeln!(file.1, "n = 3\nl = 2\nperm = (1 2)\nstate_cap = 10").unwrap();
    let out = permrel(&["--config", file.0.to_str().unwrap(), "growth"]);
    assert_eq!(code(&out), 2, "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn config_file_and_flag_override() {
    let mut file = tempfile();
    writeln!(
        file.1,
        "# cyclic group\nn = 3\nl = 2\nperm = \"(1 2 3)\"\nformat = json"
    )
    .unwrap();
    let path = file.0.to_str().unwrap();
    let out = permrel(&["--config", path, "--l", "3", "classify"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["config_echo"]["l"], 3);
    assert_eq!(v["config_echo"]["perms"][0], "(1 2 3)");
}

#[test]
fn word_problem_and_cosets() {
    let out = permrel(&[
        "--n", "2", "--l", "2", "--perm", "(1 2)", "wp", "x1 x2", "x2 x1", "--mode", "monoid",
    ]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("verdict: equal"));
    let out = permrel(&["--n", "2", "--l", "2", "--perm", "(1 2)", "wp", "x1", "x2"]);
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("verdict: distinct"));
    let out = permrel(&["--n", "2", "--l", "2", "--perm", "(1 2)", "cosets"]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "coset\tx1\tx1^-1\tx2\tx2^-1\n1\t1\t1\t2\t2\n2\t2\t2\t1\t1\n"
    );
}

#[test]
fn reversible_subcommand() {
    let out = permrel(&["--format", "json", "reversible", "ab", "ba"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        v["results"][0]["data"]["reversibility"]["verdict"],
        "counterexample"
    );
    assert_eq!(code(&permrel(&["reversible"])), 1);
}

fn tempfile() -> (std::path::PathBuf, std::fs::File) {
    use std::sync::atomic::{AtomicUsize, Ordering};
    static NEXT: AtomicUsize = AtomicUsize::new(0);
    let path = std::env::temp_dir().join(format!(
        "permrel-test-{}-{}.conf",
        std::process::id(),
        NEXT.fetch_add(1, Ordering::Relaxed)
    ));
    let file = std::fs::File::create(&path).unwrap();
    (path, file)
}
