//! The `vk` binary end to end.

use std::io::Write;
use std::process::{Command, Output};

const SIG: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/standard.vk");
const NBAD_SIG: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/with_nbad.vk");

fn vk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vk")).args(args).output().expect("vk runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn truncation_report_as_json() {
    let o = vk(&["verify", SIG, "--pred", "isprop", "--suite", "truncation", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["suite"], "truncation");
    assert_eq!(v["pred"], "isprop");
    assert!(v["cases"].as_u64().unwrap() > 0);
    assert!(v["vacuous"].as_u64().is_some());
    assert_eq!(v["failures"], serde_json::json!([]));
    assert_eq!(v["seed"], 0);
    assert!(v["elapsed_ms"].as_u64().is_some());
    assert!(v["version"].as_str().is_some());
}

#[test]
fn non_prop_truncation_is_a_usage_error() {
    let o = vk(&["verify", SIG, "--pred", "size=2", "--suite", "truncation"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("negative"), "{}", stderr(&o));
    assert!(stdout(&o).is_empty());
}

#[test]
fn negative_control_and_forced_run() {
    let o = vk(&["verify", SIG, "--pred", "size=2", "--suite", "negative", "--max-nodes", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("WITNESS (n bool) | (n bool) has 2 paths"), "{}", stdout(&o));
    let o = vk(&["verify", SIG, "--pred", "size=2", "--suite", "truncation", "--force", "--max-nodes", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL truncation-forced"));
}

#[test]
fn eq_and_el() {
    let o = vk(&["eq", SIG, "-e", "(unit)", "-f", "(empty)", "--pred", "isprop"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "unequal\n"));
    let o = vk(&["eq", SIG, "-e", "(empty)", "-f", "(id (n bool) 0 1)", "--pred", "isprop", "--witnesses"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "equal\n  []: collapsed\n"));
    let o = vk(&["el", SIG, "-e", "(sigma (n bool) ((unit) (n bool)))"]);
    assert_eq!(stdout(&o), "3\n");
}

#[test]
fn parse_errors_exit_2_with_position() {
    let o = vk(&["el", SIG, "-e", "(sum (unit)\n  (bogus))"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("2:4: unknown code former `bogus`"), "{}", stderr(&o));

    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(f, "(signature\n  (nullary bool 2)\n  (formers unit quot))").unwrap();
    let o = vk(&["check", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown former `quot`"));

    assert_eq!(vk(&["verify", SIG]).status.code(), Some(2));
    assert_eq!(vk(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn check_prints_canonical_signature() {
    let o = vk(&["check", NBAD_SIG]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "(signature\n  (nullary bool 2)\n  (nullary tri 3)\n  (formers unit empty sum sigma pi id po0)\n  (flags nbad))\n"
    );
}

#[test]
fn enumerate_output_reads_back() {
    let o = vk(&["enumerate", SIG, "--max-nodes", "2", "--max-size", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.last(), Some(&format!("; {} codes", lines.len() - 1).as_str()));
    for line in &lines[..lines.len() - 1] {
        let (expr, size) = line.split_once(" ; ").unwrap();
        let e = vk(&["el", SIG, "-e", expr]);
        assert_eq!(stdout(&e).trim(), size);
    }
}

#[test]
fn help_and_version_exit_0() {
    assert_eq!(vk(&["--help"]).status.code(), Some(0));
    assert_eq!(vk(&["--version"]).status.code(), Some(0));
}
