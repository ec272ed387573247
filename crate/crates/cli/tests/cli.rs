use std::process::{Command, Output};

fn twistkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twistkit")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn yang_baxter_checks_pass() {
    let o = twistkit(&["check-ybe"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for r in ["r-kappa", "r-kappa-hat", "r-xi", "r-total"] {
        assert!(out.contains(&format!("pass ybe.{}", r)), "{}", out);
    }
}

#[test]
fn twist_single_element() {
    let o = twistkit(&["--order", "kinv=1", "twist", "--element", "P[1]"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("Δ(P[1]) = (1) ox (P[1]) + (P[1]) ox (1) - kinv*(P[1]) ox (P[0])"), "{}", out);
    assert!(out.contains("S(P[1]) = -kinv*P[0]*P[1] - P[1]"));
}

#[test]
fn star_commutator_of_coordinates() {
    let o = twistkit(&["star", "--kind", "kappa-xi", "x[3]", "x[0]"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("I*kinv*x[3]"), "{}", stdout(&o));
}

#[test]
fn structured_output_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let o = twistkit(&["--format", "structured", "--out", path.to_str().unwrap(), "parse", "P[1]*P[0]"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["schema"], "twistkit.cli/1");
    assert_eq!(v["command"], "parse");
    let words = &v["entries"][0]["value"]["terms"][0]["word"];
    assert_eq!(words, &serde_json::json!(["P[0]", "P[1]"]));
}

#[test]
fn suite_exit_codes() {
    let star = twistkit(&["verify-suite", "--only", "star"]);
    assert_eq!(star.status.code(), Some(0));
    assert!(stdout(&star).ends_with("4 pass, 0 fail, 1 flagged\n"));
    let twist = twistkit(&["verify-suite", "--only", "twist"]);
    assert_eq!(twist.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["parse", "P[1] + * P[2]"][..],
        &["parse", "M[1,1]"],
        &["parse", "Q[1]"],
        &["--order", "foo=1", "check-ybe"],
        &["verify-suite", "--only", "bogus"],
        &["twist", "--twist", "nope"],
        &["frobnicate"],
    ] {
        let o = twistkit(args);
        assert_eq!(o.status.code(), Some(2), "{:?}: {}", args, String::from_utf8_lossy(&o.stderr));
        assert!(!o.stderr.is_empty());
    }
    let o = twistkit(&["parse", "P[1] + * P[2]"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains('7'));
}
