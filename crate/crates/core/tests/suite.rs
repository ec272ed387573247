use twistkit::report::{structured_reports, summary, Status};
use twistkit::scalar::{Param, TruncationPolicy};
use twistkit::suite::{exit_code, run_verify_suite, SuiteConfig, GROUPS};

fn only(groups: &[&str], policy: TruncationPolicy) -> SuiteConfig {
    SuiteConfig { policy, groups: groups.iter().map(|s| s.to_string()).collect() }
}

#[test]
fn star_group_alone() {
    let reps = run_verify_suite(&only(&["star"], TruncationPolicy::default())).unwrap();
    let ids: Vec<_> = reps.iter().map(|r| r.id.as_str()).collect();
    assert_eq!(ids.len(), 5);
    assert!(ids.iter().all(|i| i.starts_with("star.")));
    let flagged: Vec<_> = reps.iter().filter(|r| r.status == Status::Flagged).map(|r| r.id.as_str()).collect();
    assert_eq!(flagged, ["star.kappa.printed-second-order"]);
    assert_eq!(exit_code(&reps), 0);
}

#[test]
fn orders_are_reported() {
    let policy = TruncationPolicy::default().with(Param::Kinv, 1);
    let reps = run_verify_suite(&only(&["ybe", "cocycle"], policy)).unwrap();
    let (ybe, cocycle): (Vec<_>, Vec<_>) = reps.iter().partition(|r| r.id.starts_with("ybe."));
    assert_eq!(ybe.len(), 10);
    // the Yang-Baxter checks are exact, so they carry no orders
    assert!(ybe.iter().all(|r| r.orders.is_empty()));
    assert_eq!(cocycle.len(), 6);
    assert!(cocycle.iter().all(|r| r.id.starts_with("cocycle.") && r.orders.get("kinv") == Some(&1)));
}

#[test]
fn unknown_group_is_rejected() {
    assert!(run_verify_suite(&only(&["bogus"], TruncationPolicy::default())).is_err());
}

#[test]
fn full_suite_is_deterministic() {
    let strip = |v: serde_json::Value| {
        let mut v = v;
        for r in v["reports"].as_array_mut().unwrap() {
            r.as_object_mut().unwrap().remove("millis");
        }
        v
    };
    let a = run_verify_suite(&SuiteConfig::default()).unwrap();
    let b = run_verify_suite(&SuiteConfig::default()).unwrap();
    assert_eq!(strip(structured_reports(&a)), strip(structured_reports(&b)));
    // groups come out in the fixed order
    let firsts: Vec<_> = a.iter().map(|r| r.id.split('.').next().unwrap().to_string()).fold(Vec::new(), |mut acc, g| {
        if acc.last() != Some(&g) {
            acc.push(g);
        }
        acc
    });
    assert!(GROUPS.iter().all(|g| firsts.iter().any(|f| f == g) || *g == "hopf"));
    let s = summary(&a);
    assert_eq!(s["pass"] + s["fail"] + s["flagged"], a.len());
    assert_eq!(exit_code(&a), i32::from(s["fail"] > 0));
}
