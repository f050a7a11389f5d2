use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use ofip::verifier::CampaignReport;

fn configs() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../configs")
}

fn ofip(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ofip"))
        .args(args)
        .current_dir(cwd)
        .env_remove("OFIP_SEED")
        .output()
        .unwrap()
}

fn text(bytes: &[u8]) -> String {
    String::from_utf8_lossy(bytes).into_owned()
}

fn verify(config: &Path, dir: &Path, extra: &[&str]) -> (Output, PathBuf) {
    let report = dir.join("report.json");
    let mut args = vec!["verify", "--config", config.to_str().unwrap(), "--report", report.to_str().unwrap()];
    args.extend_from_slice(extra);
    (ofip(&args, dir), report)
}

#[test]
fn smoke_config_exits_zero_and_writes_both_reports() {
    let dir = tempfile::tempdir().unwrap();
    let (out, report) = verify(&configs().join("smoke.json"), dir.path(), &["--trials", "200"]);
    assert_eq!(out.status.code(), Some(0), "{}", text(&out.stderr));
    let parsed = CampaignReport::from_json(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert!(parsed.all_passed);
    assert_eq!(parsed.trials, 200);
    let csv = std::fs::read_to_string(report.with_extension("csv")).unwrap();
    assert!(csv.starts_with("check_id,trials,passes,worst_slack,worst_trial_index\n"));
    assert_eq!(csv.lines().count(), parsed.checks.len() + 1);
    assert!(text(&out.stdout).contains("0 failing"));
}

#[test]
fn adversarial_config_exits_one_with_counterexample() {
    let dir = tempfile::tempdir().unwrap();
    let (out, report) = verify(&configs().join("adversarial.json"), dir.path(), &[]);
    assert_eq!(out.status.code(), Some(1));
    let stdout = text(&out.stdout);
    assert!(stdout.contains("FAIL defining_predicate"), "{stdout}");
    let parsed = CampaignReport::from_json(&std::fs::read_to_string(report).unwrap()).unwrap();
    let failing = parsed.failed_checks().next().unwrap();
    assert!(failing.counterexample.as_ref().is_some_and(|c| !c.shrunk.pass));
}

#[test]
fn invalid_config_exits_two_naming_the_key() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        (r#"{"seed":1,"trials":5,"dims":[2],"field":"real","alpha_grid":[0.0,1.0],
             "profile":{"kind":"constant","lower":1.0,"upper":2.0},"mixing":{"kind":"constant","t":0.5}}"#, "alpha_grid"),
        (r#"{"seed":1,"trials":5,"dims":[2],"field":"real","alpha_grid":[0.5,1.0],
             "profile":{"kind":"constant","lower":1.0,"upper":2.0},"mixing":{"kind":"constant","t":0.5},
             "tolerance":"tight"}"#, "tolerance"),
        (r#"{"seed":1,"trials":5,"dims":[2],"field":"real","alpha_grid":[0.5,1.0],
             "profile":{"kind":"constant","lower":1.0,"upper":2.0},"mixing":{"kind":"constant","t":0.5},
             "colour":"blue"}"#, "colour"),
        (r#"{"seed":1,"trials":5,"dims":[2],"field":"real","alpha_grid":[0.5,1.0],
             "profile":{"kind":"constant","lower":1.0,"upper":2.0}}"#, "mixing"),
    ];
    for (i, (body, key)) in cases.iter().enumerate() {
        let path = dir.path().join(format!("bad{i}.json"));
        std::fs::write(&path, body).unwrap();
        let (out, report) = verify(&path, dir.path(), &[]);
        assert_eq!(out.status.code(), Some(2), "case {i}");
        let stderr = text(&out.stderr);
        assert!(stderr.contains(&format!("`{key}`")), "case {i}: {stderr}");
        assert!(!report.exists());
    }
    let (out, _) = verify(&dir.path().join("missing.json"), dir.path(), &[]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn seed_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("noseed.json");
    std::fs::write(
        &config,
        r#"{"trials":20,"dims":[2],"field":"real","alpha_grid":[0.5,1.0],
            "profile":{"kind":"constant","lower":1.0,"upper":1.0},"mixing":{"kind":"constant","t":0.5}}"#,
    )
    .unwrap();
    let (out, _) = verify(&config, dir.path(), &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(text(&out.stderr).contains("`seed`"));

    let report = dir.path().join("env.json");
    let out = Command::new(env!("CARGO_BIN_EXE_ofip"))
        .args(["verify", "--config", config.to_str().unwrap(), "--report", report.to_str().unwrap()])
        .env("OFIP_SEED", "42")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", text(&out.stderr));
    let seed_of = |p: &Path| CampaignReport::from_json(&std::fs::read_to_string(p).unwrap()).unwrap().seed;
    assert_eq!(seed_of(&report), 42);

    let out = Command::new(env!("CARGO_BIN_EXE_ofip"))
        .args(["verify", "--config", config.to_str().unwrap(), "--report", report.to_str().unwrap(), "--seed", "9"])
        .env("OFIP_SEED", "42")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(seed_of(&report), 9);
}

#[test]
fn interval_subcommand() {
    let dir = tempfile::tempdir().unwrap();
    let out = ofip(&["interval", "[3,4] (-) [2,10]"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(text(&out.stdout), "[1,-6]_o (canonical [-6,1])\n");
    let out = ofip(&["interval", "-1*[3,4]"], dir.path());
    assert_eq!(text(&out.stdout), "[-3,-4]_o (canonical [-4,-3])\n");
    let out = ofip(&["interval", "[1,2] (+"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(text(&out.stderr).contains("position"));
}

#[test]
fn example_subcommand() {
    let dir = tempfile::tempdir().unwrap();
    let out = ofip(&["example", "--alpha", "1", "--x", "3,4"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let stdout = text(&out.stdout);
    assert!(stdout.contains("magnitude          15\n"), "{stdout}");
    assert!(stdout.contains("interval           [15,"));
    assert!(stdout.contains("contained          true"));

    let out = ofip(&["example", "--alpha", "1", "--x", "1,0"], dir.path());
    assert!(text(&out.stdout).contains("[3,2]_o (canonical [2,3])"));

    let out = ofip(&["example", "--alpha", "0.5", "--x", "-1,2"], dir.path());
    assert_eq!(out.status.code(), Some(0));

    for bad in [["--alpha", "0", "--x", "1,0"], ["--alpha", "2", "--x", "1,0"], ["--alpha", "0.5", "--x", "1,0,3"]] {
        let mut args = vec!["example"];
        args.extend_from_slice(&bad);
        assert_eq!(ofip(&args, dir.path()).status.code(), Some(2), "{bad:?}");
    }
}

#[test]
fn unknown_subcommand_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(ofip(&["frobnicate"], dir.path()).status.code(), Some(2));
}
