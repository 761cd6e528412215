use std::path::Path;
use std::process::{Command, Output};

use flagcalc::verify::{Status, VerifyReport};

fn run(args: &[&str], cache: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flagcalc"))
        .args(args)
        .env("FLAGCALC_CACHE_DIR", cache)
        .env_remove("FLAGCALC_TUPLE_CAP")
        .output()
        .expect("run flagcalc")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn wp_listing() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["wp", "--group", "C3", "--cross", "3"], dir.path());
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 8);

    let o = run(&["wp", "--group", "A1", "--cross", "1"], dir.path());
    assert_eq!(stdout(&o).lines().count(), 2);

    let o = run(&["wp", "--group", "C3", "--cross", "2"], dir.path());
    let row = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap())
        .find(|v| v["word"] == "1,3,2,1,3,2")
        .expect("word listed");
    assert_eq!(row["chi_levi"], serde_json::json!([1, 1]));
    assert_eq!(row["levi_simple"], serde_json::json!([1, 3]));
    assert_eq!(row["length"], 6);
    for key in ["chi_fund_coords", "delta_qw", "dj"] {
        assert!(row.get(key).is_some(), "{key}");
    }
}

#[test]
fn products() {
    let dir = tempfile::tempdir().unwrap();
    let lg = ["product", "--group", "C3", "--cross", "3"];
    // (1), (2,1), (2) in homological labels
    let words = ["2,1,3,2,3", "1,2,3", "1,3,2,3"];
    let plain = run(&[&lg[..], &words[..]].concat(), dir.path());
    assert_eq!(stdout(&plain).trim(), "2·[e]");
    let deformed = run(&[&lg[..], &["--deformed"], &words[..]].concat(), dir.path());
    assert_eq!(stdout(&deformed).trim(), "2·[e]");

    let strict = run(&["product", "--group", "C3", "--cross", "3", "--strict", "1", "2,1", "2"], dir.path());
    assert_eq!(stdout(&strict).trim(), "2·[e]");
    // σ_1² = σ_2 + σ_{1,1} on Gr(2,4)
    let gr = run(&["product", "--group", "A3", "--cross", "2", "--partition", "1", "1"], dir.path());
    assert_eq!(stdout(&gr).lines().count(), 1);
    assert_eq!(stdout(&gr).matches("1·[").count(), 2);

    let sp = ["product", "--group", "C3", "--cross", "2", "1,3,2,1,3,2", "1,3,2,1,3,2", "3,2"];
    assert_eq!(stdout(&run(&sp, dir.path())).trim(), "1·[e]");
    let sp_def = [&sp[..5], &["--deformed"], &sp[5..]].concat();
    assert_eq!(stdout(&run(&sp_def, dir.path())).trim(), "0");

    let json = run(&["product", "--group", "C3", "--cross", "2", "--json", "1,3,2,1,3,2", "3,2"], dir.path());
    let v: serde_json::Value = serde_json::from_str(stdout(&json).trim()).unwrap();
    assert!(v["terms"].as_array().is_some());
}

#[test]
fn word_outside_wp_is_named() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["product", "--group", "C3", "--cross", "2", "1,3,2", "2,1"], dir.path());
    assert!(!o.status.success());
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("2,1"), "{err}");
    assert!(err.contains("minimal coset representative"), "{err}");
}

#[test]
fn bad_flags_give_usage() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["wp", "--group", "C3"], dir.path());
    assert!(!o.status.success());
    assert!(String::from_utf8(o.stderr).unwrap().contains("Usage"));
    let o = run(&["wp", "--group", "E8", "--cross", "1"], dir.path());
    assert!(!o.status.success());
}

#[test]
fn invariants_command() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["invariants", "--group", "G2", "6,0", "0,6", "0,7"], dir.path());
    assert_eq!(stdout(&o).trim(), "1");
    let o = run(&["invariants", "--group", "G2", "--n", "2", "6,0", "0,6", "10,1"], dir.path());
    assert_eq!(stdout(&o).trim(), "3");
    let o = run(
        &["invariants", "--group", "C3", "--cross", "2", "1,3,2,1,3,2", "1,3,2,1,3,2", "3,2"],
        dir.path(),
    );
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["dim"], 0);
    assert_eq!(v["chi_levi"], serde_json::json!([[[1], [1]], [[1], [1]], [[3], [1]]]));
}

fn verify_report(args: &[&str], dir: &Path) -> (VerifyReport, String, i32) {
    let out = dir.join(format!("report-{}.json", args.join("_").replace(',', "-")));
    let mut full = vec!["verify"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", out.to_str().unwrap()]);
    let o = run(&full, dir);
    let text = std::fs::read_to_string(&out).unwrap();
    (VerifyReport::from_json(&text).unwrap(), text, o.status.code().unwrap())
}

#[test]
fn verify_sweeps() {
    let dir = tempfile::tempdir().unwrap();
    let (rep, _, code) = verify_report(&["--group", "A2", "--cross", "1", "--s", "3", "--n-max", "3"], dir.path());
    assert_eq!(code, 0);
    assert_eq!(rep.violations(), 0);

    let (rep, text, code) = verify_report(&["--group", "C3", "--cross", "2", "--s", "3", "--n-max", "3"], dir.path());
    assert_eq!(code, 0);
    let example = rep
        .tuples
        .iter()
        .find(|t| t.words == ["3,2", "1,3,2,1,3,2", "1,3,2,1,3,2"])
        .expect("example tuple present");
    assert_eq!(example.cup_top.0, 1.into());
    assert_eq!(example.deformed_top.0, 0.into());
    assert!(example.invariant_dims.is_empty());
    assert_eq!(example.status, Status::Ok);
    // rows with deformed top 1 carry every n
    for t in &rep.tuples {
        assert_eq!(t.invariant_dims.is_empty(), t.deformed_top.0 != 1.into());
    }
    // serialize, parse, serialize
    assert_eq!(rep.to_json().unwrap(), text);

    for cross in ["1", "2"] {
        let (rep, _, code) = verify_report(&["--group", "G2", "--cross", cross, "--s", "3", "--n-max", "2"], dir.path());
        assert_eq!(code, 0);
        assert_eq!(rep.violations(), 0);
    }
}

#[test]
fn jobs_and_cache_do_not_change_reports() {
    let cold_dir = tempfile::tempdir().unwrap();
    let args = ["--group", "B3", "--cross", "2", "--s", "3", "--n-max", "2"];
    let (_, cold, _) = verify_report(&args, cold_dir.path());
    assert!(std::fs::read_dir(cold_dir.path())
        .unwrap()
        .any(|e| e.unwrap().file_name().to_string_lossy().starts_with("B3-")));
    // second run reads the cache written by the first
    let (_, warm, _) = verify_report(&args, cold_dir.path());
    assert_eq!(cold, warm);
    let parallel: Vec<&str> = args.iter().copied().chain(["--jobs", "4", "--no-cache"]).collect();
    let (_, par, _) = verify_report(&parallel, cold_dir.path());
    assert_eq!(cold, par);
}

#[test]
fn tuple_cap_refuses_with_count() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_flagcalc"))
        .args(["verify", "--group", "C3", "--cross", "2", "--s", "3"])
        .env("FLAGCALC_CACHE_DIR", dir.path())
        .env("FLAGCALC_TUPLE_CAP", "10")
        .output()
        .unwrap();
    assert!(!o.status.success());
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("25 tuples"), "{err}");
}

#[test]
fn fulton_command() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["fulton", "--r", "3", "--n-max", "4", "2,1", "2,1", "3,2,1"], dir.path());
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["c"], 2);

    let o = run(&["fulton", "--r", "3", "--sweep", "2", "--n-max", "4"], dir.path());
    assert!(o.status.success());
    assert!(stdout(&o).lines().count() > 0);
}

#[test]
fn examples_report_one_line_per_value() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["examples"], dir.path());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines.iter().all(|l| l.starts_with("PASS") || l.starts_with("FAIL")));
    assert!(lines.iter().any(|l| l.contains("G2") && l.contains("20ω1+2ω2") && l.starts_with("PASS")));
    let failed = lines.iter().any(|l| l.starts_with("FAIL"));
    assert_eq!(o.status.success(), !failed);
}

#[test]
fn roots_command() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["roots", "--group", "G2"], dir.path());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["positive_roots"].as_array().unwrap().len(), 6);
    assert_eq!(v["weyl_order"], 12);
}
