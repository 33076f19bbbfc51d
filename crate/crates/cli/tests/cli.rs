use std::process::{Command, Output};

use psl13::forms::{parse_catalog, Family};
use psl13::qseries::parse_dump;
use serde_json::Value;

fn psl13(args: &[&str], cache: &std::path::Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_psl13"))
        .args(args)
        .env("PSL13_CACHE_DIR", cache)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn group_suite_passes_with_six_checks() {
    let dir = tempfile::tempdir().unwrap();
    let o = psl13(&["verify", "--suite", "group", "--json"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 6);
    assert!(results.iter().all(|r| r["status"] == "pass"));
}

#[test]
fn qexp_of_the_degree_12_invariant_is_the_discriminant() {
    let dir = tempfile::tempdir().unwrap();
    let o = psl13(&["qexp", "Phi12", "--order", "4"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1/1\t1\n2/1\t-24\n3/1\t252\n4/1\t-1472\n");
    let delta = psl13(&["qexp", "Delta", "--order", "4"], dir.path());
    assert_eq!(parse_dump(&stdout(&o)).unwrap(), parse_dump(&stdout(&delta)).unwrap());
}

#[test]
fn every_listed_name_has_an_expansion() {
    let dir = tempfile::tempdir().unwrap();
    for name in psl13::qseries::SERIES_NAMES {
        let o = psl13(&["qexp", name, "--order", "3"], dir.path());
        assert_eq!(o.status.code(), Some(0), "{name}");
        assert!(parse_dump(&stdout(&o)).is_ok(), "{name}");
    }
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["verify", "--suite", "modular", "--order", "1"][..],
        &["verify", "--suite", "nonsense"],
        &["verify", "--prime", "7"],
        &["verify", "--prime", "many"],
        &["verify", "--frobnicate"],
        &["qexp", "Phi13", "--order", "2"],
        &["qexp", "eta"],
        &["export-catalog", "Z"],
        &["launch"],
    ] {
        let o = psl13(args, dir.path());
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn same_arguments_give_identical_json() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["verify", "--suite", "invariance", "--seed", "99", "--json", "--no-timing"];
    let a = psl13(&args, dir.path());
    let b = psl13(&args, dir.path());
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["config"]["seed"], 99);
}

#[test]
fn exported_catalogs_parse_back() {
    let dir = tempfile::tempdir().unwrap();
    for (family, count) in [("A", 7), ("D", 14), ("Phi", 1), ("icosahedral", 3)] {
        let o = psl13(&["export-catalog", family], dir.path());
        assert_eq!(o.status.code(), Some(0), "{family}");
        let cat = parse_catalog(&stdout(&o)).unwrap();
        assert_eq!(cat.family, Family::parse(family).unwrap());
        assert_eq!(cat.forms.len(), count, "{family}");
    }
}

#[test]
fn cache_builds_then_hits() {
    let dir = tempfile::tempdir().unwrap();
    let first = stdout(&psl13(&["cache"], dir.path()));
    assert!(first.contains("Built\torder 1092") && first.contains("Built\torder 78"), "{first}");
    let second = stdout(&psl13(&["cache"], dir.path()));
    assert_eq!(second.matches("Hit").count(), 2, "{second}");
    let rebuilt = stdout(&psl13(&["cache", "--rebuild"], dir.path()));
    assert_eq!(rebuilt.matches("Built").count(), 2, "{rebuilt}");
}

/// The full run at the default order. It exits 1: the one failing check is
/// the covariant sign conflict recorded in the decisions ledger.
#[test]
fn full_run_schema_and_exit_status() {
    let dir = tempfile::tempdir().unwrap();
    let o = psl13(&["verify", "--suite", "all", "--order", "12", "--json"], dir.path());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let top: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(top, ["config", "results", "schema", "suite"]);
    assert_eq!(v["schema"], "v1");
    let mut failed = Vec::new();
    for r in v["results"].as_array().unwrap() {
        let keys: Vec<&str> = r.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, ["check_id", "detail", "millis", "status", "verified_order"]);
        assert!(["pass", "fail", "reported"].contains(&r["status"].as_str().unwrap()));
        if r["status"] == "fail" {
            failed.push(r["check_id"].as_str().unwrap().to_string());
        }
    }
    assert_eq!(failed, ["icosahedral.covariant"]);
    assert_eq!(o.status.code(), Some(1));
}
