//! The checked-in fuzz seeds must stay meaningful: seeds meant to parse do,
//! so a format change cannot silently turn the corpus into noise.

use std::fs;
use std::path::PathBuf;

use psl13::exact::CyclotomicNumber;
use psl13::forms::parse_catalog;
use psl13::group::parse_group;
use psl13::qseries::parse_dump;

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<(String, String)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| {
            let p = e.unwrap().path();
            (p.file_name().unwrap().to_string_lossy().into_owned(), fs::read_to_string(&p).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn catalog_seeds() {
    for (name, text) in seeds("catalog") {
        assert_eq!(parse_catalog(&text).is_ok(), !name.contains("truncated"), "{name}");
    }
}

#[test]
fn dump_seeds() {
    for (name, text) in seeds("dump") {
        assert!(parse_dump(&text).is_ok(), "{name}");
    }
}

#[test]
fn group_cache_seeds() {
    for (name, text) in seeds("group_cache") {
        assert_eq!(parse_group(&text).is_ok(), !name.contains("prefix"), "{name}");
    }
}

#[test]
fn cyclotomic_seeds() {
    for (name, text) in seeds("cyclotomic") {
        assert!(CyclotomicNumber::parse_text(&text).is_ok(), "{name}: {text}");
    }
}
