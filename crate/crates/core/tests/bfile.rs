//! B-file parsing and comparison against the bundled fixtures.

use std::path::{Path, PathBuf};

use trithoff::oeis::{compare, lookup, BFile, BFileError, CacheOptions, SUPPORTED};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

#[test]
fn every_supported_id_has_a_matching_fixture() {
    for spec in SUPPORTED {
        let path = fixture(&format!("b{}.txt", &spec.id[1..]));
        let bfile = BFile::read(spec.id, &path).unwrap_or_else(|e| panic!("{}: {e}", spec.id));
        assert_eq!(bfile.first_index, spec.offset, "{}", spec.id);
        let result = compare(spec, &bfile, usize::MAX).expect("generator runs");
        assert!(result.passed(), "{}: {:?}", spec.id, result.mismatch);
        assert_eq!(result.checked, bfile.values.len());
    }
}

#[test]
fn garbled_file_reports_line() {
    match BFile::read("A003265", &fixture("garbled.txt")) {
        Err(BFileError::Parse { line, .. }) => assert_eq!(line, 4),
        other => panic!("expected a parse error, got {other:?}"),
    }
}

#[test]
fn truncated_file_is_rejected() {
    assert!(matches!(BFile::read("A003265", &fixture("truncated.txt")), Err(BFileError::Parse { .. })));
}

#[test]
fn comments_and_blank_lines_are_skipped() {
    let b = BFile::parse("A000073", "# header\n\n0 0\n1 0\n2 1\n3 1 \n", "inline").expect("parses");
    assert_eq!(b.first_index, 0);
    assert_eq!(b.last_index(), 3);
    assert_eq!(b.values.len(), 4);
}

#[test]
fn mismatch_is_located() {
    let b = BFile::parse("A000073", "0 0\n1 0\n2 1\n3 1\n4 3\n", "inline").expect("parses");
    let result = compare(lookup("A000073").unwrap(), &b, 100).expect("generator runs");
    let m = result.mismatch.expect("mismatch");
    assert_eq!(m.index, 4);
}

#[test]
fn offline_cache_miss_is_not_found() {
    let opts = CacheOptions { dir: PathBuf::from("/nonexistent"), offline: true };
    assert!(matches!(trithoff::oeis::load("A003265", &opts), Err(BFileError::FileNotFound(_))));
}

#[test]
fn invalid_ids_are_rejected() {
    assert!(matches!(trithoff::oeis::validate_id("A12"), Err(BFileError::InvalidId(_))));
    assert!(lookup("A999999").is_none());
    assert!(lookup("tribonacci").is_some());
}
