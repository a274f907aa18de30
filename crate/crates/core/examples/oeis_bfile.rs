//! Parsing a b-file and comparing it with a generator.
//!
//! `cargo run --example oeis_bfile`

use std::path::Path;

use trithoff::oeis::{compare, lookup, BFile};

fn main() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data/b003265.txt");
    let bfile = BFile::read("A003265", &path).expect("fixture parses");
    let spec = lookup("A003265").expect("supported");
    let result = compare(spec, &bfile, 1000).expect("generator runs");
    println!("{} ({}) over {}..={}: {}", result.id, spec.name, result.first_index, result.last_index, if result.passed() { "match" } else { "mismatch" });

    let broken = BFile::parse("A003265", "1 1\n2 3\n4 8\n", "inline");
    println!("{}", broken.expect_err("index gap"));
}
