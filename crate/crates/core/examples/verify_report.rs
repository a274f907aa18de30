//! Running a verification suite and printing its report as JSON.
//!
//! `cargo run --example verify_report`

use trithoff::verify::{run_suite, Suite};

fn main() {
    let report = run_suite(Suite::Multiples, None).without_meta();
    println!("{}", report.to_json());
    std::process::exit(if report.passed() { 0 } else { 1 });
}
