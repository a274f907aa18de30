//! A window of the array with its three precolumns, occurrence counts and
//! the size estimate for entries.
//!
//! `cargo run --example trithoff_array`

use trithoff::array::{census, entry, estimate_entry, first_column, precolumns, verify_fact5};
use trithoff::cli::render_array;

fn main() {
    print!("{}", render_array(8, -2, 6));

    let g = first_column(19);
    let (wall, seed, pre) = precolumns(g);
    println!("row 19 starts at {g}; wall {wall}, seed {seed}, pre-seed {pre}");

    let report = verify_fact5(1..=500);
    println!("neighbour facts hold for {} rows: {}", report.rows_checked, report.passed());

    let c = census(1000);
    println!("census to 1000 scanned {} rows; first violation {:?}", c.rows_scanned, c.fact6_violation());
    for v in [1, 2, 4] {
        println!("  {v}: (garden, wall, seed, pre-seed) = {:?}", c.counts(v));
    }

    for (r, col) in [(19, 1), (100, 5), (200, 8)] {
        println!("entry({r},{col}) = {} ~ {:.2}", entry(r, col), estimate_entry(r, col as u32));
    }
}
