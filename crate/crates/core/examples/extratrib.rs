//! Sequences obeying the Tribonacci rule in both directions: terms at
//! negative indices, difference sequences and locating their tails in the
//! array.
//!
//! `cargo run --example extratrib`

use num_bigint::BigInt;
use trithoff::extratrib::{diff_row_orbit, multiples_table, ExtraTrib};

fn main() {
    let t = ExtraTrib::tribonacci();
    let back: Vec<String> = (0..12).map(|k| t.term(2 - k).to_string()).collect();
    println!("Tribonacci read leftwards: {}", back.join(", "));

    let twice = t.scale(&BigInt::from(2));
    let found = twice.locate().expect("tail is positive");
    println!("2T lives in row {} from index {} (first column {})", found.row, found.start_index, found.first_column);
    assert_eq!(Ok(found), twice.locate_by_wall(10_000));

    for e in multiples_table(&t, 6).expect("locatable") {
        println!("  {}T -> row {:>4}, first column {:>4}", e.k, e.row, e.first_column);
    }

    let row3 = ExtraTrib::row(3);
    println!("row 3 parity {} and difference {}", row3.parity_type(), row3.difference().to_text(6).replace('\n', " "));
    if let Ok(inv) = row3.difference_inverse() {
        println!("its difference-inverse: {}", inv.to_text(6).replace('\n', " "));
    }

    println!("difference rows from row 1: {:?}", diff_row_orbit(1, 8).expect("locatable"));
    println!("reversal breaks the rule at {:?}", t.reversal_witness(60));
}
