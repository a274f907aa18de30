//! Certified arithmetic with the Tribonacci constant: its digits, the sign
//! pattern of `T_{n+1} − αT_n` and the records of `out(n) − αn`.
//!
//! `cargo run --example certified_records`

use trithoff::tribword::{alpha, delta, records, sign_sequences, RecordSign};

fn main() {
    println!("alpha = {}", alpha(30).to_decimal(30));
    for n in 1..=6 {
        println!("T_{} - alpha T_{n} = {}", n + 1, delta(n).expect("certified").to_decimal(10));
    }

    let (p, q) = sign_sequences(30).expect("certified");
    println!("nonnegative at {p:?}");
    println!("negative at {q:?}");

    for sign in [RecordSign::Positive, RecordSign::Negative] {
        println!("{sign:?} records up to 5000:");
        for e in records(5000, sign).expect("certified") {
            println!("  {:>5} {:>10} {:?}", e.n, e.delta.to_decimal_truncated(7), e.repr_indices);
        }
    }
}
