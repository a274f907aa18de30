//! Tribonacci representations, the successor map and canonization.
//!
//! `cargo run --example numeration`

use num_bigint::BigUint;
use trithoff::numeration::{canonize, canonize_padded, successor, to_canonical, tribonacci, TribDigits};

fn main() {
    let t: Vec<String> = (0..12).map(|n| tribonacci(n).to_string()).collect();
    println!("T_0..T_11: {}", t.join(" "));

    for n in [1u32, 7, 12, 40, 422] {
        let n = BigUint::from(n);
        println!("{n:>4} = [{}]  out({n}) = {}", to_canonical(&n), successor(&n));
    }

    let carry: TribDigits = "0111".parse().expect("digits");
    let (canonical, trace) = canonize(&carry).expect("room to finish");
    println!("0111 -> {canonical} in {} step(s)", trace.steps.len());

    for word in ["2", "1030", "1(12)0"] {
        let w: TribDigits = word.parse().expect("digits");
        let (canonical, zeros) = canonize_padded(&w).expect("canonizes");
        println!("{word} needs {zeros} trailing zero(s): {canonical} = {}", canonical.evaluate());
    }
}
