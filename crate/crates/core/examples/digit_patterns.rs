//! Fibbinary, Tribbinary, Fibternary and Tribternary numbers: streams,
//! decompositions and multiples.
//!
//! `cargo run --example digit_patterns`

use trithoff::digitpatterns::{
    decompose_four_fibternary, decompose_three_tribternary, decompose_two_tribbinary,
    fibternary_multiple, family_stream, render, PatternFamily,
};

fn main() {
    for f in PatternFamily::ALL {
        println!("{f:>11}: {:?}", family_stream(f, 12));
    }

    let n = 2024;
    let (x, y) = decompose_two_tribbinary(n);
    println!("{n} = {x:b}_2 + {y:b}_2");
    for part in decompose_four_fibternary(n) {
        println!("  {}", render(&part.into(), 3));
    }
    println!("{n} = {:?} (Tribternary)", decompose_three_tribternary(n));

    for m in [2, 7, 13] {
        println!("multiple of {m}: {}", render(&fibternary_multiple(m), 3));
    }
}
