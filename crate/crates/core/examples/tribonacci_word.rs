//! The Tribonacci word, its letter positions and their distance from `αn`.
//!
//! `cargo run --example tribonacci_word`

use trithoff::tribword::{a_position_bounds, letter_at, letter_positions, tribonacci_word, Letter};

fn main() {
    println!("{}", tribonacci_word(60));
    let letters: String = (1..=60).map(|n| letter_at(n).as_char()).collect();
    assert_eq!(letters, tribonacci_word(60));

    for letter in [Letter::A, Letter::B, Letter::C] {
        println!("{letter}: {:?}", letter_positions(letter, 12));
    }

    let bounds = a_position_bounds(10_000);
    println!(
        "a-positions minus alpha n over {} terms lie in [{:.4}, {:.4}]; first exit from (-1, 1): {:?}",
        bounds.checked, bounds.observed.0, bounds.observed.1, bounds.first_violation
    );
}
