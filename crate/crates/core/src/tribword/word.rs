//! The Tribonacci word and the positions of its letters.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use super::{alpha_bits, Interval};
use crate::numeration::small;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Letter {
    A,
    B,
    C,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
            Letter::C => 'c',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'a' => Some(Letter::A),
            'b' => Some(Letter::B),
            'c' => Some(Letter::C),
            _ => None,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

fn concatenation_prefix(seeds: [&str; 3], arity: usize, n_letters: usize) -> String {
    let mut words: Vec<String> = seeds[..arity].iter().map(|s| s.to_string()).collect();
    while words.last().expect("seeded").len() < n_letters {
        let k = words.len();
        let next: String = (1..=arity).map(|j| words[k - j].as_str()).collect();
        words.push(next);
    }
    let mut last = words.pop().expect("seeded");
    last.truncate(n_letters);
    last
}

/// First `n_letters` letters of the limit of `W(n) = W(n−1)W(n−2)W(n−3)`.
pub fn tribonacci_word(n_letters: usize) -> String {
    concatenation_prefix(["a", "ab", "abac"], 3, n_letters)
}

/// First `n_letters` letters of the limit of `S(n) = S(n−1)S(n−2)`.
pub fn fibonacci_word(n_letters: usize) -> String {
    concatenation_prefix(["a", "ab", ""], 2, n_letters)
}

/// Letter at 1-based position `n`, read off the representation of `n − 1`:
/// ending in 0, 01 or 11 gives a, b or c.
pub fn letter_at(n: u64) -> Letter {
    assert!(n >= 1, "positions start at 1");
    let mask = small::to_mask(n - 1).expect("position within u64 range");
    match mask & 0b11 {
        0b01 => Letter::B,
        0b11 => Letter::C,
        _ => Letter::A,
    }
}

/// First `count` positions (1-based) of `letter`.
pub fn letter_positions(letter: Letter, count: usize) -> Vec<u64> {
    (1u64..)
        .filter(|&n| letter_at(n) == letter)
        .take(count)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsReport {
    pub checked: u64,
    /// First `(n, position)` outside `(αn − 1, αn + 1)`.
    pub first_violation: Option<(u64, u64)>,
    /// First `(n, position)` outside `(αn − 2, αn + 1)`.
    pub first_wide_violation: Option<(u64, u64)>,
    /// Smallest and largest observed `a(n) − αn` (display only).
    pub observed: (f64, f64),
}

impl BoundsReport {
    /// The narrow band `(αn − 1, αn + 1)` held throughout.
    pub fn passed(&self) -> bool {
        self.first_violation.is_none()
    }

    /// The band `(αn − 2, αn + 1)` held throughout.
    pub fn wide_passed(&self) -> bool {
        self.first_wide_violation.is_none()
    }
}

/// Compares the `n`-th position of letter a with `αn`, `n = 1..=bound`,
/// certifying membership in `(αn − 1, αn + 1)` and in `(αn − 2, αn + 1)`.
pub fn a_position_bounds(bound: u64) -> BoundsReport {
    use std::cmp::Ordering::{Greater, Less};
    let bits = 64 + 64 - bound.leading_zeros();
    let alpha = alpha_bits(bits);
    let one = Interval::exact(1, bits);
    let minus_one = Interval::exact(-1, bits);
    let minus_two = Interval::exact(-2, bits);
    let mut report = BoundsReport {
        checked: 0,
        first_violation: None,
        first_wide_violation: None,
        observed: (f64::INFINITY, f64::NEG_INFINITY),
    };
    let mut position = 0u64;
    while report.checked < bound {
        position += 1;
        if letter_at(position) != Letter::A {
            continue;
        }
        report.checked += 1;
        let n = report.checked;
        let gap = Interval::exact(position, bits).sub(&alpha.scale(&BigInt::from(n)));
        let below_top = gap.certain_cmp(&one) == Some(Less);
        if report.first_violation.is_none()
            && !(below_top && gap.certain_cmp(&minus_one) == Some(Greater))
        {
            report.first_violation = Some((n, position));
        }
        if report.first_wide_violation.is_none()
            && !(below_top && gap.certain_cmp(&minus_two) == Some(Greater))
        {
            report.first_wide_violation = Some((n, position));
        }
        let mid = gap.mid_f64();
        report.observed = (report.observed.0.min(mid), report.observed.1.max(mid));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_prefixes() {
        assert_eq!(tribonacci_word(17), "abacabaabacababac");
        assert_eq!(tribonacci_word(1), "a");
        assert_eq!(tribonacci_word(4), "abac");
        assert_eq!(fibonacci_word(8), "abaababa");
    }

    #[test]
    fn letters_from_representations() {
        assert_eq!(letter_at(1), Letter::A);
        assert_eq!(letter_at(2), Letter::B);
        assert_eq!(letter_at(4), Letter::C);
        let word: String = (1..=2000).map(|n| letter_at(n).as_char()).collect();
        assert_eq!(word, tribonacci_word(2000));
    }

    #[test]
    fn position_lists() {
        assert_eq!(letter_positions(Letter::A, 6), [1, 3, 5, 7, 8, 10]);
        assert_eq!(letter_positions(Letter::B, 5), [2, 6, 9, 13, 15]);
        assert_eq!(letter_positions(Letter::C, 5), [4, 11, 17, 24, 28]);
    }

    #[test]
    fn a_positions_stay_near_alpha_n() {
        let report = a_position_bounds(2000);
        assert_eq!(report.first_violation, Some((5, 8)));
        assert!(report.wide_passed());
        assert!(report.observed.0 > -1.5 && report.observed.1 < 0.01);
    }
}
