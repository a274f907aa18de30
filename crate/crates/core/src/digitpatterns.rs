//! Fibbinary, Tribbinary, Fibternary and Tribternary numbers.
//!
//! Members are the integers whose radix-2 or radix-3 digits are all 0 or 1
//! with no run of two (Fib) or three (Trib) ones.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::numeration::small;
use crate::tribword::{fibonacci_word, tribonacci_word, Letter};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PatternFamily {
    Fibbinary,
    Tribbinary,
    Fibternary,
    Tribternary,
}

impl PatternFamily {
    pub const ALL: [PatternFamily; 4] = [
        PatternFamily::Fibbinary,
        PatternFamily::Tribbinary,
        PatternFamily::Fibternary,
        PatternFamily::Tribternary,
    ];

    pub fn radix(self) -> u64 {
        match self {
            PatternFamily::Fibbinary | PatternFamily::Tribbinary => 2,
            PatternFamily::Fibternary | PatternFamily::Tribternary => 3,
        }
    }

    /// Longest allowed run of ones.
    pub fn max_run(self) -> u32 {
        match self {
            PatternFamily::Fibbinary | PatternFamily::Fibternary => 1,
            PatternFamily::Tribbinary | PatternFamily::Tribternary => 2,
        }
    }

    fn is_trib(self) -> bool {
        self.max_run() == 2
    }

    /// Generating rules `x -> m·x + c`.
    pub fn rules(self) -> &'static [(u64, u64)] {
        match self {
            PatternFamily::Fibbinary => &[(2, 0), (4, 1)],
            PatternFamily::Tribbinary => &[(2, 0), (4, 1), (8, 3)],
            PatternFamily::Fibternary => &[(3, 0), (9, 1)],
            PatternFamily::Tribternary => &[(3, 0), (9, 1), (27, 4)],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PatternFamily::Fibbinary => "fibbinary",
            PatternFamily::Tribbinary => "tribbinary",
            PatternFamily::Fibternary => "fibternary",
            PatternFamily::Tribternary => "tribternary",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.name() == name)
    }

    pub fn is_member(self, x: u64) -> bool {
        self.highest_violation(x).is_none()
    }

    /// Most significant digit position at which `x` stops being a member.
    fn highest_violation(self, mut x: u64) -> Option<u32> {
        let radix = self.radix();
        let mut digits = Vec::with_capacity(41);
        while x > 0 {
            digits.push(x % radix);
            x /= radix;
        }
        let mut run = 0;
        for (k, &d) in digits.iter().enumerate().rev() {
            match d {
                0 => run = 0,
                1 => run += 1,
                _ => return Some(k as u32),
            }
            if run > self.max_run() {
                return Some(k as u32);
            }
        }
        None
    }

    /// Word letter encoded by the residue class of a member.
    pub fn residue_letter(self, x: u64) -> Option<Letter> {
        let r = self.radix();
        let (c1, c2) = if r == 2 { (1, 3) } else { (1, 4) };
        if x.is_multiple_of(r) {
            Some(Letter::A)
        } else if x % (r * r) == c1 {
            Some(Letter::B)
        } else if self.is_trib() && x % (r * r * r) == c2 {
            Some(Letter::C)
        } else {
            None
        }
    }
}

impl fmt::Display for PatternFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Members by filtering the integers. A violation at digit `k` rules out
/// every integer sharing the digits from `k` up, so the scan jumps past them.
pub fn filter_stream(f: PatternFamily, count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut x = 0u64;
    while out.len() < count {
        match f.highest_violation(x) {
            None => {
                out.push(x);
                x += 1;
            }
            Some(k) => {
                let block = f.radix().pow(k);
                x = (x / block + 1) * block;
            }
        }
    }
    out
}

/// Members by closing `{0}` under the family's rules, in ascending order.
pub fn recursive_stream(f: PatternFamily, count: usize) -> Vec<u64> {
    let mut heap = BinaryHeap::from([Reverse(0u64)]);
    let mut out: Vec<u64> = Vec::with_capacity(count);
    while out.len() < count {
        let Reverse(x) = heap.pop().expect("closure is infinite");
        if out.last() == Some(&x) {
            continue;
        }
        out.push(x);
        for &(m, c) in f.rules() {
            let y = x * m + c;
            if y != 0 {
                heap.push(Reverse(y));
            }
        }
    }
    out
}

/// First index at which the two generators disagree.
pub fn generators_disagree(f: PatternFamily, count: usize) -> Option<usize> {
    let a = filter_stream(f, count);
    let b = recursive_stream(f, count);
    a.iter().zip(&b).position(|(x, y)| x != y)
}

/// First `count` members.
pub fn family_stream(f: PatternFamily, count: usize) -> Vec<u64> {
    recursive_stream(f, count)
}

/// All members below `bound`.
pub fn members_below(f: PatternFamily, bound: u64) -> Vec<u64> {
    let mut heap = BinaryHeap::from([Reverse(0u64)]);
    let mut out: Vec<u64> = Vec::new();
    while let Some(Reverse(x)) = heap.pop() {
        if x >= bound {
            break;
        }
        if out.last() == Some(&x) {
            continue;
        }
        out.push(x);
        for &(m, c) in f.rules() {
            if let Some(y) = x.checked_mul(m).and_then(|v| v.checked_add(c)) {
                if y != 0 {
                    heap.push(Reverse(y));
                }
            }
        }
    }
    out
}

fn fibonacci_count(k: u32) -> u64 {
    // F_{k+2} with F_1 = F_2 = 1
    let (mut a, mut b) = (1u64, 2u64);
    for _ in 0..k {
        (a, b) = (b, a + b);
    }
    a
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerCount {
    pub exponent: u32,
    pub count: u64,
    pub expected: u64,
}

/// Members below `radix^k` against `F_{k+2}` (Fib) or `T_{k+3}` (Trib).
pub fn power_count_check(f: PatternFamily, max_exponent: u32) -> Vec<PowerCount> {
    let top = f.radix().pow(max_exponent);
    let members = members_below(f, top);
    (0..=max_exponent)
        .map(|k| {
            let bound = f.radix().pow(k);
            let count = members.partition_point(|&x| x < bound) as u64;
            let expected = if f.is_trib() {
                small::tribonacci(k as usize + 3).expect("small index")
            } else {
                fibonacci_count(k)
            };
            PowerCount {
                exponent: k,
                count,
                expected,
            }
        })
        .collect()
}

/// First `n` (1-based) where the residue class of the `n`-th member does not
/// name the `n`-th letter of the Fibonacci (Fib) or Tribonacci (Trib) word.
pub fn word_residue_check(f: PatternFamily, n: usize) -> Option<usize> {
    let word = if f.is_trib() {
        tribonacci_word(n)
    } else {
        fibonacci_word(n)
    };
    let members = family_stream(f, n);
    members
        .iter()
        .zip(word.chars())
        .position(|(&x, c)| f.residue_letter(x) != Letter::from_char(c))
        .map(|i| i + 1)
}

/// `n = x + y` with both Tribbinary: scan bits upward, giving set bits to
/// `x` until it holds two in a row, then one to `y`.
pub fn decompose_two_tribbinary(n: u64) -> (u64, u64) {
    let (mut x, mut y) = (0u64, 0u64);
    let mut run = 0;
    for k in 0..64 {
        if n >> k & 1 == 0 {
            run = 0;
            continue;
        }
        if run < 2 {
            x |= 1 << k;
            run += 1;
        } else {
            y |= 1 << k;
            run = 0;
        }
    }
    (x, y)
}

fn ternary_digits(mut n: u64) -> Vec<u64> {
    let mut d = Vec::new();
    while n > 0 {
        d.push(n % 3);
        n /= 3;
    }
    d
}

fn from_ternary(bits: &[u64]) -> u64 {
    bits.iter().rev().fold(0, |acc, &b| acc * 3 + b)
}

/// Starts from addends with 1s at `covers[i][pos]`, two per position, and
/// clears `2 − d` ones at each position (most significant first), taking
/// from the addend with the most remaining ones, ties to the lowest index.
fn clear_down<const N: usize>(n: u64, covers: impl Fn(usize, usize) -> bool) -> [u64; N] {
    let digits = ternary_digits(n);
    let k = digits.len();
    let mut words = [(); N].map(|_| vec![0u64; k]);
    for (i, w) in words.iter_mut().enumerate() {
        for (pos, bit) in w.iter_mut().enumerate() {
            *bit = u64::from(covers(i, pos));
        }
    }
    for pos in (0..k).rev() {
        for _ in 0..2 - digits[pos] {
            let pick = (0..N)
                .filter(|&i| words[i][pos] == 1)
                .max_by_key(|&i| (words[i].iter().sum::<u64>(), Reverse(i)))
                .expect("two addends cover every position");
            words[pick][pos] = 0;
        }
    }
    words.map(|w| from_ternary(&w))
}

/// Four Fibternary numbers summing to `n`, from two copies each of the
/// alternating words `1010…` and `0101…`.
pub fn decompose_four_fibternary(n: u64) -> [u64; 4] {
    clear_down::<4>(n, |i, pos| (pos + i / 2) % 2 == 0)
}

/// Three Tribternary numbers summing to `n`; addend `i` starts with zeros
/// exactly at positions `≡ i (mod 3)`.
pub fn decompose_three_tribternary(n: u64) -> [u64; 3] {
    clear_down::<3>(n, |i, pos| pos % 3 != i)
}

/// Pigeonhole on `a(k) = (b^k − 1)/(b − 1)` modulo `n` for `k = 0..=n`.
fn repunit_multiple(n: u64, base: u64) -> BigUint {
    assert!(n >= 1, "n must be positive");
    let mut seen = vec![None; n as usize];
    let mut residue = 0u64;
    for k in 0..=n {
        if let Some(j) = seen[residue as usize] {
            let repunit = |m: u64| -> BigUint {
                (BigUint::from(base).pow(m as u32) - 1u32) / (base - 1)
            };
            return repunit(k) - repunit(j);
        }
        seen[residue as usize] = Some(k);
        residue = ((u128::from(residue) * u128::from(base) + 1) % u128::from(n)) as u64;
    }
    unreachable!("n + 1 residues modulo n collide")
}

/// A Fibternary multiple of `n`: a difference of two values `(9^k − 1)/8`.
pub fn fibternary_multiple(n: u64) -> BigUint {
    repunit_multiple(n, 9)
}

/// A Fibbinary (hence Tribbinary) multiple of `n`: a difference of two
/// values `(4^k − 1)/3`.
pub fn fibbinary_multiple(n: u64) -> BigUint {
    repunit_multiple(n, 4)
}

/// Membership test for values beyond 64 bits.
pub fn is_member_big(f: PatternFamily, x: &BigUint) -> bool {
    if let Some(v) = x.to_u64() {
        return f.is_member(v);
    }
    let digits = x.to_radix_le(f.radix() as u32);
    let mut run = 0;
    for d in digits {
        match d {
            0 => run = 0,
            1 => {
                run += 1;
                if run > f.max_run() {
                    return false;
                }
            }
            _ => return false,
        }
    }
    true
}

/// `"90 = 10100_3"`.
pub fn render(x: &BigUint, radix: u32) -> String {
    let digits = if x.is_zero() {
        "0".to_string()
    } else {
        x.to_str_radix(radix)
    };
    format!("{x} = {digits}_{radix}")
}

/// Zeckendorf representation: bit `k` is weighted by the Fibonacci number
/// `F_{k+2}` (1, 2, 3, 5, …), with no two adjacent bits set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ZeckendorfDigits(pub u64);

impl ZeckendorfDigits {
    fn weights() -> Vec<u64> {
        let mut w = vec![1u64, 2];
        while w.len() < 90 {
            let k = w.len();
            match w[k - 1].checked_add(w[k - 2]) {
                Some(v) => w.push(v),
                None => break,
            }
        }
        w
    }

    pub fn of(mut n: u64) -> Self {
        let w = Self::weights();
        let mut mask = 0u64;
        for k in (0..w.len().min(64)).rev() {
            if w[k] <= n {
                n -= w[k];
                mask |= 1 << k;
            }
        }
        Self(mask)
    }

    pub fn value(self) -> u64 {
        let w = Self::weights();
        (0..64).filter(|k| self.0 >> k & 1 == 1).map(|k| w[k]).sum()
    }
}

impl fmt::Display for ZeckendorfDigits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:b}", self.0)
    }
}

/// The `n`-th member (0-based) via representations: the Zeckendorf (Fib) or
/// Tribonacci (Trib) digits of `n` read in the family's radix.
pub fn member_by_representation(f: PatternFamily, n: u64) -> u64 {
    let mask = if f.is_trib() {
        small::to_mask(n).expect("in range")
    } else {
        ZeckendorfDigits::of(n).0
    };
    (0..64)
        .rev()
        .fold(0u64, |acc, k| acc * f.radix() + (mask >> k & 1))
}
