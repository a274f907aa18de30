//! Tribonacci numeration.
//!
//! Digit strings are written most-significant first. The digit at position
//! `k` counted from the right (0-based) is weighted by the Tribonacci number
//! of index `k + 3`, so the weights read 1, 2, 4, 7, 13, ... and `(9)_T` is
//! `1010`. The duplicated value 1 of the Tribonacci sequence occupies a
//! single position.

mod canonize;
pub mod small;

use std::fmt;
use std::str::FromStr;
use std::sync::RwLock;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

pub use canonize::{
    canonize, canonize_padded, CanonizeError, CanonizeRule, CanonizeStep, CanonizeTrace,
    Canonizer,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumerationError {
    #[error("{value} is not in the first column: its representation {digits} ends in 0")]
    NotFirstColumn { value: BigUint, digits: TribDigits },
    #[error("row index of {0} does not fit in 64 bits")]
    RowOverflow(BigUint),
    #[error("malformed digit string {input:?}: {reason}")]
    Parse { input: String, reason: &'static str },
}

static MEMO: RwLock<Vec<BigUint>> = RwLock::new(Vec::new());

/// The Tribonacci number `T_n` with `T_0 = T_1 = 0`, `T_2 = 1`.
///
/// Values are memoized in a process-wide append-only table.
pub fn tribonacci(n: usize) -> BigUint {
    if let Some(v) = MEMO.read().expect("tribonacci memo poisoned").get(n) {
        return v.clone();
    }
    let mut memo = MEMO.write().expect("tribonacci memo poisoned");
    if memo.is_empty() {
        memo.extend([BigUint::zero(), BigUint::zero(), BigUint::from(1u32)]);
    }
    while memo.len() <= n {
        let k = memo.len();
        let next = &memo[k - 1] + &memo[k - 2] + &memo[k - 3];
        memo.push(next);
    }
    memo[n].clone()
}

/// Weight of digit position `k`: `T_{k+3}`.
pub fn position_weight(k: usize) -> BigUint {
    tribonacci(k + 3)
}

/// How a digit string relates to the canonical form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    /// Digits in {0,1}, no `111`, no leading zero.
    Canonical,
    /// Digits in {0,1} but not canonical.
    NonCanonical,
    /// Some digit exceeds 1.
    Improper,
}

/// A digit string in the Tribonacci base.
///
/// Canonical, non-canonical and improper strings share this type; the
/// classification is always derived from the digits.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TribDigits {
    digits: Vec<u64>,
}

impl TribDigits {
    pub fn new(digits: Vec<u64>) -> Self {
        Self { digits }
    }

    /// The one-character word `0`.
    pub fn zero() -> Self {
        Self { digits: vec![0] }
    }

    /// Build from a bitmask (bit `k` = position `k`).
    pub fn from_mask(mask: u64) -> Self {
        if mask == 0 {
            return Self::zero();
        }
        let len = 64 - mask.leading_zeros() as usize;
        let digits = (0..len).rev().map(|k| (mask >> k) & 1).collect();
        Self { digits }
    }

    /// Bitmask form of a proper word of length at most 64.
    pub fn to_mask(&self) -> Option<u64> {
        let significant = self.significant();
        if significant.len() > 64 || significant.iter().any(|&d| d > 1) {
            return None;
        }
        Some(significant.iter().fold(0u64, |acc, &d| (acc << 1) | d))
    }

    /// Digits, most significant first.
    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Digit at position `k` from the right (0 beyond the left end).
    pub fn digit_at(&self, k: usize) -> u64 {
        if k < self.digits.len() {
            self.digits[self.digits.len() - 1 - k]
        } else {
            0
        }
    }

    fn significant(&self) -> &[u64] {
        let start = self
            .digits
            .iter()
            .position(|&d| d != 0)
            .unwrap_or(self.digits.len());
        &self.digits[start..]
    }

    pub fn classification(&self) -> Classification {
        if self.digits.iter().any(|&d| d > 1) {
            return Classification::Improper;
        }
        let leading_zero = self.digits.len() > 1 && self.digits[0] == 0;
        let triple = self.digits.windows(3).any(|w| w == [1, 1, 1]);
        if self.digits.is_empty() || leading_zero || triple {
            Classification::NonCanonical
        } else {
            Classification::Canonical
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.classification() == Classification::Canonical
    }

    pub fn is_proper(&self) -> bool {
        self.digits.iter().all(|&d| d <= 1)
    }

    /// Same digits with leading zeros removed (keeping a single `0`).
    pub fn trim_leading_zeros(&self) -> Self {
        let s = self.significant();
        if s.is_empty() {
            Self::zero()
        } else {
            Self { digits: s.to_vec() }
        }
    }

    /// `self` followed by `k` zeros.
    pub fn with_trailing_zeros(&self, k: usize) -> Self {
        let mut digits = self.digits.clone();
        digits.extend(std::iter::repeat_n(0, k));
        Self { digits }
    }

    /// Number of trailing zeros of a nonzero word.
    pub fn trailing_zeros(&self) -> usize {
        self.digits.iter().rev().take_while(|&&d| d == 0).count()
    }

    /// Removes all trailing zeros, returning how many were removed.
    /// A word that is entirely zero is returned unchanged.
    pub fn strip_trailing_zeros(&self) -> (Self, usize) {
        let t = self.trailing_zeros();
        if t == self.digits.len() {
            return (self.clone(), 0);
        }
        (
            Self {
                digits: self.digits[..self.digits.len() - t].to_vec(),
            },
            t,
        )
    }

    pub fn digit_sum(&self) -> u64 {
        self.digits.iter().fold(0u64, |a, &d| a.saturating_add(d))
    }

    /// Index (from the left) of the leftmost digit greater than 1.
    pub fn improper_boundary(&self) -> Option<usize> {
        self.digits.iter().position(|&d| d > 1)
    }

    /// Sum of the digits to the right of the last 0 preceding the improper
    /// boundary. Proper words have weight 0; the word is treated as padded
    /// with zeros on the left.
    pub fn weight(&self) -> u64 {
        weight_of(&self.digits)
    }

    /// Weighted digit sum when it fits in 128 bits.
    pub fn evaluate_u128(&self) -> Option<u128> {
        let w = small::weights();
        let mut total: u128 = 0;
        for (k, &d) in self.digits.iter().rev().enumerate() {
            if d == 0 {
                continue;
            }
            let weight = *w.get(k)? as u128;
            total = total.checked_add((d as u128).checked_mul(weight)?)?;
        }
        Some(total)
    }

    /// Weighted digit sum `[w]_T`.
    pub fn evaluate(&self) -> BigUint {
        if let Some(v) = self.evaluate_u128() {
            return BigUint::from(v);
        }
        self.digits
            .iter()
            .rev()
            .enumerate()
            .filter(|(_, &d)| d != 0)
            .map(|(k, &d)| position_weight(k) * d)
            .sum()
    }

    /// Weighted digit sum in base U (weights 0, 1, 2, 3, 6, 11, ...).
    pub fn eval_base_u(&self) -> BigUint {
        self.digits
            .iter()
            .rev()
            .enumerate()
            .skip(1)
            .filter(|(_, &d)| d != 0)
            .map(|(k, &d)| (tribonacci(k + 3) - tribonacci(k + 2)) * d)
            .sum()
    }

    /// Digitwise product with the word `11`: each digit plus its right
    /// neighbour, one position longer.
    pub fn times_eleven(&self) -> Self {
        let n = self.digits.len();
        let mut out = vec![0u64; n + 1];
        for (i, &d) in self.digits.iter().enumerate() {
            out[i] += d;
            out[i + 1] += d;
        }
        Self { digits: out }
    }

    /// Every digit multiplied by `k`.
    pub fn scaled(&self, k: u64) -> Self {
        Self {
            digits: self.digits.iter().map(|&d| d * k).collect(),
        }
    }

    /// Positions (from the right) holding a nonzero digit, highest first.
    pub fn support(&self) -> Vec<usize> {
        let n = self.digits.len();
        (0..n)
            .filter(|&i| self.digits[i] != 0)
            .map(|i| n - 1 - i)
            .collect()
    }
}

pub(crate) fn weight_of(digits: &[u64]) -> u64 {
    let Some(boundary) = digits.iter().position(|&d| d > 1) else {
        return 0;
    };
    let start = digits[..boundary]
        .iter()
        .rposition(|&d| d == 0)
        .map_or(0, |z| z + 1);
    digits[start..].iter().fold(0u64, |a, &d| a.saturating_add(d))
}

impl fmt::Display for TribDigits {
    /// Digits above 9 are written in parentheses: `1(12)0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in &self.digits {
            if d > 9 {
                write!(f, "({d})")?;
            } else {
                write!(f, "{d}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TribDigits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TribDigits({self})")
    }
}

impl FromStr for TribDigits {
    type Err = NumerationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason| NumerationError::Parse {
            input: s.to_string(),
            reason,
        };
        let mut digits = Vec::new();
        let mut chars = s.trim().chars();
        while let Some(c) = chars.next() {
            match c {
                '0'..='9' => digits.push(u64::from(c as u8 - b'0')),
                '(' => {
                    let inner: String = chars.by_ref().take_while(|&c| c != ')').collect();
                    if inner.is_empty() || !inner.chars().all(|c| c.is_ascii_digit()) {
                        return Err(err("parenthesized digit must be a decimal number"));
                    }
                    digits.push(inner.parse().map_err(|_| err("digit out of range"))?);
                }
                _ => return Err(err("unexpected character")),
            }
        }
        if digits.is_empty() {
            return Err(err("empty digit string"));
        }
        Ok(Self { digits })
    }
}

/// Greedy canonical representation `(n)_T`.
pub fn to_canonical(n: &BigUint) -> TribDigits {
    if let Some(mask) = n.to_u64().and_then(small::to_mask) {
        return TribDigits::from_mask(mask);
    }
    let mut top = 0usize;
    while position_weight(top + 1) <= *n {
        top += 1;
    }
    let mut rest = n.clone();
    let mut digits = Vec::with_capacity(top + 1);
    for k in (0..=top).rev() {
        let w = position_weight(k);
        if w <= rest {
            rest -= w;
            digits.push(1);
        } else {
            digits.push(0);
        }
    }
    debug_assert!(rest.is_zero());
    TribDigits { digits }
}

/// Tribonacci successor `out(n)`: the canonical word shifted left by one.
pub fn successor(n: &BigUint) -> BigUint {
    successor_k(n, 1)
}

/// `k`-fold successor.
pub fn successor_k(n: &BigUint, k: usize) -> BigUint {
    if let Some(v) = n
        .to_u64()
        .and_then(|v| small::successor_k(v, k.try_into().ok()?))
    {
        return BigUint::from(v);
    }
    to_canonical(n).with_trailing_zeros(k).evaluate()
}

/// Row of the Trithoff array whose first column holds `v`.
///
/// With `(v)_T = a1` the row is `[a1]_T - [a]_T`, which also equals
/// `1 + [a1]_U`.
pub fn row_number(v: &BigUint) -> Result<u64, NumerationError> {
    if let Some(r) = v.to_u64().and_then(small::row_number) {
        return Ok(r);
    }
    let digits = to_canonical(v);
    if digits.digit_at(0) != 1 {
        return Err(NumerationError::NotFirstColumn {
            value: v.clone(),
            digits,
        });
    }
    let row = digits.eval_base_u() + 1u32;
    row.to_u64().ok_or(NumerationError::RowOverflow(row))
}
