//! Integer sequences obeying the Tribonacci rule in both directions.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::array::first_column;
use crate::numeration::{
    canonize_padded, row_number, small, to_canonical, tribonacci, CanonizeError, NumerationError,
    TribDigits,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtraTribError {
    #[error("the zero sequence has no positive tail")]
    Zero,
    #[error("the sequence has a negative tail")]
    NegativeTail,
    #[error("not invertible: parity type {0}")]
    NotInvertible(ParityType),
    #[error("anchor value {0} does not fit in a 64-bit digit")]
    DigitOverflow(BigInt),
    #[error(transparent)]
    Canonize(#[from] CanonizeError),
    #[error(transparent)]
    Numeration(#[from] NumerationError),
    #[error("no wall signature within {0} steps")]
    WallNotFound(usize),
    #[error("malformed sequence text: {0}")]
    Parse(String),
}

/// `T_n` for any integer `n`, extended leftward by `T_n = T_{n+3} − T_{n+2} − T_{n+1}`.
pub fn tribonacci_signed(n: i64) -> BigInt {
    if n >= 0 {
        return BigInt::from(tribonacci(n as usize));
    }
    let (mut x, mut y, mut z) = (BigInt::zero(), BigInt::zero(), BigInt::one()); // T_0, T_1, T_2
    for _ in 0..-n {
        let w = &z - &y - &x;
        z = y;
        y = x;
        x = w;
    }
    x
}

/// Four-periodic parity pattern of a Tribonacci-like integer sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ParityType {
    EEEE,
    OOOO,
    EOEO,
    EEOO,
}

impl fmt::Display for ParityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// `S` with `S_{i}, S_{i+1}, S_{i+2}` given at base index `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtraTrib {
    base_index: i64,
    anchor: [BigInt; 3],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocateResult {
    pub row: u64,
    /// Index `n` with `S_n` equal to the row's first-column value.
    pub start_index: i64,
    #[serde(serialize_with = "crate::decimal")]
    pub first_column: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultipleEntry {
    pub k: u64,
    pub row: u64,
    #[serde(serialize_with = "crate::decimal")]
    pub first_column: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeftSigns {
    pub first_negative_index: i64,
    #[serde(serialize_with = "crate::decimal")]
    pub first_negative: BigInt,
    pub window: usize,
    /// Highest index of a same-sign triple at or left of the first negative.
    pub violation: Option<i64>,
}

impl LeftSigns {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Four consecutive reversal terms `R_m..R_{m+3}`, `R_m = |S_{−m}|`, with
/// `R_{m+3} ≠ R_m + R_{m+1} + R_{m+2}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReversalWitness {
    pub m: i64,
    #[serde(serialize_with = "crate::decimals")]
    pub values: [BigInt; 4],
}

impl ExtraTrib {
    pub fn new(base_index: i64, anchor: [BigInt; 3]) -> Self {
        Self { base_index, anchor }
    }

    pub fn from_i64(base_index: i64, a: i64, b: i64, c: i64) -> Self {
        Self::new(base_index, [a.into(), b.into(), c.into()])
    }

    /// `T_n` anchored `(0, 0, 1)` at index 0.
    pub fn tribonacci() -> Self {
        Self::from_i64(0, 0, 0, 1)
    }

    /// Row `r` of the array with `S_c` the entry in column `c`.
    pub fn row(r: u64) -> Self {
        let g = first_column(r);
        let next = small::successor(g).expect("in range");
        let after = small::successor(next).expect("in range");
        Self::new(1, [g.into(), next.into(), after.into()])
    }

    pub fn base_index(&self) -> i64 {
        self.base_index
    }

    pub fn anchor(&self) -> &[BigInt; 3] {
        &self.anchor
    }

    pub fn is_zero(&self) -> bool {
        self.anchor.iter().all(Zero::is_zero)
    }

    /// Same sequence re-anchored at index `i`.
    pub fn anchored_at(&self, i: i64) -> Self {
        Self::new(i, [self.term(i), self.term(i + 1), self.term(i + 2)])
    }

    /// Terms `S_from..=S_to`.
    pub fn terms(&self, from: i64, to: i64) -> Vec<BigInt> {
        if from > to {
            return Vec::new();
        }
        let start = self.anchored_at(from);
        let mut v: Vec<BigInt> = start.anchor.to_vec();
        let len = (to - from + 1) as usize;
        while v.len() < len {
            let k = v.len();
            let next = &v[k - 1] + &v[k - 2] + &v[k - 3];
            v.push(next);
        }
        v.truncate(len);
        v
    }

    /// `S_n` by the recurrence.
    pub fn term(&self, n: i64) -> BigInt {
        let offset = n - self.base_index;
        if (0..3).contains(&offset) {
            return self.anchor[offset as usize].clone();
        }
        let [mut x, mut y, mut z] = self.anchor.clone();
        if offset > 2 {
            for _ in 2..offset {
                let w = &x + &y + &z;
                x = y;
                y = z;
                z = w;
            }
            z
        } else {
            for _ in offset..0 {
                let w = &z - &y - &x;
                z = y;
                y = x;
                x = w;
            }
            x
        }
    }

    /// `S_n = a·T_{m−1} + (c − b)·T_m + b·T_{m+1}` with `m = n − i`.
    pub fn closed_form_term(&self, n: i64) -> BigInt {
        let m = n - self.base_index;
        let [a, b, c] = &self.anchor;
        a * tribonacci_signed(m - 1) + (c - b) * tribonacci_signed(m) + b * tribonacci_signed(m + 1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let i = self.base_index;
        let o = other.anchored_at(i);
        Self::new(
            i,
            [
                &self.anchor[0] + &o.anchor[0],
                &self.anchor[1] + &o.anchor[1],
                &self.anchor[2] + &o.anchor[2],
            ],
        )
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.base_index, self.anchor.clone().map(|x| x * k))
    }

    /// `D_n = S_{n+1} − S_n`.
    pub fn difference(&self) -> Self {
        let t = self.terms(self.base_index, self.base_index + 3);
        Self::new(
            self.base_index,
            [&t[1] - &t[0], &t[2] - &t[1], &t[3] - &t[2]],
        )
    }

    pub fn parity_type(&self) -> ParityType {
        let odd = self.anchor.clone().map(|x| x.is_odd());
        match odd {
            [false, false, false] => ParityType::EEEE,
            [true, true, true] => ParityType::OOOO,
            [false, true, false] | [true, false, true] => ParityType::EOEO,
            _ => ParityType::EEOO,
        }
    }

    /// The Tribonacci-like `Q` with `Q_{n+1} − Q_n = S_n`; integral exactly
    /// when `S_i ≡ S_{i+2} (mod 2)`.
    pub fn difference_inverse(&self) -> Result<Self, ExtraTribError> {
        let [a, b, c] = &self.anchor;
        if (c - a).is_odd() {
            return Err(ExtraTribError::NotInvertible(self.parity_type()));
        }
        let q0: BigInt = (c - a) / 2;
        let q1 = &q0 + a;
        let q2 = &q1 + b;
        Ok(Self::new(self.base_index, [q0, q1, q2]))
    }

    /// Largest `v` with `2^v` dividing every term; `None` for zero.
    pub fn valuation(&self) -> Option<u64> {
        self.anchor.iter().filter_map(|x| x.trailing_zeros()).min()
    }

    /// Index `j` of the first triple, scanning right from the anchor, with
    /// all three terms nonnegative and one positive.
    fn nonnegative_triple(&self) -> Result<i64, ExtraTribError> {
        if self.is_zero() {
            return Err(ExtraTribError::Zero);
        }
        let positive = |x: &BigInt| x.sign() == Sign::Plus;
        let [mut x, mut y, mut z] = self.anchor.clone();
        let mut j = self.base_index;
        // Leftward first: the anchor may sit inside the positive tail.
        if !x.is_negative() && !y.is_negative() && !z.is_negative() {
            loop {
                let w = &z - &y - &x;
                if w.is_negative() || (w.is_zero() && !positive(&x) && !positive(&y)) {
                    break;
                }
                z = y;
                y = x;
                x = w;
                j -= 1;
            }
            return Ok(j);
        }
        let limit = 64 + 4 * self.anchor.iter().map(|v| v.bits()).max().unwrap_or(0) as i64;
        for _ in 0..limit {
            if !x.is_negative() && !y.is_negative() && !z.is_negative() {
                return Ok(j);
            }
            let w = &x + &y + &z;
            x = y;
            y = z;
            z = w;
            j += 1;
        }
        Err(ExtraTribError::NegativeTail)
    }

    /// Tail location by canonizing the improper word `b(c−b)a·0^k` built
    /// from an anchor `(a, b, c)` with `a, b ≥ 0` and `c ≥ b`.
    pub fn locate(&self) -> Result<LocateResult, ExtraTribError> {
        let j = self.nonnegative_triple()? + 1;
        let t = self.terms(j, j + 2);
        let digit = |x: &BigInt| x.to_u64().ok_or_else(|| ExtraTribError::DigitOverflow(x.clone()));
        let word = TribDigits::new(vec![digit(&t[1])?, digit(&(&t[2] - &t[1]))?, digit(&t[0])?]);
        let (canonical, k) = canonize_padded(&word)?;
        let (stem, zeros) = canonical.strip_trailing_zeros();
        let value = stem.evaluate();
        Ok(LocateResult {
            row: row_number(&value)?,
            start_index: j + 4 + k as i64 - zeros as i64,
            first_column: value,
        })
    }

    /// Tail location by searching for the wall: the unique `w` with
    /// `S_{w+1} = out(S_w) − 1` followed by two successors.
    pub fn locate_by_wall(&self, max_steps: usize) -> Result<LocateResult, ExtraTribError> {
        let j = self.nonnegative_triple()?;
        let out = |x: &BigInt| -> BigInt {
            BigInt::from(crate::numeration::successor(&x.to_biguint().expect("nonnegative")))
        };
        let mut window = self.terms(j, j + 3);
        for step in 0..max_steps {
            let w = &window[0];
            if w.is_positive() {
                let m = &window[1];
                if *m == out(w) - 1 && window[2] == out(m) && window[3] == out(&window[2]) {
                    let value = m.to_biguint().expect("positive");
                    return Ok(LocateResult {
                        row: row_number(&value)?,
                        start_index: j + step as i64 + 1,
                        first_column: value,
                    });
                }
            }
            let next = &window[1] + &window[2] + &window[3];
            window.remove(0);
            window.push(next);
        }
        Err(ExtraTribError::WallNotFound(max_steps))
    }

    /// Extends left from the anchor to the first negative term, then checks
    /// that no three consecutive terms within `window` further steps share
    /// a strict sign.
    pub fn left_signs(&self, window: usize) -> Result<LeftSigns, ExtraTribError> {
        let mut i = self.base_index + 2;
        let mut value = self.term(i);
        let limit = 4096 + 8 * self.anchor.iter().map(|v| v.bits()).max().unwrap_or(0) as i64;
        while !value.is_negative() {
            i -= 1;
            if self.base_index + 2 - i > limit {
                return Err(ExtraTribError::Zero);
            }
            value = self.term(i);
        }
        let terms = self.terms(i - window as i64, i);
        let violation = terms
            .windows(3)
            .enumerate()
            .rev()
            .find(|(_, t)| {
                t.iter().all(|x| x.is_positive()) || t.iter().all(|x| x.is_negative())
            })
            .map(|(k, _)| i - window as i64 + k as i64 + 2);
        Ok(LeftSigns {
            first_negative_index: i,
            first_negative: value,
            window,
            violation,
        })
    }

    /// A violation of the Tribonacci rule by the reversal `R_m = |S_{−m}|`,
    /// searched left of the first negative term within `max_steps`.
    pub fn reversal_witness(&self, max_steps: usize) -> Option<ReversalWitness> {
        let start = self.left_signs(0).ok()?.first_negative_index;
        let terms = self.terms(start - max_steps as i64 - 3, start);
        // terms[k] = S_{lo + k}; R_m = |S_{-m}|
        let lo = start - max_steps as i64 - 3;
        (0..=max_steps).find_map(|s| {
            let top = terms.len() - 1 - s; // S index lo + top, i.e. m = -(lo + top)
            let r: [BigInt; 4] = std::array::from_fn(|d| terms[top - d].abs());
            (r[3] != &r[0] + &r[1] + &r[2]).then(|| ReversalWitness {
                m: -(lo + top as i64),
                values: r,
            })
        })
    }

    /// `index=<base>` header followed by `len` comma-separated terms.
    pub fn to_text(&self, len: usize) -> String {
        let len = len.max(3);
        let terms = self.terms(self.base_index, self.base_index + len as i64 - 1);
        let body: Vec<String> = terms.iter().map(ToString::to_string).collect();
        format!("index={}\n{}", self.base_index, body.join(","))
    }
}

impl fmt::Display for ExtraTrib {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text(8))
    }
}

impl FromStr for ExtraTrib {
    type Err = ExtraTribError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |m: &str| ExtraTribError::Parse(m.to_string());
        let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| err("missing index header"))?;
        let base: i64 = header
            .strip_prefix("index=")
            .ok_or_else(|| err("header must read index=<n>"))?
            .trim()
            .parse()
            .map_err(|_| err("index is not an integer"))?;
        let body = lines.next().ok_or_else(|| err("missing terms"))?;
        let terms: Vec<BigInt> = body
            .split(',')
            .map(|t| t.trim().parse::<BigInt>().map_err(|_| err("term is not an integer")))
            .collect::<Result<_, _>>()?;
        if terms.len() < 3 {
            return Err(err("need at least three terms"));
        }
        if terms.windows(4).any(|w| w[3] != &w[0] + &w[1] + &w[2]) {
            return Err(err("terms break the Tribonacci rule"));
        }
        Ok(Self::new(base, [terms[0].clone(), terms[1].clone(), terms[2].clone()]))
    }
}

/// Whether row `r` has an integral difference-inverse.
pub fn row_invertible(r: u64) -> bool {
    ExtraTrib::row(r).parity_type() != ParityType::EEOO
}

pub fn invertible_rows(count: usize) -> Vec<u64> {
    (1u64..).filter(|&r| row_invertible(r)).take(count).collect()
}

pub fn noninvertible_rows(count: usize) -> Vec<u64> {
    (1u64..).filter(|&r| !row_invertible(r)).take(count).collect()
}

/// Row holding the difference sequence of row `r`: multiply the first-column
/// word by 11 digitwise, canonize with padding and drop trailing zeros.
pub fn diff_row_map(r: u64) -> Result<u64, ExtraTribError> {
    let word = to_canonical(&first_column(r).into()).times_eleven();
    let (canonical, _) = canonize_padded(&word)?;
    let (stem, _) = canonical.strip_trailing_zeros();
    Ok(row_number(&stem.evaluate())?)
}

/// `r, d(r), d(d(r)), …` with `count` entries.
pub fn diff_row_orbit(start: u64, count: usize) -> Result<Vec<u64>, ExtraTribError> {
    if count == 0 {
        return Ok(Vec::new());
    }
    let mut v = vec![start];
    while v.len() < count {
        let next = diff_row_map(*v.last().expect("nonempty"))?;
        v.push(next);
    }
    Ok(v)
}

/// `S`, its difference-inverse, and so on until no integral inverse exists
/// or `cap` sequences are collected.
pub fn invert_chain(s: &ExtraTrib, cap: usize) -> Vec<ExtraTrib> {
    let mut chain = vec![s.clone()];
    while chain.len() < cap {
        match chain.last().expect("nonempty").difference_inverse() {
            Ok(next) => chain.push(next),
            Err(_) => break,
        }
    }
    chain
}

/// Locates `k·S` for `k = 1..=n_max` by writing the digit `k` in place of
/// every 1 of the first-column word of `S`'s row and canonizing.
pub fn multiples_table(s: &ExtraTrib, n_max: u64) -> Result<Vec<MultipleEntry>, ExtraTribError> {
    let base = s.locate()?;
    let word = to_canonical(&base.first_column);
    (1..=n_max)
        .map(|k| {
            let (canonical, _) = canonize_padded(&word.scaled(k))?;
            let (stem, _) = canonical.strip_trailing_zeros();
            let value = stem.evaluate();
            Ok(MultipleEntry {
                k,
                row: row_number(&value)?,
                first_column: value,
            })
        })
        .collect()
}

/// `(n, row of n·S, row ≡ 1 mod n)` for `n = 1..=n_max`.
pub fn row_mod_check(s: &ExtraTrib, n_max: u64) -> Result<Vec<(u64, u64, bool)>, ExtraTribError> {
    Ok(multiples_table(s, n_max)?
        .into_iter()
        .map(|e| (e.k, e.row, e.row % e.k == 1 % e.k))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| x.into()).collect()
    }

    #[test]
    fn backward_tribonacci() {
        let t = ExtraTrib::tribonacci();
        let listed = [1, 0, 0, 1, -1, 0, 2, -3, 1, 4, -8, 5, 7, -20, 18, 9, -47, 56, 0, -103, 159, -56, -206, 421, -271];
        let got: Vec<BigInt> = (0..listed.len() as i64).map(|k| t.term(2 - k)).collect();
        assert_eq!(got, ints(&listed));
        assert_eq!(t.term(8), 24.into());
        for n in -20..20 {
            assert_eq!(t.closed_form_term(n), t.term(n));
        }
    }

    #[test]
    fn differences_between_rows() {
        assert_eq!(ExtraTrib::row(1).difference().locate().unwrap().row, 2);
        assert_eq!(ExtraTrib::row(3).difference().locate().unwrap().row, 7);
        assert!(ExtraTrib::from_i64(0, 0, 0, 0).difference().is_zero());
    }

    #[test]
    fn parity_types() {
        assert_eq!(ExtraTrib::row(7).parity_type(), ParityType::EEEE);
        assert_eq!(ExtraTrib::row(3).parity_type(), ParityType::OOOO);
        assert_eq!(ExtraTrib::row(2).parity_type(), ParityType::EOEO);
        assert_eq!(ExtraTrib::row(1).parity_type(), ParityType::EEOO);
    }

    #[test]
    fn inverses() {
        let s = ExtraTrib::from_i64(0, 3, 6, 11);
        let q = s.difference_inverse().unwrap();
        assert_eq!(q.terms(1, 3), ints(&[7, 13, 24]));
        assert_eq!(q.difference(), s);
        let s = ExtraTrib::from_i64(0, 5, 9, 17);
        assert_eq!(s.difference_inverse().unwrap().terms(1, 3), ints(&[11, 20, 37]));
        assert_eq!(
            ExtraTrib::row(1).difference_inverse(),
            Err(ExtraTribError::NotInvertible(ParityType::EEOO))
        );
    }

    #[test]
    fn row_lists() {
        assert_eq!(invertible_rows(5), [2, 3, 4, 7, 11]);
        assert_eq!(noninvertible_rows(5), [1, 5, 6, 8, 9]);
        assert_eq!(diff_row_orbit(1, 7).unwrap(), [1, 2, 3, 7, 19, 29, 81]);
    }

    #[test]
    fn locating() {
        let t = ExtraTrib::tribonacci();
        let two = t.scale(&2.into());
        let r = two.locate().unwrap();
        assert_eq!((r.row, r.first_column.clone()), (7, 14u32.into()));
        assert_eq!(two.term(r.start_index), 14.into());
        assert_eq!(two.locate_by_wall(10_000).unwrap(), r);
        assert_eq!(t.locate().unwrap().row, 1);
        assert_eq!(t.scale(&3.into()).locate().unwrap().first_column, 21u32.into());
    }

    #[test]
    fn multiples() {
        let table = multiples_table(&ExtraTrib::tribonacci(), 5).unwrap();
        let rows: Vec<u64> = table.iter().map(|e| e.row).collect();
        assert_eq!(rows, [1, 7, 10, 81, 101]);
    }

    #[test]
    fn left_and_reversal() {
        let t = ExtraTrib::tribonacci();
        let signs = t.left_signs(200).unwrap();
        assert_eq!(signs.first_negative, (-1).into());
        assert!(signs.passed());
        assert!(t.reversal_witness(60).is_some());
    }

    #[test]
    fn text_round_trip() {
        let s = ExtraTrib::from_i64(-3, 2, -1, 5);
        let text = s.to_text(6);
        assert!(text.starts_with("index=-3\n2,-1,5,6,"));
        assert_eq!(text.parse::<ExtraTrib>().unwrap(), s);
        assert!("index=0\n1,2,3,7".parse::<ExtraTrib>().is_err());
    }
}
