//! The Trithoff array and its precolumns.
//!
//! Column 1 lists, in order, the positive integers whose canonical
//! representation ends in 1; each entry is followed by its successor.
//! Columns 0, −1, −2 (wall, seed, pre-seed) extend every row to the left
//! by the Tribonacci rule.

use std::collections::{HashMap, VecDeque};
use std::sync::Mutex;

use num_bigint::BigUint;
use serde::Serialize;

use crate::numeration::{small, successor_k};
use crate::tribword::{entry_estimate, letter_at, Letter};

/// Leftmost column index.
pub const MIN_COLUMN: i64 = -2;

fn out(n: u64) -> u64 {
    small::successor(n).expect("value within the machine-word range")
}

/// `max{x : out(x) ≤ v}`.
fn successor_floor(v: u64) -> u64 {
    let (mut lo, mut hi) = (0u64, v);
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        if out(mid) <= v {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo
}

/// Number of `x` in `1..=v` whose representation ends in 1.
fn ending_in_one_up_to(v: u64) -> u64 {
    v - successor_floor(v)
}

/// First-column value of row `r`.
pub fn first_column(r: u64) -> u64 {
    assert!(r >= 1, "rows start at 1");
    let (mut lo, mut hi) = (r, 3 * r);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if ending_in_one_up_to(mid) >= r {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    lo
}

/// Wall, seed and pre-seed of the row whose first column holds `g`.
///
/// With `(g)_T = a·b·c·1`: wall `[abc]+1`, seed `[ab]+c`, pre-seed `[a]+b`.
pub fn precolumns(g: u64) -> (u64, u64, u64) {
    let mask = small::to_mask(g).expect("value within the machine-word range");
    debug_assert_eq!(mask & 1, 1, "{g} is not a first-column value");
    let wall = small::eval_mask(mask >> 1) + 1;
    let seed = small::eval_mask(mask >> 2) + (mask >> 1 & 1);
    let pre = small::eval_mask(mask >> 3) + (mask >> 2 & 1);
    (wall, seed, pre)
}

/// Entry at row `r ≥ 1`, column `c ≥ −2`.
pub fn entry(r: u64, c: i64) -> BigUint {
    assert!(c >= MIN_COLUMN, "columns start at -2");
    let g = first_column(r);
    match c {
        0 => precolumns(g).0.into(),
        -1 => precolumns(g).1.into(),
        -2 => precolumns(g).2.into(),
        _ => successor_k(&BigUint::from(g), (c - 1) as usize),
    }
}

/// Consecutive first-column values starting at row 1.
pub fn first_column_iter() -> impl Iterator<Item = u64> {
    (1u64..).filter(|&v| small::to_mask(v).expect("in range") & 1 == 1)
}

/// First `count` entries of column `c`, top to bottom.
pub fn column_stream(c: i64, count: usize) -> Vec<BigUint> {
    assert!(c >= MIN_COLUMN, "columns start at -2");
    first_column_iter()
        .take(count)
        .map(|g| match c {
            0 => precolumns(g).0.into(),
            -1 => precolumns(g).1.into(),
            -2 => precolumns(g).2.into(),
            _ => successor_k(&BigUint::from(g), (c - 1) as usize),
        })
        .collect()
}

pub fn column2_stream(count: usize) -> Vec<BigUint> {
    column_stream(2, count)
}

/// Values occurring exactly once in the seed column, ascending.
pub fn seed_not_doubled(count: usize) -> Vec<u64> {
    let mut result = Vec::with_capacity(count);
    if count == 0 {
        return result;
    }
    let mut current: Option<(u64, u32)> = None;
    for g in first_column_iter() {
        let seed = precolumns(g).1;
        match current {
            Some((v, n)) if v == seed => current = Some((v, n + 1)),
            _ => {
                if let Some((v, 1)) = current {
                    result.push(v);
                    if result.len() == count {
                        return result;
                    }
                }
                current = Some((seed, 1));
            }
        }
    }
    unreachable!("first column is infinite")
}

/// Differences between consecutive first-column values.
pub fn first_column_diffs(count: usize) -> Vec<u64> {
    let column: Vec<u64> = first_column_iter().take(count + 1).collect();
    column.windows(2).map(|w| w[1] - w[0]).collect()
}

/// Rows `r` (ascending) whose first-column successor is 3 larger.
pub fn rows_followed_by_three(count: usize) -> Vec<u64> {
    let mut rows = Vec::with_capacity(count);
    if count == 0 {
        return rows;
    }
    let mut previous = None;
    for (r, g) in (1u64..).zip(first_column_iter()) {
        if let Some((pr, pg)) = previous {
            if g - pg == 3 {
                rows.push(pr);
                if rows.len() == count {
                    break;
                }
            }
        }
        previous = Some((r, g));
    }
    rows
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fact5Failure {
    pub row: u64,
    pub fact: &'static str,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fact5Report {
    pub rows_checked: u64,
    pub first_failure: Option<Fact5Failure>,
}

impl Fact5Report {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Garden terms are followed by their successor, the wall `w` by
/// `out(w) − 1`, and the seed/pre-seed relations split on how the first
/// garden term ends (11, 001, 101). Rows are rebuilt from the precolumns by
/// the Tribonacci rule, so the precolumn formulas are checked too.
pub fn verify_fact5(rows: std::ops::RangeInclusive<u64>) -> Fact5Report {
    const GARDEN_TERMS: usize = 6;
    let fail = |row, fact, detail: String| Fact5Report {
        rows_checked: row,
        first_failure: Some(Fact5Failure { row, fact, detail }),
    };
    let start = *rows.start();
    let mut checked = 0;
    for (r, g) in (1u64..).zip(first_column_iter()) {
        if r < start {
            continue;
        }
        if r > *rows.end() {
            break;
        }
        let (w, s, p) = precolumns(g);
        let mut row = vec![p, s, w];
        for _ in 0..GARDEN_TERMS {
            let k = row.len();
            row.push(row[k - 1] + row[k - 2] + row[k - 3]);
        }
        if row[3] != g {
            return fail(r, "precolumns", format!("pre-seed {p}, seed {s}, wall {w} sum to {} not {g}", row[3]));
        }
        for k in 3..row.len() - 1 {
            if row[k + 1] != out(row[k]) {
                return fail(r, "5Ta", format!("{} followed by {} not {}", row[k], row[k + 1], out(row[k])));
            }
        }
        if g + 1 != out(w) {
            return fail(r, "5Tc", format!("wall {w} followed by {g} not {}", out(w) - 1));
        }
        let mask = small::to_mask(g).expect("in range");
        let (wall_ok, seed_ok) = if mask & 0b11 == 0b11 {
            (w == out(s), s == out(p) + 1)
        } else if mask & 0b111 == 0b001 {
            (w == out(s) + 1, s == out(p))
        } else {
            (w == out(s) + 1, s + 1 == out(p))
        };
        if !(wall_ok && seed_ok) {
            return fail(r, "5Tb", format!("first term {g}, pre-seed {p}, seed {s}, wall {w}"));
        }
        checked += 1;
    }
    Fact5Report {
        rows_checked: checked,
        first_failure: None,
    }
}

/// Occurrence counts of `0..=bound` in the garden (columns ≥ 1) and in
/// each precolumn.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Census {
    pub bound: u64,
    pub rows_scanned: u64,
    pub garden: Vec<u32>,
    pub wall: Vec<u32>,
    pub seed: Vec<u32>,
    pub pre_seed: Vec<u32>,
}

impl Census {
    /// `(garden, wall, seed, pre-seed)` counts of `v`.
    pub fn counts(&self, v: u64) -> (u32, u32, u32, u32) {
        let i = v as usize;
        (self.garden[i], self.wall[i], self.seed[i], self.pre_seed[i])
    }

    /// First positive `v` whose counts disagree with: once in the garden;
    /// letter-a positions (1, 2, 3), letter-b positions (1, 1, 3) and
    /// letter-c positions (0, 1, 2) in wall, seed, pre-seed.
    pub fn fact6_violation(&self) -> Option<(u64, (u32, u32, u32, u32))> {
        (1..=self.bound).find_map(|v| {
            let expected = match letter_at(v) {
                Letter::A => (1, 1, 2, 3),
                Letter::B => (1, 1, 1, 3),
                Letter::C => (1, 0, 1, 2),
            };
            let got = self.counts(v);
            (got != expected).then_some((v, got))
        })
    }
}

/// Scans rows until the pre-seed exceeds `bound`. Every precolumn value
/// is at most the first-column value and the pre-seed column never
/// decreases, so no later row contributes a value `≤ bound`.
pub fn census(bound: u64) -> Census {
    let size = bound as usize + 1;
    let mut c = Census {
        bound,
        rows_scanned: 0,
        garden: vec![0; size],
        wall: vec![0; size],
        seed: vec![0; size],
        pre_seed: vec![0; size],
    };
    for g in first_column_iter() {
        let (w, s, p) = precolumns(g);
        if p > bound {
            break;
        }
        c.rows_scanned += 1;
        c.pre_seed[p as usize] += 1;
        if s <= bound {
            c.seed[s as usize] += 1;
        }
        if w <= bound {
            c.wall[w as usize] += 1;
        }
        let mut v = g;
        while v <= bound {
            c.garden[v as usize] += 1;
            v = out(v);
        }
    }
    c
}

/// `r·α^c/(α − 1)` as a float.
pub fn estimate_entry(r: u64, c: u32) -> f64 {
    entry_estimate(r, c).mid_f64()
}

/// Relative error `|entry − estimate| / entry`.
pub fn estimate_relative_error(r: u64, c: u32) -> f64 {
    let actual = entry(r, i64::from(c));
    let actual = num_traits::ToPrimitive::to_f64(&actual).expect("finite");
    (actual - estimate_entry(r, c)).abs() / actual
}

type Key = (u64, i64);

/// Lazy accessor with a bounded first-in-first-out memo.
#[derive(Debug)]
pub struct TrithoffView {
    capacity: usize,
    memo: Mutex<(HashMap<Key, BigUint>, VecDeque<Key>)>,
}

impl Default for TrithoffView {
    fn default() -> Self {
        Self::with_capacity(4096)
    }
}

impl TrithoffView {
    pub fn with_capacity(capacity: usize) -> Self {
        Self {
            capacity: capacity.max(1),
            memo: Mutex::new((HashMap::new(), VecDeque::new())),
        }
    }

    pub fn entry(&self, r: u64, c: i64) -> BigUint {
        if let Some(v) = self.memo.lock().expect("memo poisoned").0.get(&(r, c)) {
            return v.clone();
        }
        let value = entry(r, c);
        let mut guard = self.memo.lock().expect("memo poisoned");
        let (map, order) = &mut *guard;
        if map.insert((r, c), value.clone()).is_none() {
            order.push_back((r, c));
            while order.len() > self.capacity {
                if let Some(old) = order.pop_front() {
                    map.remove(&old);
                }
            }
        }
        value
    }

    /// Rows `1..=rows`, columns `cols`.
    pub fn window(&self, rows: u64, cols: std::ops::RangeInclusive<i64>) -> Vec<Vec<BigUint>> {
        (1..=rows)
            .map(|r| cols.clone().map(|c| self.entry(r, c)).collect())
            .collect()
    }

    pub fn cached(&self) -> usize {
        self.memo.lock().expect("memo poisoned").0.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nums(v: Vec<BigUint>) -> Vec<u64> {
        v.into_iter().map(|x| u64::try_from(x).unwrap()).collect()
    }

    #[test]
    fn first_column_values() {
        assert_eq!(first_column(1), 1);
        assert_eq!(first_column(4), 8);
        assert_eq!(first_column(19), 40);
        for (r, g) in (1u64..).zip(first_column_iter()).take(3000) {
            assert_eq!(first_column(r), g);
        }
    }

    #[test]
    fn entries() {
        assert_eq!(entry(3, 3), 17u32.into());
        assert_eq!(entry(4, 0), 5u32.into());
        assert_eq!(entry(4, -1), 2u32.into());
        assert_eq!(entry(4, -2), 1u32.into());
        assert_eq!(entry(1, -2), 0u32.into());
    }

    #[test]
    fn columns() {
        assert_eq!(nums(column_stream(0, 5)), [1, 2, 3, 5, 6]);
        assert_eq!(nums(column_stream(-1, 6)), [0, 1, 1, 2, 3, 3]);
        assert_eq!(nums(column_stream(-2, 6)), [0, 0, 1, 1, 1, 2]);
        assert_eq!(nums(column2_stream(5)), [2, 6, 9, 15, 19]);
        assert_eq!(seed_not_doubled(7), [0, 2, 4, 6, 9, 11, 13]);
        assert_eq!(first_column_diffs(5), [2, 2, 3, 2, 2]);
        assert_eq!(rows_followed_by_three(3), [3, 9, 14]);
    }

    #[test]
    fn fact5_small() {
        let report = verify_fact5(1..=500);
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.rows_checked, 500);
    }

    #[test]
    fn census_small() {
        let c = census(300);
        assert_eq!(c.fact6_violation(), None);
        assert_eq!(c.counts(0), (0, 0, 1, 2));
    }

    #[test]
    fn view_evicts() {
        let view = TrithoffView::with_capacity(3);
        for c in 1..=5 {
            view.entry(2, c);
        }
        assert_eq!(view.cached(), 3);
        assert_eq!(view.entry(2, 4), 20u32.into());
    }
}
