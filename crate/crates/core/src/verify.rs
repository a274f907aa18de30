//! Verification suites and their reports.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::array::{
    census, column_stream, entry, first_column_diffs, first_column_iter, rows_followed_by_three,
    seed_not_doubled, verify_fact5,
};
use crate::digitpatterns::{
    decompose_four_fibternary, decompose_three_tribternary, decompose_two_tribbinary,
    fibbinary_multiple, fibternary_multiple, generators_disagree, is_member_big,
    member_by_representation, power_count_check, word_residue_check, PatternFamily,
};
use crate::extratrib::{
    diff_row_orbit, invertible_rows, multiples_table, noninvertible_rows, ExtraTrib, ParityType,
};
use crate::numeration::{small, to_canonical};
use crate::tribword::{
    a_position_bounds, letter_at, letter_positions, records, sign_sequences, CompanionRoots,
    Interval, Letter, RecordEntry, RecordSign,
};

/// Listed prefixes and tables the suites compare against.
pub mod data {
    /// `(n, out(n) − αn truncated to 7 places, representation indices)`.
    pub const POSITIVE_RECORDS: [(u64, &str, &[usize]); 9] = [
        (1, "0.1607132", &[3]),
        (2, "0.3214264", &[4]),
        (3, "0.4821397", &[4, 3]),
        (10, "0.6071324", &[6, 4, 3]),
        (23, "0.6964046", &[7, 6, 4, 3]),
        (67, "0.7677874", &[9, 7, 6, 4, 3]),
        (148, "0.7855602", &[10, 9, 7, 6, 4, 3]),
        (341, "0.8032164", &[12, 9, 7, 6, 4, 3]),
        (422, "0.8209892", &[12, 10, 9, 7, 6, 4, 3]),
    ];
    pub const NEGATIVE_RECORDS: [(u64, &str, &[usize]); 9] = [
        (4, "-0.3571470", &[5]),
        (28, "-0.5000291", &[8, 5]),
        (177, "-0.5537556", &[11, 8, 5]),
        (681, "-0.5542803", &[13, 11, 8, 5]),
        (1104, "-0.5725777", &[14, 11, 8, 5]),
        (1608, "-0.5731023", &[14, 13, 11, 8, 5]),
        (4240, "-0.5758421", &[16, 14, 11, 8, 5]),
        (4744, "-0.5763667", &[16, 14, 13, 11, 8, 5]),
        (6872, "-0.5785818", &[17, 14, 11, 8, 5]),
    ];
    /// Rows, first columns and first column divided by the multiplier for
    /// `k·T`, `k = 1..=12`.
    pub const MULTIPLES_ROWS: [u64; 12] = [1, 7, 10, 81, 101, 121, 141, 161, 1126, 1251, 1376, 1501];
    pub const MULTIPLES_FIRST_COLUMNS: [u64; 12] =
        [1, 14, 21, 176, 220, 264, 308, 352, 2466, 2740, 3014, 3288];
    pub const MULTIPLES_QUOTIENTS: [u64; 12] = [1, 7, 7, 44, 44, 44, 44, 44, 274, 274, 274, 274];
    pub const SIGNS_NONNEGATIVE: [usize; 24] =
        [0, 1, 3, 4, 6, 7, 9, 10, 12, 15, 18, 21, 24, 26, 27, 29, 30, 32, 33, 35, 36, 38, 41, 44];
    pub const SIGNS_NEGATIVE: [usize; 22] =
        [2, 5, 8, 11, 13, 14, 16, 17, 19, 20, 22, 23, 25, 28, 31, 34, 37, 39, 40, 42, 43, 45];
    pub const INVERTIBLE_ROWS: [u64; 18] =
        [2, 3, 4, 7, 11, 12, 16, 17, 19, 20, 21, 25, 26, 28, 29, 30, 33, 34];
    pub const NONINVERTIBLE_ROWS: [u64; 19] =
        [1, 5, 6, 8, 9, 10, 13, 14, 15, 18, 22, 23, 24, 27, 31, 32, 36, 37, 39];
    pub const DIFF_ROW_ORBIT: [u64; 13] = [1, 2, 3, 7, 19, 29, 81, 125, 353, 161, 1545, 705, 2001];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub witness: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            checks: Vec::new(),
        }
    }

    /// Times `f`; an `Err` becomes a failing check carrying the message.
    pub fn run(&mut self, name: &str, f: impl FnOnce() -> Result<(bool, Value), String>) {
        let start = Instant::now();
        let (status, witness) = match f() {
            Ok((true, w)) => (Status::Pass, w),
            Ok((false, w)) => (Status::Fail, w),
            Err(e) => (Status::Fail, json!({ "error": e })),
        };
        self.checks.push(Check {
            name: name.to_string(),
            status,
            witness,
            elapsed_ms: Some(start.elapsed().as_millis() as u64),
        });
    }

    pub fn push(&mut self, name: &str, status: Status, witness: Value) {
        self.checks.push(Check {
            name: name.to_string(),
            status,
            witness,
            elapsed_ms: None,
        });
    }

    pub fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for c in &self.checks {
            match c.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Skip => s.skip += 1,
            }
        }
        s
    }

    pub fn passed(&self) -> bool {
        self.summary().fail == 0
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Drops timings so identical runs give identical bytes.
    pub fn without_meta(mut self) -> Self {
        for c in &mut self.checks {
            c.elapsed_ms = None;
        }
        self
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("suite {}\n", self.suite);
        for c in &self.checks {
            out.push_str(&format!("{} {} {}", c.status, c.name, c.witness));
            if let Some(ms) = c.elapsed_ms {
                out.push_str(&format!(" ({ms} ms)"));
            }
            out.push('\n');
        }
        let s = self.summary();
        out.push_str(&format!("{} pass, {} fail, {} skip\n", s.pass, s.fail, s.skip));
        out
    }

    pub fn to_json(&self) -> String {
        let value = json!({
            "suite": self.suite,
            "checks": self.checks,
            "summary": self.summary(),
        });
        serde_json::to_string_pretty(&value).expect("report serializes")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Facts5,
    Fact6,
    Bounds,
    Signs,
    Records,
    Rows,
    Multiples,
    Patterns,
    All,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::Facts5,
        Suite::Fact6,
        Suite::Bounds,
        Suite::Signs,
        Suite::Records,
        Suite::Rows,
        Suite::Multiples,
        Suite::Patterns,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Facts5 => "facts5",
            Suite::Fact6 => "fact6",
            Suite::Bounds => "bounds",
            Suite::Signs => "signs",
            Suite::Records => "records",
            Suite::Rows => "rows",
            Suite::Multiples => "multiples",
            Suite::Patterns => "patterns",
            Suite::All => "all",
        }
    }

    /// Bound used when none is given.
    pub fn default_bound(self) -> u64 {
        match self {
            Suite::Facts5 => 2000,
            Suite::Fact6 | Suite::Signs | Suite::Patterns => 10_000,
            Suite::Bounds => 100_000,
            Suite::Records => 7000,
            Suite::Rows => 200,
            Suite::Multiples => 12,
            Suite::All => 0,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                format!("unknown suite {s:?}; expected one of facts5, fact6, bounds, signs, records, rows, multiples, patterns, all")
            })
    }
}

/// Runs `suite` up to `bound` (or its default). `all` runs every suite
/// concurrently at its default bound.
pub fn run_suite(suite: Suite, bound: Option<u64>) -> Report {
    let bound = bound.unwrap_or(suite.default_bound());
    match suite {
        Suite::Facts5 => facts5(bound),
        Suite::Fact6 => fact6(bound),
        Suite::Bounds => bounds(bound),
        Suite::Signs => signs(bound),
        Suite::Records => records_suite(bound),
        Suite::Rows => rows(bound),
        Suite::Multiples => multiples(bound),
        Suite::Patterns => patterns(bound),
        Suite::All => {
            let reports: Vec<Report> = std::thread::scope(|scope| {
                let handles: Vec<_> = Suite::EACH
                    .into_iter()
                    .map(|s| scope.spawn(move || run_suite(s, None)))
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("suite thread panicked"))
                    .collect()
            });
            let mut all = Report::new("all");
            for r in reports {
                for mut c in r.checks {
                    c.name = format!("{}/{}", r.suite, c.name);
                    all.checks.push(c);
                }
            }
            all
        }
    }
}

fn out(n: u64) -> u64 {
    small::successor(n).expect("in range")
}

fn facts5(rows: u64) -> Report {
    let mut r = Report::new("facts5");
    r.run("fact5", || {
        let report = verify_fact5(1..=rows);
        Ok((report.passed(), json!(report)))
    });
    let small_rows = rows.min(500);
    r.run("tribonacci-rule", || {
        for row in 1..=small_rows {
            let e: Vec<BigUint> = (-2..=8).map(|c| entry(row, c)).collect();
            if let Some(k) = (0..e.len() - 3).find(|&k| e[k + 3] != &e[k] + &e[k + 1] + &e[k + 2]) {
                return Ok((false, json!({ "row": row, "column": k as i64 - 2 })));
            }
        }
        Ok((true, json!({ "rows": small_rows, "columns": [-2, 8] })))
    });
    r.run("column-endings", || {
        for row in 1..=small_rows {
            for c in 1..=8i64 {
                let d = to_canonical(&entry(row, c));
                if d.trailing_zeros() != c as usize - 1 {
                    return Ok((false, json!({ "row": row, "column": c, "digits": d.to_string() })));
                }
            }
        }
        Ok((true, json!({ "rows": small_rows, "columns": [1, 8] })))
    });
    r.run("first-column-diffs", || {
        let diffs = first_column_diffs(10_000);
        if let Some(i) = diffs.iter().position(|&d| d != 2 && d != 3) {
            return Ok((false, json!({ "row": i + 1, "difference": diffs[i] })));
        }
        let threes = diffs.iter().filter(|&&d| d == 3).count();
        let rows = rows_followed_by_three(threes);
        let a = letter_positions(Letter::A, threes);
        let b = letter_positions(Letter::B, threes);
        let bad = (0..threes).find(|&i| rows[i] != a[i] + b[i]);
        Ok((
            bad.is_none(),
            json!({ "differences": diffs.len(), "threes": threes, "first_mismatch": bad.map(|i| i + 1) }),
        ))
    });
    r
}

fn sorted_until(values: impl IntoIterator<Item = u64>, bound: u64) -> Vec<u64> {
    let mut v: Vec<u64> = values.into_iter().filter(|&x| x <= bound).collect();
    v.sort_unstable();
    v
}

fn positions_up_to(letters: &[Letter], bound: u64) -> Vec<u64> {
    (1..=bound).filter(|&n| letters.contains(&letter_at(n))).collect()
}

fn counts_of(values: &[u64], bound: u64) -> Vec<u32> {
    let mut c = vec![0u32; bound as usize + 1];
    for &v in values {
        if v <= bound {
            c[v as usize] += 1;
        }
    }
    c
}

fn small_column(c: i64, rows: usize) -> Vec<u64> {
    column_stream(c, rows)
        .into_iter()
        .map(|v| u64::try_from(v).expect("small column value"))
        .collect()
}

fn fact6(bound: u64) -> Report {
    let mut r = Report::new("fact6");
    let c = census(bound);
    let rows = c.rows_scanned as usize;
    r.run("census", || {
        let v = c.fact6_violation();
        Ok((v.is_none(), json!({ "bound": bound, "rows_scanned": rows, "first_violation": v })))
    });
    r.run("zero-counts", || {
        let got = c.counts(0);
        Ok((got == (0, 0, 1, 2), json!({ "garden": got.0, "wall": got.1, "seed": got.2, "pre_seed": got.3 })))
    });
    r.run("wall-letters", || {
        let wall = sorted_until(small_column(0, rows), bound);
        let expected = positions_up_to(&[Letter::A, Letter::B], bound);
        let bad = wall.iter().zip(&expected).position(|(x, y)| x != y);
        let ok = wall.len() == expected.len() && bad.is_none();
        Ok((ok, json!({ "values": wall.len(), "first_mismatch": bad })))
    });
    r.run("seed-letters", || {
        let seed = small_column(-1, rows);
        if let Some(i) = seed.windows(2).position(|w| w[1] < w[0]) {
            return Ok((false, json!({ "decreases_at_row": i + 2 })));
        }
        let counts = counts_of(&seed, bound);
        let bad = (1..=bound).find(|&v| (counts[v as usize] == 2) != (letter_at(v) == Letter::A));
        Ok((bad.is_none(), json!({ "bound": bound, "first_mismatch": bad })))
    });
    r.run("pre-seed-letters", || {
        let pre = small_column(-2, rows);
        let counts = counts_of(&pre, bound);
        let bad = (1..=bound).find(|&v| {
            let expected = if letter_at(v) == Letter::C { 2 } else { 3 };
            counts[v as usize] != expected
        });
        Ok((bad.is_none(), json!({ "bound": bound, "first_mismatch": bad })))
    });
    r.run("column-residues", || {
        let mut buckets: [Vec<u64>; 3] = Default::default();
        for g in first_column_iter().take_while(|&g| g <= bound) {
            let (mut v, mut col) = (g, 1usize);
            while v <= bound {
                buckets[col % 3].push(v);
                v = out(v);
                col += 1;
            }
        }
        let letters = [Letter::C, Letter::A, Letter::B];
        for (residue, bucket) in buckets.iter_mut().enumerate() {
            bucket.sort_unstable();
            if *bucket != positions_up_to(&[letters[residue]], bound) {
                return Ok((false, json!({ "residue": residue })));
            }
        }
        Ok((true, json!({ "bound": bound })))
    });
    r.run("seed-not-doubled", || {
        let seed = small_column(-1, rows);
        let counts = counts_of(&seed, bound);
        let once: Vec<u64> = (0..=bound).filter(|&v| counts[v as usize] == 1).collect();
        let listed = seed_not_doubled(once.len());
        let not_a = once.iter().all(|&v| v == 0 || letter_at(v) != Letter::A);
        Ok((once == listed && not_a, json!({ "values": once.len() })))
    });
    r
}

fn interval_json(iv: &Interval) -> Value {
    json!(iv.to_decimal_truncated(7))
}

fn bounds(bound: u64) -> Report {
    let mut r = Report::new("bounds");
    r.run("max-deviation", || {
        let pos = records(bound, RecordSign::Positive).map_err(|e| e.to_string())?;
        let neg = records(bound, RecordSign::Negative).map_err(|e| e.to_string())?;
        let (top, bottom) = (pos.last().ok_or("no positive record")?, neg.last().ok_or("no negative record")?);
        let (worst, magnitude) = match top.delta.abs().certain_cmp(&bottom.delta.abs()) {
            Some(std::cmp::Ordering::Less) => (bottom, bottom.delta.abs()),
            _ => (top, top.delta.abs()),
        };
        let below = magnitude.lt_ratio(85, 100);
        let above = bound < 422 || magnitude.gt_ratio(82, 100);
        Ok((
            below && above,
            json!({ "bound": bound, "n": worst.n, "deviation": interval_json(&worst.delta) }),
        ))
    });
    r.run("series-bound", || {
        let b = CompanionRoots::at_bits(128).tail_bound(3);
        let text = b.to_decimal(5);
        Ok((text == "1.91746" && b.lt_ratio(2, 1), json!(text)))
    });
    r.run("letter-a-band", || {
        let report = a_position_bounds(bound.min(10_000));
        Ok((
            report.wide_passed(),
            json!({
                "checked": report.checked,
                "band": "(alpha n - 2, alpha n + 1)",
                "narrow_band_first_violation": report.first_violation,
                "observed": [report.observed.0, report.observed.1],
            }),
        ))
    });
    r
}

fn signs(bound: u64) -> Report {
    let mut r = Report::new("signs");
    let computed = sign_sequences(bound as usize).map_err(|e| e.to_string());
    r.run("partition", || {
        let (p, q) = computed.clone()?;
        let mut all: Vec<usize> = p.iter().chain(&q).copied().collect();
        all.sort_unstable();
        let ok = all.iter().copied().eq(0..=bound as usize);
        Ok((ok, json!({ "bound": bound, "nonnegative": p.len(), "negative": q.len() })))
    });
    r.run("no-three-consecutive", || {
        let (p, q) = computed.clone()?;
        let run = |s: &[usize]| s.windows(3).find(|w| w[2] == w[0] + 2).map(|w| w[0]);
        let (rp, rq) = (run(&p), run(&q));
        Ok((rp.is_none() && rq.is_none(), json!({ "nonnegative_run": rp, "negative_run": rq })))
    });
    r.run("listed-prefixes", || {
        let (p, q) = computed.clone()?;
        let ok = p.starts_with(&data::SIGNS_NONNEGATIVE) && q.starts_with(&data::SIGNS_NEGATIVE);
        Ok((ok, json!({ "nonnegative": p.len().min(24), "negative": q.len().min(22) })))
    });
    r.run("left-signs", || {
        for row in 1..=50 {
            let s = ExtraTrib::row(row).left_signs(60).map_err(|e| e.to_string())?;
            if !s.passed() {
                return Ok((false, json!({ "row": row, "signs": s })));
            }
        }
        Ok((true, json!({ "rows": 50, "window": 60 })))
    });
    r
}

fn table_matches(found: &[RecordEntry], table: &[(u64, &str, &[usize])], bound: u64) -> Result<(bool, Value), String> {
    let expected: Vec<_> = table.iter().filter(|t| t.0 <= bound).collect();
    let ns: Vec<u64> = found.iter().map(|e| e.n).collect();
    if ns != expected.iter().map(|t| t.0).collect::<Vec<_>>() {
        return Ok((false, json!({ "records": ns })));
    }
    for (e, t) in found.iter().zip(&expected) {
        let listed: f64 = t.1.parse().map_err(|_| "bad table value")?;
        let close = (e.delta.mid_f64() - listed).abs() < 1e-6;
        if !close || e.repr_indices != t.2 {
            return Ok((false, json!({ "n": e.n, "deviation": interval_json(&e.delta), "indices": e.repr_indices })));
        }
    }
    Ok((true, json!({ "records": ns })))
}

fn records_suite(bound: u64) -> Report {
    let mut r = Report::new("records");
    let pos = records(500, RecordSign::Positive).map_err(|e| e.to_string());
    let neg = records(bound, RecordSign::Negative).map_err(|e| e.to_string());
    r.run("positive-records", || table_matches(&pos.clone()?, &data::POSITIVE_RECORDS, 500));
    r.run("negative-records", || table_matches(&neg.clone()?, &data::NEGATIVE_RECORDS, bound));
    r.run("record-support", || {
        let (pos, neg) = (pos.clone()?, neg.clone()?);
        let top = pos.iter().chain(&neg).flat_map(|e| e.repr_indices.iter()).max().copied().unwrap_or(0);
        let (p, q) = sign_sequences(top).map_err(|e| e.to_string())?;
        let bad_pos = pos.iter().find(|e| !e.repr_indices.iter().all(|i| p.contains(i))).map(|e| e.n);
        let bad_neg = neg.iter().find(|e| !e.repr_indices.iter().all(|i| q.contains(i))).map(|e| e.n);
        Ok((bad_pos.is_none() && bad_neg.is_none(), json!({ "positive": bad_pos, "negative": bad_neg })))
    });
    r.run("constructed-records", || {
        let (pos, neg) = (pos.clone()?, neg.clone()?);
        let built = |k, s| crate::tribword::constructed_record(k, s).map_err(|e| e.to_string());
        let plus: Vec<u64> = (2..=8).map(|k| built(k, RecordSign::Positive)).collect::<Result<_, _>>()?;
        let minus: Vec<u64> = (2..=5).map(|k| built(k, RecordSign::Negative)).collect::<Result<_, _>>()?;
        let has = |list: &[RecordEntry], n: u64| list.iter().any(|e| e.n == n);
        let ok = plus.iter().all(|&n| has(&pos, n))
            && minus.iter().filter(|&&n| n <= bound).all(|&n| has(&neg, n));
        Ok((ok, json!({ "positive": plus, "negative": minus })))
    });
    r.run("eventual-containment", || {
        let found = records(10_000, RecordSign::Positive).map_err(|e| e.to_string())?;
        let (p, _) = sign_sequences(8).map_err(|e| e.to_string())?;
        let bad = found.iter().skip(5).find(|e| !e.repr_indices.contains(&p[2])).map(|e| e.n);
        Ok((bad.is_none(), json!({ "heuristic": true, "bound": 10_000, "index": p[2], "first_missing": bad })))
    });
    r
}

fn random_anchor(rng: &mut ChaCha8Rng) -> ExtraTrib {
    loop {
        let s = ExtraTrib::from_i64(
            rng.gen_range(-5..=5),
            rng.gen_range(-60..=60),
            rng.gen_range(-60..=60),
            rng.gen_range(-60..=60),
        );
        if !s.is_zero() {
            return s;
        }
    }
}

fn same_terms(a: &ExtraTrib, b: &ExtraTrib) -> bool {
    a.terms(-10, 10) == b.terms(-10, 10)
}

fn rows(bound: u64) -> Report {
    let mut r = Report::new("rows");
    r.run("invertible-rows", || {
        let inv = invertible_rows(data::INVERTIBLE_ROWS.len());
        let non = noninvertible_rows(data::NONINVERTIBLE_ROWS.len());
        Ok((inv == data::INVERTIBLE_ROWS && non == data::NONINVERTIBLE_ROWS, json!({ "invertible": inv, "noninvertible": non })))
    });
    r.run("diff-row-orbit", || {
        let orbit = diff_row_orbit(1, data::DIFF_ROW_ORBIT.len()).map_err(|e| e.to_string())?;
        Ok((orbit == data::DIFF_ROW_ORBIT, json!(orbit)))
    });
    r.run("locate-agreement", || {
        let mut cases: Vec<(String, ExtraTrib, Option<u64>)> =
            (1..=bound).map(|row| (format!("row {row}"), ExtraTrib::row(row), Some(row))).collect();
        for base in 1..=3 {
            for k in 1..=12 {
                cases.push((format!("{k} x row {base}"), ExtraTrib::row(base).scale(&k.into()), None));
            }
        }
        for (label, s, row) in &cases {
            let a = s.locate().map_err(|e| format!("{label}: {e}"))?;
            let b = s.locate_by_wall(10_000).map_err(|e| format!("{label}: {e}"))?;
            if a != b || row.is_some_and(|row| a.row != row) {
                return Ok((false, json!({ "case": label, "algebraic": a, "wall": b })));
            }
        }
        Ok((true, json!({ "cases": cases.len() })))
    });
    r.run("reversal", || {
        let top = bound.min(100);
        let missing = (1..=top).find(|&row| ExtraTrib::row(row).reversal_witness(60).is_none());
        let first = ExtraTrib::tribonacci().reversal_witness(60);
        Ok((missing.is_none() && first.is_some(), json!({ "rows": top, "tribonacci_witness": first, "first_missing": missing })))
    });
    r.run("difference-inverse", || {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let s = random_anchor(&mut rng);
            match s.difference_inverse() {
                Ok(inv) if same_terms(&inv.difference(), &s) => {}
                Ok(_) => return Ok((false, json!({ "sequence": s.to_text(6) }))),
                Err(_) if s.parity_type() == ParityType::EEOO => {}
                Err(e) => return Ok((false, json!({ "sequence": s.to_text(6), "error": e.to_string() }))),
            }
        }
        Ok((true, json!({ "sequences": 200, "seed": 7 })))
    });
    r.run("parity-transitions", || {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let s = random_anchor(&mut rng);
            let (from, to) = (s.parity_type(), s.difference().parity_type());
            let expected = match from {
                ParityType::EEOO => ParityType::EOEO,
                ParityType::EOEO => ParityType::OOOO,
                ParityType::OOOO | ParityType::EEEE => ParityType::EEEE,
            };
            if to != expected {
                return Ok((false, json!({ "sequence": s.to_text(6), "from": from.to_string(), "to": to.to_string() })));
            }
        }
        Ok((true, json!({ "sequences": 200, "seed": 11 })))
    });
    r.run("sum-ordering", || {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..100 {
            let (x, y) = (rng.gen_range(1..=50u64), rng.gen_range(1..=50u64));
            let (a, b) = (ExtraTrib::row(x), ExtraTrib::row(y));
            let sum = a.add(&b).locate().map_err(|e| e.to_string())?;
            let larger = a.locate().map_err(|e| e.to_string())?.first_column.max(b.locate().map_err(|e| e.to_string())?.first_column);
            if sum.first_column <= larger {
                return Ok((false, json!({ "rows": [x, y], "sum": sum })));
            }
        }
        Ok((true, json!({ "pairs": 100, "seed": 13 })))
    });
    r.run("out-telescoping", || {
        let bad = (0..=100_000u64).find(|&n| n + out(n) + out(out(n)) != out(out(out(n))));
        Ok((bad.is_none(), json!({ "bound": 100_000, "first_failure": bad })))
    });
    r
}

fn multiples(k_max: u64) -> Report {
    let mut r = Report::new("multiples");
    let table = multiples_table(&ExtraTrib::tribonacci(), k_max).map_err(|e| e.to_string());
    r.run("multiples-table", || {
        let t = table.clone()?;
        let n = t.len().min(12);
        let rows: Vec<u64> = t.iter().map(|e| e.row).collect();
        let cols: Vec<BigUint> = t.iter().map(|e| e.first_column.clone()).collect();
        let quotients: Vec<BigUint> = t.iter().map(|e| &e.first_column / e.k).collect();
        let divisible = t.iter().all(|e| (&e.first_column % e.k).is_zero());
        let ok = divisible
            && rows[..n] == data::MULTIPLES_ROWS[..n]
            && cols[..n].iter().zip(&data::MULTIPLES_FIRST_COLUMNS).all(|(x, &y)| *x == y.into())
            && quotients[..n].iter().zip(&data::MULTIPLES_QUOTIENTS).all(|(x, &y)| *x == y.into());
        let text = |v: &[BigUint]| v.iter().map(ToString::to_string).collect::<Vec<_>>();
        Ok((ok, json!({ "rows": rows, "first_columns": text(&cols), "quotients": text(&quotients) })))
    });
    r.run("row-residues", || {
        let t = table.clone()?;
        let bad = t.iter().find(|e| e.row % e.k != 1 % e.k).map(|e| e.k);
        Ok((bad.is_none(), json!({ "k_max": k_max, "first_failure": bad })))
    });
    r.run("multiples-of-rows", || {
        for base in 2..=3 {
            let s = ExtraTrib::row(base);
            let t = multiples_table(&s, k_max.min(12)).map_err(|e| e.to_string())?;
            for e in &t {
                let direct = s.scale(&BigInt::from(e.k)).locate().map_err(|e| e.to_string())?;
                if direct.row != e.row {
                    return Ok((false, json!({ "row": base, "k": e.k, "injected": e.row, "direct": direct.row })));
                }
            }
        }
        Ok((true, json!({ "rows": [2, 3], "k_max": k_max.min(12) })))
    });
    r
}

fn patterns(bound: u64) -> Report {
    let mut r = Report::new("patterns");
    let count = bound as usize;
    for f in PatternFamily::ALL {
        r.run(&format!("generators-{f}"), || {
            let bad = generators_disagree(f, count);
            let stream = crate::digitpatterns::family_stream(f, count.min(2000));
            let repr = stream.iter().enumerate().position(|(n, &x)| member_by_representation(f, n as u64) != x);
            Ok((bad.is_none() && repr.is_none(), json!({ "members": count, "first_mismatch": bad, "representation_mismatch": repr })))
        });
    }
    r.run("two-tribbinary", || {
        let bad = (0..=bound).find(|&n| {
            let (x, y) = decompose_two_tribbinary(n);
            x + y != n || !PatternFamily::Tribbinary.is_member(x) || !PatternFamily::Tribbinary.is_member(y)
        });
        Ok((bad.is_none(), json!({ "bound": bound, "first_failure": bad })))
    });
    r.run("four-fibternary", || {
        let bad = (0..=bound).find(|&n| {
            let parts = decompose_four_fibternary(n);
            parts.iter().sum::<u64>() != n || !parts.iter().all(|&v| PatternFamily::Fibternary.is_member(v))
        });
        Ok((bad.is_none(), json!({ "bound": bound, "first_failure": bad })))
    });
    r.run("three-tribternary", || {
        let bad = (0..=bound).find(|&n| {
            let parts = decompose_three_tribternary(n);
            parts.iter().sum::<u64>() != n || !parts.iter().all(|&v| PatternFamily::Tribternary.is_member(v))
        });
        Ok((bad.is_none(), json!({ "bound": bound, "first_failure": bad })))
    });
    r.run("constructive-multiples", || {
        let bad = (1..=200u64).find(|&n| {
            let t = fibternary_multiple(n);
            let b = fibbinary_multiple(n);
            let ok = |m: &BigUint, f| !m.is_zero() && (m % n).is_zero() && is_member_big(f, m);
            !ok(&t, PatternFamily::Fibternary) || !ok(&b, PatternFamily::Fibbinary)
        });
        Ok((bad.is_none(), json!({ "bound": 200, "first_failure": bad, "example": fibternary_multiple(7).to_string() })))
    });
    r.run("power-counts", || {
        for f in PatternFamily::ALL {
            if let Some(row) = power_count_check(f, 20).into_iter().find(|row| row.count != row.expected) {
                return Ok((false, json!({ "family": f, "row": row })));
            }
        }
        Ok((true, json!({ "max_exponent": 20 })))
    });
    r.run("word-residues", || {
        for f in PatternFamily::ALL {
            if let Some(n) = word_residue_check(f, count) {
                return Ok((false, json!({ "family": f, "n": n })));
            }
        }
        Ok((true, json!({ "members": count })))
    });
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn report_rendering_without_meta() {
        let mut r = Report::new("demo");
        r.run("ok", || Ok((true, json!(1))));
        r.run("bad", || Err("boom".into()));
        r.push("later", Status::Skip, Value::Null);
        assert!(!r.passed());
        let r = r.without_meta();
        assert_eq!(r.to_text(), "suite demo\nPASS ok 1\nFAIL bad {\"error\":\"boom\"}\nSKIP later null\n1 pass, 1 fail, 1 skip\n");
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["summary"]["fail"], 1);
        assert_eq!(v["checks"][1]["status"], "fail");
    }

    #[test]
    fn small_suites_pass() {
        for (s, b) in [(Suite::Facts5, 60), (Suite::Fact6, 300), (Suite::Multiples, 5), (Suite::Signs, 300)] {
            let report = run_suite(s, Some(b));
            assert!(report.passed(), "{}", report.to_text());
        }
    }
}
