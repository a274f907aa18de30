//! Acceptance criteria 1–9, one PASS/FAIL line each, with pinned time limits.
//!
//! Run with `cargo test -p trithoff --test acceptance`.

use std::collections::HashSet;
use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use trithoff::array::estimate_relative_error;
use trithoff::cli::render_array;
use trithoff::digitpatterns::{members_below, PatternFamily};
use trithoff::numeration::{canonize_padded, small, Canonizer, TribDigits};
use trithoff::oeis::{compare, lookup, BFile};
use trithoff::verify::{run_suite, Report, Suite};

const LIMIT_TABLES: Duration = Duration::from_secs(1);
const LIMIT_PREFIXES: Duration = Duration::from_secs(5);
const LIMIT_RECORDS: Duration = Duration::from_secs(30);
const LIMIT_MAX_DEVIATION: Duration = Duration::from_secs(60);
const LIMIT_MULTIPLES: Duration = Duration::from_secs(60);
const LIMIT_CANONIZATION: Duration = Duration::from_secs(60);
const LIMIT_PER_STRUCTURE_SUITE: Duration = Duration::from_secs(60);
const LIMIT_PATTERNS: Duration = Duration::from_secs(60);

const TABLE_WITH_PRECOLUMNS: &str = concat!(
    "0 0 1 ||  1  2  4  7\n",
    "0 1 2 ||  3  6 11 20\n",
    "1 1 3 ||  5  9 17 31\n",
    "1 2 5 ||  8 15 28 51\n",
    "1 3 6 || 10 19 35 64\n",
    "2 3 7 || 12 22 41 75\n",
);

const TABLE_GARDEN: &str = concat!(
    " 1  2  4  7  13  24\n",
    " 3  6 11 20  37  68\n",
    " 5  9 17 31  57 105\n",
    " 8 15 28 51  94 173\n",
    "10 19 35 64 118 217\n",
    "12 22 41 75 138 254\n",
);

/// Listed prefix lengths per id.
const PREFIXES: [(&str, usize); 24] = [
    ("A003265", 19),
    ("A353083", 18),
    ("A353084", 17),
    ("A353086", 17),
    ("A353090", 19),
    ("A351631", 17),
    ("A352719", 24),
    ("A352748", 22),
    ("A353178", 18),
    ("A353193", 19),
    ("A354215", 13),
    ("A351685", 14),
    ("A351689", 13),
    ("A003144", 17),
    ("A003145", 17),
    ("A003146", 17),
    ("A003714", 19),
    ("A003726", 15),
    ("A060140", 15),
    ("A356823", 19),
    ("A000073", 16),
    ("A001590", 11),
    ("A000213", 10),
    ("A305373", 17),
];

type Criterion = (&'static str, Option<Duration>, fn() -> Outcome);

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn failures(report: &Report, names: &[&str]) -> Vec<String> {
    names
        .iter()
        .filter(|n| !report.check(n).is_some_and(|c| c.status == trithoff::verify::Status::Pass))
        .map(|n| {
            let witness = report.check(n).map(|c| c.witness.to_string()).unwrap_or_default();
            format!("{n} {witness}")
        })
        .collect()
}

fn tables() -> Outcome {
    let with_pre = render_array(6, -2, 4);
    let garden = render_array(6, 1, 6);
    let ok = with_pre == TABLE_WITH_PRECOLUMNS && garden == TABLE_GARDEN;
    outcome(ok, if ok { "6x7 window with precolumns and 6x6 garden block".into() } else { format!("{with_pre}\n{garden}") })
}

fn prefixes() -> Outcome {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data");
    let mut bad = Vec::new();
    let mut terms = 0;
    for (id, listed) in PREFIXES {
        let result = BFile::read(id, &dir.join(format!("b{}.txt", &id[1..])))
            .and_then(|b| compare(lookup(id).expect("supported"), &b, usize::MAX));
        match result {
            Ok(c) if c.passed() && c.checked >= listed => terms += c.checked,
            Ok(c) => bad.push(format!("{id}: {c:?}")),
            Err(e) => bad.push(format!("{id}: {e}")),
        }
    }
    outcome(bad.is_empty(), if bad.is_empty() { format!("{} sequences, {terms} terms", PREFIXES.len()) } else { bad.join("; ") })
}

fn records() -> Outcome {
    let report = run_suite(Suite::Records, Some(7000));
    let bad = failures(&report, &["positive-records", "negative-records"]);
    outcome(bad.is_empty(), if bad.is_empty() { "positive to 500, negative to 7000".into() } else { bad.join("; ") })
}

fn max_deviation() -> Outcome {
    let report = run_suite(Suite::Bounds, Some(100_000));
    let bad = failures(&report, &["max-deviation"]);
    let witness = report.check("max-deviation").map(|c| c.witness.to_string()).unwrap_or_default();
    outcome(bad.is_empty(), format!("0.82 < max |out(n) - alpha n| < 0.85 over n <= 10^5: {witness}"))
}

fn multiples() -> Outcome {
    let report = run_suite(Suite::Multiples, Some(12));
    let bad = failures(&report, &["multiples-table", "row-residues"]);
    outcome(bad.is_empty(), if bad.is_empty() { "k = 1..12".into() } else { bad.join("; ") })
}

fn random_word(rng: &mut ChaCha8Rng) -> TribDigits {
    let len = rng.gen_range(1..=20);
    let mut digits: Vec<u64> = (0..len).map(|_| rng.gen_range(0..=9)).collect();
    // at least one digit above 1
    let k = rng.gen_range(0..len);
    digits[k] = rng.gen_range(2..=9);
    TribDigits::new(digits)
}

fn canonization() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..10_000 {
        let word = random_word(&mut rng);
        let (canonical, zeros) = match canonize_padded(&word) {
            Ok(r) => r,
            Err(e) => return outcome(false, format!("word {i} {word}: {e}")),
        };
        if zeros as u64 > 3 * word.weight() {
            return outcome(false, format!("word {word}: {zeros} zeros, weight {}", word.weight()));
        }
        let padded = word.with_trailing_zeros(zeros);
        let value = padded.evaluate();
        let mut run = Canonizer::new(&padded);
        loop {
            match run.step() {
                Ok(Some(_)) if run.word().evaluate() == value => {}
                Ok(Some(step)) => return outcome(false, format!("word {word}: value changed at {step:?}")),
                Ok(None) => break,
                Err(e) => return outcome(false, format!("word {word}: {e}")),
            }
        }
        if run.word() != canonical {
            return outcome(false, format!("word {word}: {} vs {canonical}", run.word()));
        }
    }
    // every n <= 10^6 has exactly one canonical word
    const N: u64 = 1_000_000;
    let top = small::weights().iter().position(|&w| w > N).expect("weights exceed N");
    let words = members_below(PatternFamily::Tribbinary, 1 << top);
    let mut seen = HashSet::new();
    for &mask in &words {
        let v = small::eval_mask(mask);
        if v <= N && !seen.insert(v) {
            return outcome(false, format!("value {v} has two canonical words"));
        }
    }
    let ok = seen.len() as u64 == N + 1 && (0..=N).all(|n| small::to_mask(n).map(small::eval_mask) == Some(n));
    outcome(ok, format!("10^4 random words; {} canonical words cover 0..=10^6 once", seen.len()))
}

fn structure() -> Outcome {
    let suites = [
        (Suite::Facts5, 2000, &["fact5", "tribonacci-rule", "column-endings", "first-column-diffs"][..]),
        (Suite::Fact6, 10_000, &["census", "wall-letters", "seed-letters", "pre-seed-letters", "column-residues"][..]),
        (Suite::Signs, 10_000, &["partition", "no-three-consecutive", "listed-prefixes"][..]),
        (Suite::Rows, 200, &["locate-agreement", "reversal", "difference-inverse", "parity-transitions"][..]),
    ];
    let mut bad = Vec::new();
    let mut times = Vec::new();
    for (suite, bound, names) in suites {
        let start = Instant::now();
        let report = run_suite(suite, Some(bound));
        let elapsed = start.elapsed();
        times.push(format!("{suite} {:.2} s", elapsed.as_secs_f64()));
        bad.extend(failures(&report, names));
        if elapsed > LIMIT_PER_STRUCTURE_SUITE {
            bad.push(format!("{suite} took {:.1} s", elapsed.as_secs_f64()));
        }
    }
    outcome(bad.is_empty(), if bad.is_empty() { times.join(", ") } else { bad.join("; ") })
}

fn patterns() -> Outcome {
    let report = run_suite(Suite::Patterns, Some(10_000));
    let bad = failures(
        &report,
        &[
            "generators-fibbinary",
            "generators-tribbinary",
            "generators-fibternary",
            "generators-tribternary",
            "two-tribbinary",
            "four-fibternary",
            "three-tribternary",
            "constructive-multiples",
            "power-counts",
        ],
    );
    outcome(bad.is_empty(), if bad.is_empty() { "generators, decompositions, multiples, power counts".into() } else { bad.join("; ") })
}

fn estimates() -> Outcome {
    let mut worst = (0.0f64, 0, 0);
    for r in 50..=200 {
        for c in 1..=8 {
            let e = estimate_relative_error(r, c);
            if e > worst.0 {
                worst = (e, r, c);
            }
        }
    }
    outcome(worst.0 < 0.05, format!("worst relative error {:.4} at row {}, column {}", worst.0, worst.1, worst.2))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("array tables", Some(LIMIT_TABLES), tables),
        ("sequence prefixes", Some(LIMIT_PREFIXES), prefixes),
        ("deviation records", Some(LIMIT_RECORDS), records),
        ("maximum deviation", Some(LIMIT_MAX_DEVIATION), max_deviation),
        ("multiples", Some(LIMIT_MULTIPLES), multiples),
        ("canonization", Some(LIMIT_CANONIZATION), canonization),
        ("structure suites", None, structure),
        ("digit patterns", Some(LIMIT_PATTERNS), patterns),
        ("entry estimate", None, estimates),
    ];
    let mut all_ok = true;
    for (i, (name, limit, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let in_time = limit.is_none_or(|l| elapsed <= l);
        let ok = result.ok && in_time;
        all_ok &= ok;
        let limit_text = limit.map_or(String::new(), |l| format!(", limit {} s", l.as_secs()));
        let late = if in_time { "" } else { " [too slow]" };
        println!(
            "{} criterion {}: {name} ({:.2} s{limit_text}){late} - {}",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            elapsed.as_secs_f64(),
            result.detail
        );
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
