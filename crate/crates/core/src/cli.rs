//! The `trithoff` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_bigint::{BigInt, BigUint};
use serde_json::json;

use crate::array::{column_stream, TrithoffView, MIN_COLUMN};
use crate::digitpatterns::{
    decompose_four_fibternary, decompose_three_tribternary, decompose_two_tribbinary,
    fibbinary_multiple, fibternary_multiple, family_stream, render, PatternFamily,
};
use crate::extratrib::ExtraTrib;
use crate::numeration::{canonize, canonize_padded, TribDigits};
use crate::oeis::{self, BFile, BFileError, CacheOptions};
use crate::tribword::{fibonacci_word, letter_positions, records, tribonacci_word, Letter, RecordSign};
use crate::verify::{run_suite, Report, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "trithoff", version, about = "Tribonacci numeration, the Trithoff array and related sequences")]
pub struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Omit timings from reports.
    #[arg(long, global = true)]
    pub no_meta: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print terms of a named sequence or a supported OEIS id.
    Seq(SeqArgs),
    /// Print a window of the array, precolumns included.
    Array(ArrayArgs),
    /// Find the row holding the tail of a sequence given by three terms.
    Locate(LocateArgs),
    /// Canonize a digit string such as 2, 1030 or 1(12)0.
    Canonize(CanonizeArgs),
    /// Records of out(n) − αn.
    Records(RecordsArgs),
    /// The Tribonacci word or the positions of one letter.
    Word(WordArgs),
    /// Fibbinary, Tribbinary, Fibternary and Tribternary numbers.
    Patterns(PatternsArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Compare a generator with an OEIS b-file.
    Oeis(OeisArgs),
}

#[derive(Debug, Args)]
pub struct SeqArgs {
    /// OEIS id or generator name (tribonacci, `trithoff-col:<c>`, tribword-a, tribbinary, records-pos, …).
    pub name: String,
    #[arg(long, default_value_t = 10)]
    pub count: usize,
    /// Terms to skip.
    #[arg(long, default_value_t = 0)]
    pub offset: usize,
    /// Search bound for record sequences.
    #[arg(long)]
    pub bound: Option<u64>,
}

#[derive(Debug, Args)]
pub struct ArrayArgs {
    #[arg(long, default_value_t = 6)]
    pub rows: u64,
    /// Column range `lo..hi` (lo ≥ −2) or a count `n` meaning `1..n`.
    #[arg(long, default_value = "-2..6", allow_hyphen_values = true)]
    pub cols: String,
}

#[derive(Debug, Args)]
pub struct LocateArgs {
    /// `a,b,c@i`: terms at indices i, i+1, i+2 (`@i` defaults to 0).
    #[arg(allow_hyphen_values = true)]
    pub anchor: String,
}

#[derive(Debug, Args)]
pub struct CanonizeArgs {
    pub word: String,
    /// Print every rewrite step.
    #[arg(long)]
    pub trace: bool,
}

#[derive(Debug, Args)]
pub struct RecordsArgs {
    #[arg(long, default_value_t = 500)]
    pub bound: u64,
    #[arg(long, default_value = "positive", value_parser = ["positive", "negative"])]
    pub sign: String,
}

#[derive(Debug, Args)]
pub struct WordArgs {
    #[arg(long, default_value_t = 40)]
    pub count: usize,
    /// Print positions of this letter instead of the word.
    #[arg(long, value_parser = ["a", "b", "c"])]
    pub letter: Option<String>,
    /// Print the Fibonacci word instead.
    #[arg(long)]
    pub fibonacci: bool,
}

#[derive(Debug, Args)]
pub struct PatternsArgs {
    #[arg(value_parser = ["fibbinary", "tribbinary", "fibternary", "tribternary"])]
    pub family: String,
    #[arg(long, default_value_t = 20)]
    pub count: usize,
    /// Split n into family members (two Tribbinary, four Fibternary or three Tribternary).
    #[arg(long)]
    pub decompose: Option<u64>,
    /// A nonzero multiple of n in the family (Fibbinary or Fibternary).
    #[arg(long)]
    pub multiple: Option<u64>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// facts5, fact6, bounds, signs, records, rows, multiples, patterns or all.
    #[arg(value_parser = |s: &str| s.parse::<Suite>())]
    pub suite: Suite,
    #[arg(long)]
    pub bound: Option<u64>,
}

#[derive(Debug, Args)]
pub struct OeisArgs {
    pub id: String,
    /// Read this b-file instead of the cache.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Never download.
    #[arg(long)]
    pub offline: bool,
    /// Defaults to $TRITHOFF_CACHE, then the platform cache directory.
    #[arg(long)]
    pub cache_dir: Option<PathBuf>,
    /// Most terms to compare.
    #[arg(long, default_value_t = 1000)]
    pub count: usize,
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

fn usage(message: impl Into<String>) -> CliError {
    CliError {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

impl From<BFileError> for CliError {
    fn from(e: BFileError) -> Self {
        let code = match e {
            BFileError::Generator(_) => EXIT_FAILED,
            _ => EXIT_USAGE,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

/// Parses `args`, writes to `out` and `err`, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes()).map_err(|e| CliError {
        code: EXIT_FAILED,
        message: e.to_string(),
    })
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let text = match &cli.command {
        Command::Seq(a) => seq(a, cli.json)?,
        Command::Array(a) => array(a, cli.json)?,
        Command::Locate(a) => locate(a, cli.json)?,
        Command::Canonize(a) => canonize_cmd(a, cli.json)?,
        Command::Records(a) => records_cmd(a, cli.json)?,
        Command::Word(a) => word(a, cli.json),
        Command::Patterns(a) => patterns(a, cli.json)?,
        Command::Verify(a) => {
            let report = run_suite(a.suite, a.bound);
            return emit_report(report, cli, out);
        }
        Command::Oeis(a) => {
            let report = oeis_cmd(a)?;
            return emit_report(report, cli, out);
        }
    };
    write_out(out, &text)?;
    Ok(EXIT_OK)
}

fn emit_report(report: Report, cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let report = if cli.no_meta { report.without_meta() } else { report };
    let text = if cli.json {
        report.to_json() + "\n"
    } else {
        report.to_text()
    };
    write_out(out, &text)?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_FAILED })
}

fn terms_line(name: &str, offset: usize, terms: &[String], json: bool) -> String {
    if json {
        json!({ "name": name, "offset": offset, "terms": terms }).to_string() + "\n"
    } else {
        terms.join(" ") + "\n"
    }
}

fn strings<T: ToString>(v: impl IntoIterator<Item = T>) -> Vec<String> {
    v.into_iter().map(|x| x.to_string()).collect()
}

fn record_ns(bound: u64, sign: RecordSign) -> Result<Vec<u64>, CliError> {
    records(bound, sign)
        .map(|r| r.into_iter().map(|e| e.n).collect())
        .map_err(|e| CliError {
            code: EXIT_FAILED,
            message: e.to_string(),
        })
}

/// First `count` terms of a generator; `None` for unknown names.
pub fn sequence_terms(name: &str, count: usize, bound: Option<u64>) -> Result<Option<Vec<String>>, CliError> {
    if let Some(spec) = oeis::lookup(name) {
        return Ok(Some(strings(spec.generate(count)?)));
    }
    if let Some(c) = name.strip_prefix("trithoff-col:") {
        let c: i64 = c.parse().map_err(|_| usage(format!("bad column in {name:?}")))?;
        if c < MIN_COLUMN {
            return Err(usage(format!("column {c} is left of the pre-seed")));
        }
        return Ok(Some(strings(column_stream(c, count))));
    }
    let letters = |w: String| -> Vec<String> { w.chars().map(String::from).collect() };
    let terms = match name {
        "tribword" => letters(tribonacci_word(count)),
        "fibword" => letters(fibonacci_word(count)),
        "records-pos" | "records-neg" => {
            let sign = if name == "records-pos" { RecordSign::Positive } else { RecordSign::Negative };
            let ns = record_ns(bound.unwrap_or(10_000), sign)?;
            strings(ns.into_iter().take(count))
        }
        _ => return Ok(None),
    };
    Ok(Some(terms))
}

fn seq(a: &SeqArgs, json: bool) -> Result<String, CliError> {
    let terms = sequence_terms(&a.name, a.count + a.offset, a.bound)?
        .ok_or_else(|| usage(format!("unknown sequence {:?}", a.name)))?;
    let terms: Vec<String> = terms.into_iter().skip(a.offset).collect();
    Ok(terms_line(&a.name, a.offset, &terms, json))
}

/// `lo..hi` or `n` (meaning `1..n`).
pub fn parse_columns(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (
            lo.trim().parse::<i64>().map_err(|_| format!("bad column bound {lo:?}"))?,
            hi.trim().parse::<i64>().map_err(|_| format!("bad column bound {hi:?}"))?,
        ),
        None => (1, s.trim().parse::<i64>().map_err(|_| format!("bad column count {s:?}"))?),
    };
    if lo < MIN_COLUMN {
        return Err(format!("columns start at {MIN_COLUMN}"));
    }
    if hi < lo {
        return Err(format!("empty column range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

/// Right-aligned table; ` || ` separates column 0 from column 1.
pub fn render_array(rows: u64, lo: i64, hi: i64) -> String {
    let view = TrithoffView::default();
    let cells: Vec<Vec<String>> = view
        .window(rows, lo..=hi)
        .into_iter()
        .map(strings::<BigUint>)
        .collect();
    let widths: Vec<usize> = (0..(hi - lo + 1) as usize)
        .map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(0))
        .collect();
    let mut text = String::new();
    for row in &cells {
        for (j, cell) in row.iter().enumerate() {
            let column = lo + j as i64;
            if j > 0 {
                text.push_str(if column == 1 { " || " } else { " " });
            }
            text.push_str(&format!("{cell:>w$}", w = widths[j]));
        }
        text.push('\n');
    }
    text
}

fn array(a: &ArrayArgs, json: bool) -> Result<String, CliError> {
    let (lo, hi) = parse_columns(&a.cols).map_err(usage)?;
    if a.rows == 0 {
        return Err(usage("--rows must be positive"));
    }
    if json {
        let view = TrithoffView::default();
        let entries: Vec<Vec<String>> = view.window(a.rows, lo..=hi).into_iter().map(strings::<BigUint>).collect();
        return Ok(json!({ "columns": [lo, hi], "rows": a.rows, "entries": entries }).to_string() + "\n");
    }
    Ok(render_array(a.rows, lo, hi))
}

/// `a,b,c@i` → the sequence with those terms at `i, i+1, i+2`.
pub fn parse_anchor(s: &str) -> Result<ExtraTrib, String> {
    let (terms, index) = match s.split_once('@') {
        Some((t, i)) => (t, i.trim().parse::<i64>().map_err(|_| format!("bad index {i:?}"))?),
        None => (s, 0),
    };
    let values: Vec<BigInt> = terms
        .split(',')
        .map(|t| t.trim().parse::<BigInt>().map_err(|_| format!("bad term {t:?}")))
        .collect::<Result<_, _>>()?;
    let [a, b, c]: [BigInt; 3] = values
        .try_into()
        .map_err(|_| "expected three comma-separated terms".to_string())?;
    Ok(ExtraTrib::new(index, [a, b, c]))
}

fn locate(a: &LocateArgs, json: bool) -> Result<String, CliError> {
    let s = parse_anchor(&a.anchor).map_err(usage)?;
    let found = s.locate().map_err(|e| CliError {
        code: EXIT_FAILED,
        message: e.to_string(),
    })?;
    if json {
        return Ok(serde_json::to_string(&found).expect("serializes") + "\n");
    }
    Ok(format!(
        "row {}\nstart index {}\nfirst column {}\n",
        found.row, found.start_index, found.first_column
    ))
}

fn canonize_cmd(a: &CanonizeArgs, json: bool) -> Result<String, CliError> {
    let word: TribDigits = a.word.parse().map_err(|e: crate::numeration::NumerationError| usage(e.to_string()))?;
    let failed = |e: crate::numeration::CanonizeError| CliError {
        code: EXIT_FAILED,
        message: e.to_string(),
    };
    let (canonical, zeros) = canonize_padded(&word).map_err(failed)?;
    let padded = word.with_trailing_zeros(zeros);
    let (_, trace) = canonize(&padded).map_err(failed)?;
    if json {
        return Ok(json!({
            "input": word.to_string(),
            "zeros_added": zeros,
            "canonical": canonical.to_string(),
            "value": padded.evaluate().to_string(),
            "weight": word.weight(),
            "steps": trace.steps,
        })
        .to_string()
            + "\n");
    }
    let mut text = format!(
        "input {word}\nzeros added {zeros}\ncanonical {canonical}\nvalue {}\nsteps {}\n",
        padded.evaluate(),
        trace.steps.len()
    );
    if a.trace {
        for (i, s) in trace.steps.iter().enumerate() {
            text.push_str(&format!(
                "{:>4} {:?} at {} weight {} -> {}\n",
                i + 1,
                s.rule,
                s.position,
                s.weight_before,
                s.weight_after
            ));
        }
    }
    Ok(text)
}

fn records_cmd(a: &RecordsArgs, json: bool) -> Result<String, CliError> {
    let sign = if a.sign == "negative" { RecordSign::Negative } else { RecordSign::Positive };
    let found = records(a.bound, sign).map_err(|e| CliError {
        code: EXIT_FAILED,
        message: e.to_string(),
    })?;
    if json {
        let rows: Vec<_> = found
            .iter()
            .map(|e| json!({ "n": e.n, "deviation": e.delta.to_decimal_truncated(7), "indices": e.repr_indices }))
            .collect();
        return Ok(serde_json::to_string(&rows).expect("serializes") + "\n");
    }
    let width = found.iter().map(|e| e.n.to_string().len()).max().unwrap_or(1);
    Ok(found
        .iter()
        .map(|e| {
            let idx = strings(&e.repr_indices).join(",");
            format!("{:>width$} {:>10} [{idx}]\n", e.n, e.delta.to_decimal_truncated(7))
        })
        .collect())
}

fn word(a: &WordArgs, json: bool) -> String {
    if let Some(l) = &a.letter {
        let letter = Letter::from_char(l.chars().next().expect("validated")).expect("validated");
        return terms_line(&format!("tribword-{l}"), 0, &strings(letter_positions(letter, a.count)), json);
    }
    let w = if a.fibonacci { fibonacci_word(a.count) } else { tribonacci_word(a.count) };
    if json {
        json!({ "word": w }).to_string() + "\n"
    } else {
        w + "\n"
    }
}

fn patterns(a: &PatternsArgs, json: bool) -> Result<String, CliError> {
    let family = PatternFamily::from_name(&a.family).expect("validated");
    let radix = family.radix() as u32;
    if let Some(n) = a.decompose {
        let parts: Vec<u64> = match family {
            PatternFamily::Tribbinary => {
                let (x, y) = decompose_two_tribbinary(n);
                vec![x, y]
            }
            PatternFamily::Fibternary => decompose_four_fibternary(n).to_vec(),
            PatternFamily::Tribternary => decompose_three_tribternary(n).to_vec(),
            PatternFamily::Fibbinary => return Err(usage("fibbinary has no decomposition here")),
        };
        if json {
            return Ok(json!({ "n": n, "family": family, "parts": parts }).to_string() + "\n");
        }
        return Ok(parts.iter().map(|&p| render(&p.into(), radix) + "\n").collect());
    }
    if let Some(n) = a.multiple {
        if n == 0 {
            return Err(usage("--multiple needs n ≥ 1"));
        }
        let m = match family {
            PatternFamily::Fibbinary | PatternFamily::Tribbinary => fibbinary_multiple(n),
            PatternFamily::Fibternary | PatternFamily::Tribternary => fibternary_multiple(n),
        };
        let radix = if matches!(family, PatternFamily::Fibbinary | PatternFamily::Tribbinary) { 2 } else { 3 };
        if json {
            return Ok(json!({ "n": n, "family": family, "multiple": m.to_string() }).to_string() + "\n");
        }
        return Ok(render(&m, radix) + "\n");
    }
    Ok(terms_line(family.name(), 0, &strings(family_stream(family, a.count)), json))
}

fn oeis_cmd(a: &OeisArgs) -> Result<Report, CliError> {
    oeis::validate_id(&a.id)?;
    let spec = oeis::lookup(&a.id).ok_or_else(|| BFileError::Unsupported(a.id.clone()))?;
    let bfile = match &a.file {
        Some(path) => BFile::read(&a.id, path)?,
        None => oeis::load(&a.id, &CacheOptions::resolve(a.cache_dir.clone(), a.offline))?,
    };
    let comparison = oeis::compare(spec, &bfile, a.count)?;
    let mut report = Report::new(format!("oeis {}", a.id));
    report.run(spec.name, || Ok((comparison.passed(), json!(comparison))));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("trithoff").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn seq_examples() {
        assert_eq!(call(&["seq", "trithoff-col:1", "--count", "5"]).1, "1 3 5 8 10\n");
        assert_eq!(call(&["seq", "tribonacci", "--count", "8"]).1, "0 0 1 1 2 4 7 13\n");
        assert_eq!(call(&["seq", "tribbinary", "--count", "7"]).1, "0 1 2 3 4 5 6\n");
        assert_eq!(call(&["seq", "A003265", "--count", "2", "--offset", "3"]).1, "8 10\n");
        assert_eq!(call(&["seq", "nope"]).0, EXIT_USAGE);
    }

    #[test]
    fn array_single_cell() {
        assert_eq!(call(&["array", "--rows", "1", "--cols", "1..1"]).1, "1\n");
        assert_eq!(call(&["array", "--cols", "-3..1"]).0, EXIT_USAGE);
    }

    #[test]
    fn locate_examples() {
        assert!(call(&["locate", "0,0,2@0"]).1.starts_with("row 7\n"));
        assert!(call(&["locate", "0,0,1"]).1.starts_with("row 1\n"));
        assert!(call(&["locate", "0,0,3@0"]).1.starts_with("row 10\n"));
        assert_eq!(call(&["locate", "1,2"]).0, EXIT_USAGE);
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(call(&["verify", "everything"]).0, EXIT_USAGE);
        assert_eq!(call(&["bogus"]).0, EXIT_USAGE);
        assert_eq!(call(&["--version"]).0, EXIT_OK);
    }
}
