//! OEIS b-files: parsing, a local cache with optional download, and
//! comparison against this crate's generators.

use std::fmt;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::array::{column_stream, first_column, rows_followed_by_three, seed_not_doubled};
use crate::digitpatterns::{family_stream, PatternFamily};
use crate::extratrib::{diff_row_orbit, invertible_rows, multiples_table, noninvertible_rows, ExtraTrib};
use crate::numeration::tribonacci;
use crate::tribword::{letter_positions, sign_sequences, Letter};

#[derive(Debug, Error)]
pub enum BFileError {
    #[error("invalid sequence id {0:?} (expected A followed by six digits)")]
    InvalidId(String),
    #[error("unsupported sequence id {0}")]
    Unsupported(String),
    #[error("b-file not found: {0}")]
    FileNotFound(PathBuf),
    #[error("{source_name}:{line}: {message}")]
    Parse {
        source_name: String,
        line: usize,
        message: String,
    },
    #[error("reading {path}: {error}")]
    Io { path: PathBuf, error: std::io::Error },
    #[error("fetching {url}: {message}")]
    Network { url: String, message: String },
    #[error("generator failed: {0}")]
    Generator(String),
}

/// Checks the `A` + six digits shape.
pub fn validate_id(id: &str) -> Result<(), BFileError> {
    let ok = id.len() == 7 && id.starts_with('A') && id[1..].bytes().all(|b| b.is_ascii_digit());
    if ok {
        Ok(())
    } else {
        Err(BFileError::InvalidId(id.to_string()))
    }
}

/// Parsed b-file: consecutive terms starting at `first_index`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    pub id: String,
    pub first_index: i64,
    pub values: Vec<BigInt>,
    pub source: String,
}

impl BFile {
    /// Lines are `#` comments, blank, or `<index> <value>` with indices
    /// ascending by one.
    pub fn parse(id: &str, text: &str, source: &str) -> Result<Self, BFileError> {
        validate_id(id)?;
        let fail = |line: usize, message: String| BFileError::Parse {
            source_name: source.to_string(),
            line,
            message,
        };
        let mut first_index = None;
        let mut values = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            let (Some(index), Some(value), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(fail(line_no, format!("expected \"<index> <value>\", found {line:?}")));
            };
            let index: i64 = index
                .parse()
                .map_err(|_| fail(line_no, format!("bad index {index:?}")))?;
            let value: BigInt = value
                .parse()
                .map_err(|_| fail(line_no, format!("bad value {value:?}")))?;
            let start = *first_index.get_or_insert(index);
            let expected = start + values.len() as i64;
            if index != expected {
                return Err(fail(line_no, format!("index {index} where {expected} was expected")));
            }
            values.push(value);
        }
        let first_index = first_index.ok_or_else(|| fail(text.lines().count(), "no data lines".into()))?;
        Ok(Self {
            id: id.to_string(),
            first_index,
            values,
            source: source.to_string(),
        })
    }

    pub fn read(id: &str, path: &Path) -> Result<Self, BFileError> {
        let text = std::fs::read_to_string(path).map_err(|error| {
            if error.kind() == std::io::ErrorKind::NotFound {
                BFileError::FileNotFound(path.to_path_buf())
            } else {
                BFileError::Io {
                    path: path.to_path_buf(),
                    error,
                }
            }
        })?;
        Self::parse(id, &text, &path.display().to_string())
    }

    pub fn last_index(&self) -> i64 {
        self.first_index + self.values.len() as i64 - 1
    }

    pub fn get(&self, index: i64) -> Option<&BigInt> {
        usize::try_from(index - self.first_index)
            .ok()
            .and_then(|i| self.values.get(i))
    }
}

impl fmt::Display for BFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# {}", self.id)?;
        for (i, v) in self.values.iter().enumerate() {
            writeln!(f, "{} {}", self.first_index + i as i64, v)?;
        }
        Ok(())
    }
}

type Generator = fn(usize) -> Result<Vec<BigInt>, String>;

/// A supported sequence: its OEIS offset and a generator of its first terms.
#[derive(Clone, Copy)]
pub struct SequenceSpec {
    pub id: &'static str,
    pub offset: i64,
    pub name: &'static str,
    generate: Generator,
}

impl fmt::Debug for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SequenceSpec")
            .field("id", &self.id)
            .field("offset", &self.offset)
            .field("name", &self.name)
            .finish()
    }
}

impl SequenceSpec {
    /// Terms at indices `offset .. offset + count`.
    pub fn generate(&self, count: usize) -> Result<Vec<BigInt>, BFileError> {
        (self.generate)(count).map_err(BFileError::Generator)
    }
}

fn big<T: Into<BigInt>>(v: impl IntoIterator<Item = T>) -> Vec<BigInt> {
    v.into_iter().map(Into::into).collect()
}

fn column(c: i64, n: usize) -> Result<Vec<BigInt>, String> {
    Ok(big(column_stream(c, n)))
}

fn extratrib(a: i64, b: i64, c: i64, n: usize) -> Result<Vec<BigInt>, String> {
    Ok(ExtraTrib::from_i64(0, a, b, c).terms(0, n as i64 - 1))
}

fn sign_terms(n: usize, negative: bool) -> Result<Vec<BigInt>, String> {
    // each class has density at least 1/3
    let mut bound = 3 * n + 3;
    loop {
        let (p, q) = sign_sequences(bound).map_err(|e| e.to_string())?;
        let s = if negative { q } else { p };
        if s.len() >= n {
            return Ok(big(s.into_iter().take(n).map(|k| k as u64)));
        }
        bound *= 2;
    }
}

fn multiples(n: usize, first_columns: bool) -> Result<Vec<BigInt>, String> {
    let table = multiples_table(&ExtraTrib::tribonacci(), n as u64).map_err(|e| e.to_string())?;
    Ok(table
        .into_iter()
        .map(|m| if first_columns { m.first_column.into() } else { m.row.into() })
        .collect())
}

fn family(f: PatternFamily, n: usize) -> Result<Vec<BigInt>, String> {
    Ok(big(family_stream(f, n)))
}

/// Supported ids; the offsets are data and reviewed per id.
pub const SUPPORTED: &[SequenceSpec] = &[
    SequenceSpec { id: "A000073", offset: 0, name: "tribonacci", generate: |n| Ok((0..n).map(|k| BigInt::from(tribonacci(k))).collect()) },
    SequenceSpec { id: "A001590", offset: 0, name: "tribonacci-010", generate: |n| extratrib(0, 1, 0, n) },
    SequenceSpec { id: "A000213", offset: 0, name: "tribonacci-111", generate: |n| extratrib(1, 1, 1, n) },
    SequenceSpec { id: "A003265", offset: 1, name: "trithoff-col:1", generate: |n| Ok(big((1..=n as u64).map(first_column))) },
    SequenceSpec { id: "A353083", offset: 1, name: "trithoff-col:2", generate: |n| column(2, n) },
    SequenceSpec { id: "A353084", offset: 1, name: "trithoff-col:0", generate: |n| column(0, n) },
    SequenceSpec { id: "A353086", offset: 1, name: "trithoff-col:-1", generate: |n| column(-1, n) },
    SequenceSpec { id: "A353090", offset: 1, name: "trithoff-col:-2", generate: |n| column(-2, n) },
    SequenceSpec { id: "A351631", offset: 1, name: "seed-not-doubled", generate: |n| Ok(big(seed_not_doubled(n))) },
    SequenceSpec { id: "A305373", offset: 1, name: "rows-before-gap-3", generate: |n| Ok(big(rows_followed_by_three(n))) },
    SequenceSpec { id: "A352719", offset: 1, name: "signs-nonnegative", generate: |n| sign_terms(n, false) },
    SequenceSpec { id: "A352748", offset: 1, name: "signs-negative", generate: |n| sign_terms(n, true) },
    SequenceSpec { id: "A353178", offset: 1, name: "rows-invertible", generate: |n| Ok(big(invertible_rows(n))) },
    SequenceSpec { id: "A353193", offset: 1, name: "rows-noninvertible", generate: |n| Ok(big(noninvertible_rows(n))) },
    SequenceSpec { id: "A354215", offset: 1, name: "diff-row-orbit", generate: |n| diff_row_orbit(1, n).map(big).map_err(|e| e.to_string()) },
    SequenceSpec { id: "A351685", offset: 1, name: "multiples-row", generate: |n| multiples(n, false) },
    SequenceSpec { id: "A351689", offset: 1, name: "multiples-first-column", generate: |n| multiples(n, true) },
    SequenceSpec { id: "A003144", offset: 1, name: "tribword-a", generate: |n| Ok(big(letter_positions(Letter::A, n))) },
    SequenceSpec { id: "A003145", offset: 1, name: "tribword-b", generate: |n| Ok(big(letter_positions(Letter::B, n))) },
    SequenceSpec { id: "A003146", offset: 1, name: "tribword-c", generate: |n| Ok(big(letter_positions(Letter::C, n))) },
    SequenceSpec { id: "A003714", offset: 0, name: "fibbinary", generate: |n| family(PatternFamily::Fibbinary, n) },
    SequenceSpec { id: "A003726", offset: 0, name: "tribbinary", generate: |n| family(PatternFamily::Tribbinary, n) },
    SequenceSpec { id: "A060140", offset: 0, name: "fibternary", generate: |n| family(PatternFamily::Fibternary, n) },
    SequenceSpec { id: "A356823", offset: 0, name: "tribternary", generate: |n| family(PatternFamily::Tribternary, n) },
];

/// Looks up an OEIS id or a generator name.
pub fn lookup(key: &str) -> Option<&'static SequenceSpec> {
    SUPPORTED.iter().find(|s| s.id == key || s.name == key)
}

/// Outcome of comparing a generator with a b-file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub id: String,
    pub source: String,
    /// Overlapping index range that was compared.
    pub first_index: i64,
    pub last_index: i64,
    pub checked: usize,
    pub mismatch: Option<Mismatch>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub index: i64,
    #[serde(serialize_with = "crate::decimal")]
    pub expected: BigInt,
    #[serde(serialize_with = "crate::decimal")]
    pub generated: BigInt,
}

impl Comparison {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none() && self.checked > 0
    }
}

/// Compares at most `limit` terms of the overlap.
pub fn compare(spec: &SequenceSpec, bfile: &BFile, limit: usize) -> Result<Comparison, BFileError> {
    let first = bfile.first_index.max(spec.offset);
    let limit = i64::try_from(limit).unwrap_or(i64::MAX);
    let last = bfile.last_index().min(first.saturating_add(limit - 1));
    let count = (last - spec.offset + 1).max(0) as usize;
    let generated = spec.generate(count)?;
    let mut checked = 0;
    let mut mismatch = None;
    for index in first..=last {
        let ours = &generated[(index - spec.offset) as usize];
        let theirs = bfile.get(index).expect("index inside the b-file");
        checked += 1;
        if ours != theirs {
            mismatch = Some(Mismatch {
                index,
                expected: theirs.clone(),
                generated: ours.clone(),
            });
            break;
        }
    }
    Ok(Comparison {
        id: spec.id.to_string(),
        source: bfile.source.clone(),
        first_index: first,
        last_index: last,
        checked,
        mismatch,
    })
}

/// Where b-files are looked up and whether they may be downloaded.
#[derive(Debug, Clone)]
pub struct CacheOptions {
    pub dir: PathBuf,
    pub offline: bool,
}

impl CacheOptions {
    /// `explicit`, else `$TRITHOFF_CACHE`, else the platform cache directory.
    pub fn resolve(explicit: Option<PathBuf>, offline: bool) -> Self {
        let dir = explicit
            .or_else(|| std::env::var_os("TRITHOFF_CACHE").map(PathBuf::from))
            .or_else(|| dirs::cache_dir().map(|d| d.join("trithoff")))
            .unwrap_or_else(|| PathBuf::from(".trithoff-cache"));
        Self { dir, offline }
    }

    pub fn path_for(&self, id: &str) -> PathBuf {
        self.dir.join(bfile_name(id))
    }
}

/// `A003265` → `b003265.txt`.
pub fn bfile_name(id: &str) -> String {
    format!("b{}.txt", &id[1..])
}

pub fn bfile_url(id: &str) -> String {
    format!("https://oeis.org/{id}/{}", bfile_name(id))
}

/// Reads the cached b-file, downloading it first when allowed.
pub fn load(id: &str, cache: &CacheOptions) -> Result<BFile, BFileError> {
    validate_id(id)?;
    let path = cache.path_for(id);
    if path.exists() || cache.offline {
        return BFile::read(id, &path);
    }
    let text = fetch(id)?;
    let bfile = BFile::parse(id, &text, &bfile_url(id))?;
    if std::fs::create_dir_all(&cache.dir).is_ok() {
        // a cache that cannot be written is not an error
        let _ = std::fs::write(&path, &text);
    }
    Ok(bfile)
}

#[cfg(feature = "fetch")]
fn fetch(id: &str) -> Result<String, BFileError> {
    let url = bfile_url(id);
    let net = |message: String| BFileError::Network {
        url: url.clone(),
        message,
    };
    let response = ureq::get(&url)
        .timeout(std::time::Duration::from_secs(30))
        .call()
        .map_err(|e| net(e.to_string()))?;
    response.into_string().map_err(|e| net(e.to_string()))
}

#[cfg(not(feature = "fetch"))]
fn fetch(id: &str) -> Result<String, BFileError> {
    Err(BFileError::FileNotFound(PathBuf::from(bfile_name(id))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        let b = BFile::parse("A000073", "# tribonacci\n0 0\n1 0\n\n2 1\n3 1\n", "t").unwrap();
        assert_eq!((b.first_index, b.last_index()), (0, 3));
        assert_eq!(b.get(2), Some(&BigInt::from(1)));
        assert_eq!(b.to_string(), "# A000073\n0 0\n1 0\n2 1\n3 1\n");
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let gap = BFile::parse("A000073", "0 0\n1 0\n3 1\n", "t").unwrap_err();
        assert!(matches!(gap, BFileError::Parse { line: 3, .. }), "{gap}");
        let garbled = BFile::parse("A000073", "# x\n0 0\n1 zero\n", "t").unwrap_err();
        assert!(matches!(garbled, BFileError::Parse { line: 3, .. }), "{garbled}");
        let truncated = BFile::parse("A000073", "0 0\n1", "t").unwrap_err();
        assert_eq!(truncated.to_string(), "t:2: expected \"<index> <value>\", found \"1\"");
        assert!(matches!(BFile::parse("A1", "0 0", "t"), Err(BFileError::InvalidId(_))));
        assert!(matches!(BFile::parse("A000001", "# only\n", "t"), Err(BFileError::Parse { .. })));
    }

    #[test]
    fn every_id_is_supported_once() {
        assert_eq!(SUPPORTED.len(), 24);
        for s in SUPPORTED {
            validate_id(s.id).unwrap();
            assert_eq!(SUPPORTED.iter().filter(|t| t.id == s.id || t.name == s.name).count(), 1);
            assert_eq!(s.generate(5).unwrap().len(), 5, "{}", s.id);
            assert!(s.generate(0).unwrap().is_empty(), "{}", s.id);
        }
    }

    #[test]
    fn compare_reports_first_mismatch() {
        let spec = lookup("A003265").unwrap();
        let good = BFile::parse("A003265", "1 1\n2 3\n3 5\n4 8\n", "t").unwrap();
        assert!(compare(spec, &good, 100).unwrap().passed());
        let bad = BFile::parse("A003265", "1 1\n2 3\n3 6\n", "t").unwrap();
        let c = compare(spec, &bad, 100).unwrap();
        assert_eq!(c.mismatch.unwrap().index, 3);
        assert_eq!(c.checked, 3);
        assert!(compare(spec, &good, usize::MAX).unwrap().passed());
    }

    #[test]
    fn offline_missing_file() {
        let dir = std::env::temp_dir().join("trithoff-oeis-unit-missing");
        let cache = CacheOptions { dir, offline: true };
        assert!(matches!(load("A003265", &cache), Err(BFileError::FileNotFound(_))));
        assert_eq!(bfile_url("A003265"), "https://oeis.org/A003265/b003265.txt");
    }
}
