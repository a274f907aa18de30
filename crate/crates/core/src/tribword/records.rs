//! Successor deviation `out(n) − αn` and its running records.

use std::cmp::Ordering;

use num_bigint::BigInt;
use serde::Serialize;

use super::{alpha_bits, sign_sequences, CertifyError, Interval, MAX_BITS};
use crate::numeration::{small, to_canonical, tribonacci};

const START_BITS: u32 = 96;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RecordSign {
    Positive,
    Negative,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecordEntry {
    pub n: u64,
    /// Enclosure of `out(n) − αn`.
    pub delta: Interval,
    /// Tribonacci indices of the representation of `n`, largest first;
    /// digit position `k` is index `k + 3`.
    pub repr_indices: Vec<usize>,
}

fn successor_value(n: u64) -> BigInt {
    match small::successor(n) {
        Some(v) => BigInt::from(v),
        None => BigInt::from(crate::numeration::successor(&n.into())),
    }
}

/// `out(n) − αn` with α taken to `bits` fractional bits.
pub fn successor_deviation_at(n: u64, bits: u32) -> Interval {
    Interval::exact(successor_value(n), bits).sub(&alpha_bits(bits).scale(&BigInt::from(n)))
}

/// `out(n) − αn`, refined until its sign is certain.
pub fn successor_deviation(n: u64) -> Result<Interval, CertifyError> {
    if n == 0 {
        return Ok(Interval::exact(0, START_BITS));
    }
    let mut bits = START_BITS;
    loop {
        let d = successor_deviation_at(n, bits);
        if !d.contains_zero() {
            return Ok(d);
        }
        if bits >= MAX_BITS {
            return Err(CertifyError::PrecisionCeiling(MAX_BITS));
        }
        bits = (bits * 2).min(MAX_BITS);
    }
}

/// Certified order of the deviations at `n` and `m`.
fn compare_deviations(n: u64, m: u64) -> Result<Ordering, CertifyError> {
    if n == m {
        return Ok(Ordering::Equal);
    }
    let mut bits = START_BITS;
    loop {
        let a = successor_deviation_at(n, bits);
        let b = successor_deviation_at(m, bits);
        if let Some(ord) = a.certain_cmp(&b) {
            return Ok(ord);
        }
        if bits >= MAX_BITS {
            return Err(CertifyError::PrecisionCeiling(MAX_BITS));
        }
        bits = (bits * 2).min(MAX_BITS);
    }
}

fn repr_indices(n: u64) -> Vec<usize> {
    to_canonical(&n.into()).support().into_iter().map(|k| k + 3).collect()
}

/// Running maxima (positive) or minima (negative) of `out(n) − αn` over
/// `1..=bound`.
pub fn records(bound: u64, sign: RecordSign) -> Result<Vec<RecordEntry>, CertifyError> {
    let mut out: Vec<RecordEntry> = Vec::new();
    let mut best: Option<(u64, f64)> = None;
    for n in 1..=bound {
        let approx = successor_deviation_at(n, 64).mid_f64();
        let wanted = match sign {
            RecordSign::Positive => approx > -1e-9,
            RecordSign::Negative => approx < 1e-9,
        };
        if !wanted {
            continue;
        }
        let better = match best {
            None => true,
            Some((m, value)) => {
                let close = (approx - value).abs() < 1e-9;
                let improves = match sign {
                    RecordSign::Positive => approx > value,
                    RecordSign::Negative => approx < value,
                };
                if !close && !improves {
                    false
                } else {
                    let ord = compare_deviations(n, m)?;
                    match sign {
                        RecordSign::Positive => ord == Ordering::Greater,
                        RecordSign::Negative => ord == Ordering::Less,
                    }
                }
            }
        };
        if !better {
            continue;
        }
        let delta = successor_deviation(n)?;
        let right_sign = match sign {
            RecordSign::Positive => delta.is_positive(),
            RecordSign::Negative => delta.is_negative(),
        };
        if !right_sign {
            continue;
        }
        best = Some((n, approx));
        out.push(RecordEntry {
            n,
            delta,
            repr_indices: repr_indices(n),
        });
    }
    Ok(out)
}

/// `T_{P(2)} + … + T_{P(k)}` (positive) or `T_{Q(2)} + … + T_{Q(k)}`
/// (negative), where `P(0) = 0, P(1) = 1` and `Q(1) = 2`.
pub fn constructed_record(k: usize, sign: RecordSign) -> Result<u64, CertifyError> {
    let mut span = 3 * k + 6;
    let indices = loop {
        let (p, q) = sign_sequences(span)?;
        let chosen: Vec<usize> = match sign {
            RecordSign::Positive if p.len() > k => p[2..=k].to_vec(),
            RecordSign::Negative if q.len() >= k => q[1..k].to_vec(),
            _ => {
                span *= 2;
                continue;
            }
        };
        break chosen;
    };
    let total = indices.iter().map(|&i| tribonacci(i)).sum::<num_bigint::BigUint>();
    Ok(u64::try_from(total).expect("constructed record fits in u64"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deviations_match_listed_values() {
        assert_eq!(successor_deviation(1).unwrap().to_decimal(7), "0.1607132");
        assert_eq!(successor_deviation(4).unwrap().to_decimal(7), "-0.3571470");
        assert_eq!(successor_deviation(422).unwrap().to_decimal_truncated(7), "0.8209892");
    }

    #[test]
    fn positive_records_to_500() {
        let recs = records(500, RecordSign::Positive).unwrap();
        let ns: Vec<u64> = recs.iter().map(|r| r.n).collect();
        assert_eq!(ns, [1, 2, 3, 10, 23, 67, 148, 341, 422]);
        assert_eq!(recs[3].repr_indices, [6, 4, 3]);
    }

    #[test]
    fn constructed_sums() {
        let pos: Vec<u64> = (2..=8)
            .map(|k| constructed_record(k, RecordSign::Positive).unwrap())
            .collect();
        assert_eq!(pos, [1, 3, 10, 23, 67, 148, 422]);
        let neg: Vec<u64> = (2..=5)
            .map(|k| constructed_record(k, RecordSign::Negative).unwrap())
            .collect();
        assert_eq!(neg, [4, 28, 177, 681]);
    }
}
