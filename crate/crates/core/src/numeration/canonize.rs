//! Value-preserving rewriting of improper words into canonical form.
//!
//! Rules, applied to the word padded with zeros on the left:
//!
//! * carry: the leftmost run `d a b c` with `a, b, c > 0` becomes
//!   `(d+1)(a-1)(b-1)(c-1)`;
//! * otherwise, at the leftmost digit `a > 1` (the improper boundary):
//!   `0 a b c d -> 1 (a-2) b c (d+1)` when preceded by `0`, and
//!   `0 1 a 0 c d -> 1 0 (a-2) 0 (c+1) (d+1)` when preceded by `01`.
//!
//! The right end is never extended; a rule that needs digits past it fails
//! with [`CanonizeError::InsufficientTrailingZeros`].

use thiserror::Error;

use super::{weight_of, TribDigits};

const STEP_LIMIT: usize = 100_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CanonizeError {
    #[error("rewrite at position {position} needs {missing} more trailing zero(s)")]
    InsufficientTrailingZeros { position: usize, missing: usize },
    #[error("improper boundary at position {position} of {word} is preceded by 01 and followed by a nonzero digit")]
    UnexpectedContext { word: TribDigits, position: usize },
    #[error("canonization did not finish within {0} steps")]
    StepLimit(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum CanonizeRule {
    /// Leftmost carry (`0111 -> 1000` and its improper generalization).
    Carry,
    /// `0abcd -> 1(a-2)bc(d+1)`.
    BoundaryAfterZero,
    /// `01a0cd -> 10(a-2)0(c+1)(d+1)`.
    BoundaryAfterZeroOne,
}

/// One rewrite. `position` counts from the right: the digit receiving the
/// carry for [`CanonizeRule::Carry`], the improper boundary otherwise.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct CanonizeStep {
    pub rule: CanonizeRule,
    pub position: usize,
    pub weight_before: u64,
    pub weight_after: u64,
    pub digit_sum_before: u64,
    pub digit_sum_after: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonizeTrace {
    pub steps: Vec<CanonizeStep>,
    pub result: TribDigits,
}

/// Step-by-step canonization; [`Canonizer::word`] exposes every
/// intermediate word.
#[derive(Debug, Clone)]
pub struct Canonizer {
    word: Vec<u64>,
    steps: usize,
    lowest_referenced: Option<usize>,
}

impl Canonizer {
    pub fn new(start: &TribDigits) -> Self {
        Self {
            word: start.digits().to_vec(),
            steps: 0,
            lowest_referenced: None,
        }
    }

    /// Current word without leading zeros.
    pub fn word(&self) -> TribDigits {
        TribDigits::new(self.word.clone()).trim_leading_zeros()
    }

    pub fn steps_taken(&self) -> usize {
        self.steps
    }

    /// Smallest position (from the right) read or written by a boundary rule.
    pub fn lowest_referenced(&self) -> Option<usize> {
        self.lowest_referenced
    }

    fn pad_left(&mut self) {
        let lead = self.word.iter().take_while(|&&d| d == 0).count();
        if lead < 2 {
            let fill = 2 - lead.min(2);
            self.word.splice(0..0, std::iter::repeat_n(0, fill));
        }
    }

    /// Applies one rule; `Ok(None)` once the word is canonical.
    pub fn step(&mut self) -> Result<Option<CanonizeStep>, CanonizeError> {
        self.pad_left();
        let len = self.word.len();
        let weight_before = weight_of(&self.word);
        let digit_sum_before = self.word.iter().sum();
        let w = &mut self.word;

        let triple = (1..len.saturating_sub(2)).find(|&i| w[i] > 0 && w[i + 1] > 0 && w[i + 2] > 0);
        let (rule, index) = if let Some(i) = triple {
            w[i - 1] += 1;
            w[i] -= 1;
            w[i + 1] -= 1;
            w[i + 2] -= 1;
            (CanonizeRule::Carry, i - 1)
        } else if let Some(j) = w.iter().position(|&d| d > 1) {
            if j + 3 >= len {
                return Err(CanonizeError::InsufficientTrailingZeros {
                    position: len - 1 - j,
                    missing: j + 4 - len,
                });
            }
            let rule = match w[j - 1] {
                0 => {
                    w[j - 1] = 1;
                    w[j] -= 2;
                    w[j + 3] += 1;
                    CanonizeRule::BoundaryAfterZero
                }
                _ => {
                    // Left of the boundary only 0/1 digits remain, and with
                    // no positive triple left the digit before `01` is 0.
                    debug_assert_eq!((w[j - 2], w[j - 1]), (0, 1));
                    if w[j + 1] != 0 {
                        return Err(CanonizeError::UnexpectedContext {
                            word: TribDigits::new(w.clone()),
                            position: len - 1 - j,
                        });
                    }
                    w[j - 2] = 1;
                    w[j - 1] = 0;
                    w[j] -= 2;
                    w[j + 2] += 1;
                    w[j + 3] += 1;
                    CanonizeRule::BoundaryAfterZeroOne
                }
            };
            let reached = len - 1 - (j + 3);
            self.lowest_referenced = Some(self.lowest_referenced.map_or(reached, |r| r.min(reached)));
            (rule, j)
        } else {
            return Ok(None);
        };

        self.steps += 1;
        if self.steps > STEP_LIMIT {
            return Err(CanonizeError::StepLimit(STEP_LIMIT));
        }
        Ok(Some(CanonizeStep {
            rule,
            position: len - 1 - index,
            weight_before,
            weight_after: weight_of(&self.word),
            digit_sum_before,
            digit_sum_after: self.word.iter().sum(),
        }))
    }

    /// Runs to completion, collecting every step.
    pub fn run(mut self) -> Result<CanonizeTrace, CanonizeError> {
        let mut steps = Vec::new();
        while let Some(step) = self.step()? {
            steps.push(step);
        }
        Ok(CanonizeTrace {
            steps,
            result: self.word(),
        })
    }

    fn run_quiet(&mut self) -> Result<(), CanonizeError> {
        while self.step()?.is_some() {}
        Ok(())
    }
}

/// Canonical form of `word` together with the full rewrite trace.
///
/// The word is never extended on the right: trailing zeros change the value,
/// so a word that runs out of room reports
/// [`CanonizeError::InsufficientTrailingZeros`]; see [`canonize_padded`].
pub fn canonize(word: &TribDigits) -> Result<(TribDigits, CanonizeTrace), CanonizeError> {
    let trace = Canonizer::new(word).run()?;
    Ok((trace.result.clone(), trace))
}

/// Canonizes `word · 0^k` for the smallest `k` that lets the procedure
/// finish, returning the canonical word and `k`.
///
/// Appending further zeros only appends zeros to the result.
pub fn canonize_padded(word: &TribDigits) -> Result<(TribDigits, usize), CanonizeError> {
    if word.digits().iter().all(|&d| d == 0) {
        return Ok((TribDigits::zero(), 0));
    }
    let mut pad = (3 * word.weight() as usize).max(3);
    loop {
        let mut run = Canonizer::new(&word.with_trailing_zeros(pad));
        match run.run_quiet() {
            Ok(()) => {
                let needed = run.lowest_referenced().map_or(0, |q| pad.saturating_sub(q));
                let full = run.word();
                let surplus = pad - needed;
                let cut = full.len() - surplus;
                debug_assert!(full.digits()[cut..].iter().all(|&d| d == 0));
                let result = TribDigits::new(full.digits()[..cut].to_vec()).trim_leading_zeros();
                return Ok((result, needed));
            }
            Err(CanonizeError::InsufficientTrailingZeros { .. }) if pad < (1 << 24) => pad *= 2,
            Err(e) => return Err(e),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeration::to_canonical;

    fn word(s: &str) -> TribDigits {
        s.parse().unwrap()
    }

    #[test]
    fn carry_example() {
        let (out, trace) = canonize(&word("0111")).unwrap();
        assert_eq!(out.to_string(), "1000");
        assert_eq!(trace.steps.len(), 1);
        assert_eq!(trace.steps[0].rule, CanonizeRule::Carry);
    }

    #[test]
    fn improper_word_without_room_is_rejected() {
        // 1030 needs three digits to the right of its boundary.
        assert_eq!(
            canonize(&word("1030")),
            Err(CanonizeError::InsufficientTrailingZeros {
                position: 1,
                missing: 2
            })
        );
        let (padded, k) = canonize_padded(&word("1030")).unwrap();
        assert_eq!(padded, to_canonical(&word("1030").with_trailing_zeros(k).evaluate()));
    }

    #[test]
    fn boundary_after_zero() {
        let (out, trace) = canonize(&word("2000")).unwrap();
        assert_eq!(out.to_string(), "10001");
        assert_eq!(out, to_canonical(&word("2000").evaluate()));
        assert_eq!(trace.steps[0].rule, CanonizeRule::BoundaryAfterZero);
    }

    #[test]
    fn boundary_after_zero_one() {
        // 01 2 0 0 0 -> 10 0 0 1 1
        let (out, trace) = canonize(&word("12000")).unwrap();
        assert_eq!(trace.steps[0].rule, CanonizeRule::BoundaryAfterZeroOne);
        assert_eq!(out, to_canonical(&word("12000").evaluate()));
    }

    #[test]
    fn padded_examples() {
        assert_eq!(canonize_padded(&word("2")).unwrap(), (word("10001"), 3));
        assert_eq!(canonize_padded(&word("1")).unwrap(), (word("1"), 0));
        assert_eq!(canonize_padded(&word("111")).unwrap(), (word("1000"), 0));
        assert_eq!(canonize_padded(&word("0")).unwrap(), (word("0"), 0));
    }

    #[test]
    fn padded_is_minimal() {
        for s in ["2", "3", "1030", "22", "9", "1203", "40404"] {
            let w = word(s);
            let (result, k) = canonize_padded(&w).unwrap();
            assert_eq!(canonize(&w.with_trailing_zeros(k)).unwrap().0, result, "{s}");
            if k > 0 {
                assert!(canonize(&w.with_trailing_zeros(k - 1)).is_err(), "{s}");
            }
        }
    }
}
