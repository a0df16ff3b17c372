//! Per-length minimal periods over all factors of a word.
//!
//! For every start position the border array of the suffix starting there is
//! grown one letter at a time, which yields the smallest period of every
//! factor beginning at that position. Total cost is quadratic in the word
//! length. Start positions are independent, so the parallel engine splits
//! them across rayon workers and merges the per-length minima.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use super::{ratio, Rational, Word};
use crate::error::{Error, Result};

/// `min_period[len]` is the smallest period among factors of length `len`;
/// `offset[len]` is the leftmost start of such a factor. Index 0 is unused.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodProfile {
    min_period: Vec<usize>,
    offset: Vec<usize>,
}

impl PeriodProfile {
    fn empty(n: usize) -> Self {
        PeriodProfile {
            min_period: vec![usize::MAX; n + 1],
            offset: vec![usize::MAX; n + 1],
        }
    }

    /// Length of the profiled word.
    pub fn word_len(&self) -> usize {
        self.min_period.len() - 1
    }

    pub fn min_period(&self, len: usize) -> usize {
        self.min_period[len]
    }

    pub fn offset(&self, len: usize) -> usize {
        self.offset[len]
    }

    /// Largest exponent among factors of length `len`.
    pub fn max_exponent(&self, len: usize) -> Rational {
        ratio(len, self.min_period[len])
    }

    fn record(&mut self, len: usize, period: usize, start: usize) {
        let (p, o) = (&mut self.min_period[len], &mut self.offset[len]);
        if period < *p || (period == *p && start < *o) {
            *p = period;
            *o = start;
        }
    }

    #[cfg(feature = "parallel")]
    fn merge(mut self, other: PeriodProfile) -> PeriodProfile {
        for len in 1..self.min_period.len() {
            self.record(len, other.min_period[len], other.offset[len]);
        }
        self
    }

    fn scan_start(&mut self, s: &[u8], start: usize, border: &mut Vec<usize>) {
        let suffix = &s[start..];
        border.clear();
        border.push(0);
        self.record(1, 1, start);
        for i in 1..suffix.len() {
            let mut b = border[i - 1];
            while b > 0 && suffix[i] != suffix[b] {
                b = border[b - 1];
            }
            if suffix[i] == suffix[b] {
                b += 1;
            }
            border.push(b);
            self.record(i + 1, i + 1 - b, start);
        }
    }
}

/// Single-threaded engine.
pub fn period_profile_sequential(s: &[u8]) -> PeriodProfile {
    let mut profile = PeriodProfile::empty(s.len());
    let mut border = Vec::with_capacity(s.len());
    for start in 0..s.len() {
        profile.scan_start(s, start, &mut border);
    }
    profile
}

/// Rayon engine; output is identical to [`period_profile_sequential`].
#[cfg(feature = "parallel")]
pub fn period_profile_parallel(s: &[u8]) -> PeriodProfile {
    let n = s.len();
    (0..n)
        .into_par_iter()
        .fold(
            || (PeriodProfile::empty(n), Vec::new()),
            |(mut profile, mut border), start| {
                profile.scan_start(s, start, &mut border);
                (profile, border)
            },
        )
        .map(|(profile, _)| profile)
        .reduce(|| PeriodProfile::empty(n), PeriodProfile::merge)
}

/// Parallel when the `parallel` feature is on, sequential otherwise.
pub fn period_profile(s: &[u8]) -> PeriodProfile {
    #[cfg(feature = "parallel")]
    {
        period_profile_parallel(s)
    }
    #[cfg(not(feature = "parallel"))]
    {
        period_profile_sequential(s)
    }
}

/// A factor with maximal exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalFactor {
    pub offset: usize,
    pub factor: Word,
    pub exponent: Rational,
}

impl ExtremalFactor {
    /// Picks the maximal exponent over lengths `min_len..=|w|`; ties go to
    /// the shorter factor, then to the leftmost one.
    pub(crate) fn from_profile(w: &Word, profile: &PeriodProfile, min_len: usize) -> Self {
        let mut best_len = min_len;
        let mut best = profile.max_exponent(min_len);
        for len in min_len + 1..=w.len() {
            let e = profile.max_exponent(len);
            if e > best {
                best = e;
                best_len = len;
            }
        }
        let offset = profile.offset(best_len);
        ExtremalFactor {
            offset,
            factor: w.factor(offset..offset + best_len),
            exponent: best,
        }
    }
}

/// Factor of length at least `min_len` with the largest fractional exponent
/// (shortest, then leftmost, among ties).
pub fn max_exponent_factor(w: &Word, min_len: usize) -> Result<ExtremalFactor> {
    if w.is_empty() {
        return Err(Error::EmptyInput);
    }
    if min_len == 0 || min_len > w.len() {
        return Err(Error::OutOfRange(format!(
            "min_len {min_len} (must be 1..={})",
            w.len()
        )));
    }
    let profile = period_profile(w.as_bytes());
    Ok(ExtremalFactor::from_profile(w, &profile, min_len))
}
