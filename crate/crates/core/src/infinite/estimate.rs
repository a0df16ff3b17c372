use std::collections::HashSet;
use std::fmt::Write;

use super::generator::WordGenerator;
use crate::error::{Error, Result};
use crate::word_core::{period_profile, ExtremalFactor, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CurvePoint {
    pub length: usize,
    pub exponent: Rational,
    pub offset: usize,
}

/// Maximal exponents over the factors of one prefix. `estimate` is the
/// maximum over lengths `>= tail`; it bounds the critical exponent of the
/// infinite word from below but says nothing definite about the limsup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AceEstimate {
    pub prefix_len: usize,
    pub tail: usize,
    /// One point per factor length `tail..=prefix_len`.
    pub curve: Vec<CurvePoint>,
    pub estimate: Rational,
    pub extremal: ExtremalFactor,
}

impl AceEstimate {
    pub fn to_csv(&self) -> String {
        let mut out =
            String::from("factor_length,max_exponent_num,max_exponent_den,witness_offset\n");
        for p in &self.curve {
            writeln!(
                out,
                "{},{},{},{}",
                p.length,
                p.exponent.numer(),
                p.exponent.denom(),
                p.offset
            )
            .expect("writing to a String");
        }
        out
    }
}

pub fn ace_estimate(
    gen: &mut WordGenerator,
    prefix_len: usize,
    tail: usize,
) -> Result<AceEstimate> {
    if tail == 0 || tail > prefix_len {
        return Err(Error::OutOfRange(format!(
            "tail {tail} (must be 1..={prefix_len})"
        )));
    }
    let w = gen.prefix(prefix_len)?;
    let profile = period_profile(w.as_bytes());
    let curve = (tail..=prefix_len)
        .map(|length| CurvePoint {
            length,
            exponent: profile.max_exponent(length),
            offset: profile.offset(length),
        })
        .collect();
    let extremal = ExtremalFactor::from_profile(&w, &profile, tail);
    Ok(AceEstimate {
        prefix_len,
        tail,
        curve,
        estimate: extremal.exponent,
        extremal,
    })
}

/// Number of distinct factors of length `n` in the first `prefix_len`
/// letters.
pub fn factor_complexity(gen: &mut WordGenerator, prefix_len: usize, n: usize) -> Result<usize> {
    if n > prefix_len {
        return Err(Error::OutOfRange(format!(
            "n = {n} (must be <= {prefix_len})"
        )));
    }
    if n == 0 {
        return Ok(1);
    }
    let s = gen.prefix_bytes(prefix_len)?;
    Ok(s.windows(n).collect::<HashSet<_>>().len())
}
