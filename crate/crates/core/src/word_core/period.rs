use num_integer::Integer;

use super::{ratio, Rational, Word};
use crate::error::{Error, Result};

/// A word written as `base^exponent` with a primitive base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionalPower {
    pub base: Word,
    pub exponent: Rational,
}

impl FractionalPower {
    /// The represented word: the prefix of `base^ω` of length
    /// `exponent * |base|`.
    pub fn expand(&self) -> Word {
        let len = self.exponent * Rational::from_integer(self.base.len() as i64);
        debug_assert!(len.is_integer());
        self.base.power_prefix(len.to_integer() as usize)
    }
}

/// Failure function: `border[i]` is the length of the longest proper border
/// of `s[..=i]`.
pub(crate) fn border_array(s: &[u8]) -> Vec<usize> {
    let mut border = vec![0; s.len()];
    for i in 1..s.len() {
        let mut b = border[i - 1];
        while b > 0 && s[i] != s[b] {
            b = border[b - 1];
        }
        if s[i] == s[b] {
            b += 1;
        }
        border[i] = b;
    }
    border
}

/// Smallest period of a nonempty byte string.
pub fn period_of(s: &[u8]) -> usize {
    debug_assert!(!s.is_empty());
    s.len() - border_array(s).last().copied().unwrap_or(0)
}

/// `|s| / period(s)` for a nonempty byte string.
pub fn exponent_of(s: &[u8]) -> Rational {
    ratio(s.len(), period_of(s))
}

fn nonempty(w: &Word) -> Result<()> {
    if w.is_empty() {
        Err(Error::EmptyInput)
    } else {
        Ok(())
    }
}

/// Least `p ≥ 1` with `w[i] = w[i + p]` wherever both sides exist.
pub fn smallest_period(w: &Word) -> Result<usize> {
    nonempty(w)?;
    Ok(period_of(w.as_bytes()))
}

/// `w = x^r` with `x` primitive and `r` maximal.
pub fn fractional_exponent(w: &Word) -> Result<FractionalPower> {
    let period = smallest_period(w)?;
    Ok(FractionalPower {
        base: w.prefix(period),
        exponent: ratio(w.len(), period),
    })
}

/// `(n, root)` with `w = root^n`, `root` primitive.
pub fn integer_exponent(w: &Word) -> Result<(usize, Word)> {
    let period = smallest_period(w)?;
    let root_len = if w.len().is_multiple_of(period) {
        period
    } else {
        w.len()
    };
    Ok((w.len() / root_len, w.prefix(root_len)))
}

pub fn is_primitive(w: &Word) -> Result<bool> {
    Ok(integer_exponent(w)?.0 == 1)
}

/// Equal length and `v` occurs in `uu`.
pub fn is_conjugate(u: &Word, v: &Word) -> Result<bool> {
    nonempty(u)?;
    nonempty(v)?;
    if u.len() != v.len() {
        return Ok(false);
    }
    Ok(u.concat(u).find(v, 0).is_some())
}

/// One of `u`, `v` is a prefix of the other.
pub fn prefix_comparable(u: &Word, v: &Word) -> bool {
    u.starts_with(v) || v.starts_with(u)
}

/// One of `u`, `v` is a suffix of the other.
pub fn suffix_comparable(u: &Word, v: &Word) -> bool {
    u.ends_with(v) || v.ends_with(u)
}

/// The common primitive root of `u` and `v` when `u^ω` and `v^ω` agree on
/// their first `|u| + |v| - gcd(|u|, |v|)` letters.
pub fn fine_wilf_root(u: &Word, v: &Word) -> Result<Option<Word>> {
    nonempty(u)?;
    nonempty(v)?;
    let bound = u.len() + v.len() - u.len().gcd(&v.len());
    let (a, b) = (u.as_bytes(), v.as_bytes());
    let agree = (0..bound).all(|i| a[i % a.len()] == b[i % b.len()]);
    if !agree {
        return Ok(None);
    }
    let (_, root) = integer_exponent(u)?;
    Ok(Some(root))
}
