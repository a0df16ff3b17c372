use super::CodeSet;
use crate::error::{Error, Result};
use crate::word_core::Word;

/// `4 (|w| + max_len(X))`.
pub fn default_probe_len(w: &Word, x: &CodeSet) -> usize {
    4 * (w.len() + x.max_len())
}

/// Looks for a split `t` with `w = w1 w2`, `|w1| = t`, such that every
/// `v = p w s` in X* with `|v| <= probe_len` has `p w1` and `w2 s` in X*.
/// Returns the smallest such `t`.
///
/// Because X is a code, each `v` has one factorisation, so it is enough to
/// look at the shortest runs of code words covering an occurrence of `w`.
pub fn is_synchronizing(w: &Word, x: &CodeSet, probe_len: usize) -> Result<Option<usize>> {
    if w.is_empty() {
        return Err(Error::EmptyInput);
    }
    if !x.is_code()? {
        return Err(Error::NotACode(x.to_string()));
    }
    let s = w.as_bytes();
    let mut common: Vec<bool> = vec![true; s.len() + 1];
    for first in x.words() {
        let f = first.as_bytes();
        for offset in 0..f.len() {
            let overlap = (f.len() - offset).min(s.len());
            if f.len() > probe_len || f[offset..offset + overlap] != s[..overlap] {
                continue;
            }
            let mut marks = vec![false; s.len() + 1];
            if offset == 0 {
                marks[0] = true;
            }
            cover(
                s,
                x,
                f.len() - offset,
                f.len(),
                probe_len,
                &mut marks,
                &mut common,
            );
        }
    }
    Ok(common.iter().position(|&b| b))
}

/// `pos` is where the next code word starts relative to `w` and `used` the
/// window length so far.
fn cover(
    s: &[u8],
    x: &CodeSet,
    pos: usize,
    used: usize,
    probe_len: usize,
    marks: &mut Vec<bool>,
    common: &mut [bool],
) {
    if pos >= s.len() {
        if pos == s.len() {
            marks[pos] = true;
        }
        for (c, m) in common.iter_mut().zip(marks.iter()) {
            *c &= *m;
        }
        if pos == s.len() {
            marks[pos] = false;
        }
        return;
    }
    marks[pos] = true;
    for word in x.words() {
        let c = word.as_bytes();
        let overlap = c.len().min(s.len() - pos);
        if used + c.len() <= probe_len && c[..overlap] == s[pos..pos + overlap] {
            cover(
                s,
                x,
                pos + c.len(),
                used + c.len(),
                probe_len,
                marks,
                common,
            );
        }
    }
    marks[pos] = false;
}
