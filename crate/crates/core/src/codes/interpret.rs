use std::fmt;

use super::CodeSet;
use crate::error::{Error, Result};
use crate::word_core::Word;

/// A parse `w = w_1 ... w_n` with `w_1` a suffix of an element of X, `w_n`
/// a prefix of one and every other piece in X. Pieces are nonempty, so the
/// interpretation is determined by its internal cut positions.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Interpretation {
    pub cuts: Vec<usize>,
    pub pieces: Vec<Word>,
}

impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.pieces.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(") cuts=[")?;
        for (i, c) in self.cuts.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

/// `tail[i]`: `w[i..]` can be written as zero or more elements of X
/// followed by a nonempty prefix piece.
fn completable_tails(s: &[u8], x: &CodeSet) -> Vec<bool> {
    let n = s.len();
    let mut tail = vec![false; n + 1];
    for i in (0..n).rev() {
        tail[i] = x.is_prefix_piece(&s[i..])
            || x.words().iter().any(|c| {
                let end = i + c.len();
                end < n && tail[end] && &s[i..end] == c.as_bytes()
            });
    }
    tail
}

fn interpretation_cuts(w: &Word, x: &CodeSet) -> Result<Vec<Vec<usize>>> {
    if w.is_empty() {
        return Err(Error::EmptyInput);
    }
    let s = w.as_bytes();
    let n = s.len();
    let tail = completable_tails(s, x);
    let mut out = Vec::new();
    if x.is_suffix_piece(s) && x.is_prefix_piece(s) {
        out.push(Vec::new());
    }
    let mut cuts = Vec::new();
    for first in 1..n {
        if x.is_suffix_piece(&s[..first]) && tail[first] {
            cuts.push(first);
            extend(s, x, &tail, &mut cuts, &mut out);
            cuts.pop();
        }
    }
    Ok(out)
}

fn extend(s: &[u8], x: &CodeSet, tail: &[bool], cuts: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let pos = *cuts.last().expect("at least one cut");
    if x.is_prefix_piece(&s[pos..]) {
        out.push(cuts.clone());
    }
    let mut next: Vec<usize> = x
        .words()
        .iter()
        .map(|c| pos + c.len())
        .filter(|&end| end < s.len() && tail[end])
        .filter(|&end| x.contains(&s[pos..end]))
        .collect();
    next.sort_unstable();
    next.dedup();
    for end in next {
        cuts.push(end);
        extend(s, x, tail, cuts, out);
        cuts.pop();
    }
}

fn pieces_of(w: &Word, cuts: &[usize]) -> Vec<Word> {
    let mut bounds = Vec::with_capacity(cuts.len() + 2);
    bounds.push(0);
    bounds.extend_from_slice(cuts);
    bounds.push(w.len());
    bounds.windows(2).map(|b| w.factor(b[0]..b[1])).collect()
}

/// Every X-interpretation of `w`, ordered lexicographically by cut
/// sequence (the single-piece interpretation, if any, first).
pub fn x_interpretations(w: &Word, x: &CodeSet) -> Result<Vec<Interpretation>> {
    let mut all = interpretation_cuts(w, x)?;
    all.sort();
    Ok(all
        .into_iter()
        .map(|cuts| Interpretation {
            pieces: pieces_of(w, &cuts),
            cuts,
        })
        .collect())
}

/// Maximal number of pairwise disjoint X-interpretations, where two
/// interpretations are linked when they share an internal cut.
///
/// Exact branch and bound over the interpretations; intended for short
/// words and small codes.
pub fn x_degree(w: &Word, x: &CodeSet) -> Result<usize> {
    let cut_sets = interpretation_cuts(w, x)?;
    let words = w.len().div_ceil(64).max(1);
    let mut masks: Vec<Vec<u64>> = cut_sets
        .iter()
        .map(|cuts| {
            let mut mask = vec![0u64; words];
            for &c in cuts {
                mask[c / 64] |= 1 << (c % 64);
            }
            mask
        })
        .collect();
    // fewer cuts first: those conflict least and tighten the bound early
    masks.sort_by_key(|m| m.iter().map(|b| b.count_ones()).sum::<u32>());
    let mut used = vec![0u64; words];
    let mut best = 0;
    pack(&masks, 0, &mut used, 0, &mut best);
    Ok(best)
}

fn pack(masks: &[Vec<u64>], from: usize, used: &mut [u64], chosen: usize, best: &mut usize) {
    if chosen > *best {
        *best = chosen;
    }
    if chosen + (masks.len() - from) <= *best {
        return;
    }
    for i in from..masks.len() {
        if chosen + (masks.len() - i) <= *best {
            return;
        }
        let m = &masks[i];
        if m.iter().zip(used.iter()).any(|(a, b)| a & b != 0) {
            continue;
        }
        for (u, b) in used.iter_mut().zip(m) {
            *u |= b;
        }
        pack(masks, i + 1, used, chosen + 1, best);
        for (u, b) in used.iter_mut().zip(m) {
            *u &= !b;
        }
    }
}

/// Number of ways to write `w` as a concatenation of elements of X.
/// Saturates at `u128::MAX`.
pub fn x_factorization_count(w: &Word, x: &CodeSet) -> Result<u128> {
    if w.is_empty() {
        return Err(Error::EmptyInput);
    }
    let s = w.as_bytes();
    let mut ways = vec![0u128; s.len() + 1];
    ways[0] = 1;
    for i in 0..s.len() {
        if ways[i] == 0 {
            continue;
        }
        for c in x.words() {
            let end = i + c.len();
            if end <= s.len() && &s[i..end] == c.as_bytes() {
                ways[end] = ways[end].saturating_add(ways[i]);
            }
        }
    }
    Ok(ways[s.len()])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn x(s: &str) -> CodeSet {
        CodeSet::parse(s).unwrap()
    }

    /// Every subset of internal cut positions, filtered by the definition.
    fn brute_interpretations(word: &str, code: &CodeSet) -> Vec<Vec<usize>> {
        let n = word.len();
        let s = word.as_bytes();
        let mut out = Vec::new();
        for mask in 0u32..1 << (n - 1) {
            let cuts: Vec<usize> = (1..n).filter(|c| mask >> (c - 1) & 1 == 1).collect();
            let mut bounds = vec![0];
            bounds.extend(&cuts);
            bounds.push(n);
            let pieces: Vec<&[u8]> = bounds.windows(2).map(|b| &s[b[0]..b[1]]).collect();
            let last = pieces.len() - 1;
            let ok = pieces.iter().enumerate().all(|(i, p)| {
                let first_ok = i != 0 || code.words().iter().any(|c| c.as_bytes().ends_with(p));
                let last_ok = i != last || code.words().iter().any(|c| c.as_bytes().starts_with(p));
                let mid_ok = i == 0 || i == last || code.contains(p);
                first_ok && last_ok && mid_ok
            });
            if ok {
                out.push(cuts);
            }
        }
        out.sort();
        out
    }

    fn cuts_of(word: &str, code: &CodeSet) -> Vec<Vec<usize>> {
        x_interpretations(&w(word), code)
            .unwrap()
            .into_iter()
            .map(|i| i.cuts)
            .collect()
    }

    #[test]
    fn interpretation_examples() {
        let code = x("ab");
        // "a" is not a suffix of ab, so (a, b) does not qualify
        assert_eq!(
            brute_interpretations("ab", &code),
            vec![Vec::<usize>::new()]
        );
        assert_eq!(cuts_of("ab", &code), vec![Vec::<usize>::new()]);
        let single = &x_interpretations(&w("ab"), &code).unwrap()[0];
        assert_eq!(single.to_string(), "(ab) cuts=[]");

        let code = x("aa");
        assert_eq!(brute_interpretations("a", &code), vec![Vec::<usize>::new()]);
        assert_eq!(cuts_of("a", &code), vec![Vec::<usize>::new()]);
        assert_eq!(x_interpretations(&w(""), &code), Err(Error::EmptyInput));
    }

    #[test]
    fn interpretations_match_brute_force() {
        for code in ["ab,ba", "a,ab,bb", "aab,ab", "abb,bab,b", "ab"] {
            let code = x(code);
            for word in ["abba", "ababab", "babbab", "aabab", "b", "bbabbabb", "abab"] {
                assert_eq!(
                    cuts_of(word, &code),
                    brute_interpretations(word, &code),
                    "{word} / {code}"
                );
            }
        }
    }

    #[test]
    fn degree_examples() {
        assert_eq!(x_degree(&w("aa"), &x("a")).unwrap(), 1);
        assert_eq!(x_degree(&w("cc"), &x("ab")).unwrap(), 0);
        assert_eq!(x_degree(&w("ab"), &x("ab")).unwrap(), 1);
        // abab over {ab, ba}: phases a|ba|b and ab|ab are disjoint
        assert_eq!(x_degree(&w("abab"), &x("ab,ba")).unwrap(), 2);
    }

    #[test]
    fn factorization_counts() {
        assert_eq!(x_factorization_count(&w("abab"), &x("ab")).unwrap(), 1);
        let fib = |n: usize| (0..n).fold((1u128, 1u128), |(a, b), _| (b, a + b)).0;
        assert_eq!(fib(4), 5);
        assert_eq!(x_factorization_count(&w("aaaa"), &x("a,aa")).unwrap(), 5);
        assert_eq!(x_factorization_count(&w("abba"), &x("ab")).unwrap(), 0);
    }
}
