//! Words whose images under injective morphisms reach unbounded fractional
//! exponent.
//!
//! A word `w` can be pushed to arbitrarily high exponent exactly when some
//! letter `a` splits it as `w1 (a w2)^k a w3` with `a` absent from the
//! `w_i`, and some injective `h` makes `h(w1), h(w2)` suffix comparable and
//! `h(w2), h(w3)` prefix comparable. Over two letters the comparabilities
//! always hold, so the split alone decides. Over larger alphabets the
//! morphism search is bounded and the verdict may be `Unknown`.

mod classify;
mod families;
mod witness;

use std::fmt;

pub use classify::{
    classify_binary, classify_general, classify_general_sequential, classify_general_with,
    SearchConfig,
};
pub use families::{
    fe_inj_lower_bound, fe_inj_lower_bound_sequential, highpower_word, interleaving_morphism,
    letter_pair, lowpower_morphism, FamilyInstance, LowerBound,
};
pub use witness::{pump_witness, reembed_binary, PumpedWitness};

use crate::morphism::Morphism;
use crate::word_core::{Rational, Word};

/// `w = w1 (a w2)^k a w3` with `a` absent from `w1`, `w2`, `w3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AFactorization {
    pub letter: u8,
    pub w1: Word,
    pub w2: Word,
    pub w3: Word,
    pub k: usize,
}

impl AFactorization {
    pub fn reassemble(&self) -> Word {
        let a = Word::from_raw(vec![self.letter], self.w1.alphabet().with(self.letter));
        let block = a.concat(&self.w2);
        self.w1
            .concat(&block.repeat(self.k))
            .concat(&a)
            .concat(&self.w3)
    }
}

impl fmt::Display for AFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "letter={} w1={} w2={} w3={} k={}",
            self.letter as char, self.w1, self.w2, self.w3, self.k
        )
    }
}

/// The split of `w` around `a` if every gap between consecutive occurrences
/// of `a` is the same word. With a single occurrence, `k = 0` and
/// `w2 = ε`. `None` when `a` does not occur or gaps differ.
pub fn a_factorization(w: &Word, a: u8) -> Option<AFactorization> {
    let s = w.as_bytes();
    let positions: Vec<usize> = (0..s.len()).filter(|&i| s[i] == a).collect();
    let (&first, &last) = (positions.first()?, positions.last()?);
    let gap = |i: usize| &s[positions[i] + 1..positions[i + 1]];
    let w2: &[u8] = if positions.len() > 1 { gap(0) } else { &[] };
    if (1..positions.len().saturating_sub(1)).any(|i| gap(i) != w2) {
        return None;
    }
    let alphabet = w.alphabet();
    Some(AFactorization {
        letter: a,
        w1: Word::from_raw(s[..first].to_vec(), alphabet),
        w2: Word::from_raw(w2.to_vec(), alphabet),
        w3: Word::from_raw(s[last + 1..].to_vec(), alphabet),
        k: positions.len() - 1,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VerdictTag {
    Infinite,
    Finite,
    Unknown,
}

impl fmt::Display for VerdictTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerdictTag::Infinite => "Infinite",
            VerdictTag::Finite => "Finite",
            VerdictTag::Unknown => "Unknown",
        })
    }
}

/// An injective morphism together with the exact exponent of the image it
/// produces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub morphism: Morphism,
    pub exponent: Rational,
}

/// Classification of a word by its mapped exponent.
///
/// * `Infinite`: `witness` holds a pumped injective morphism and
///   `certificate` the split it was built from.
/// * `Finite`: no letter admits a split, so the mapped exponent is at most
///   `|w|`.
/// * `Unknown`: splits exist but no morphism with images up to
///   `search_bound` letters satisfied the comparabilities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeInjVerdict {
    pub tag: VerdictTag,
    pub witness: Option<Witness>,
    pub certificate: Option<AFactorization>,
    /// Morphism used before pumping; identity for the cheap certificate.
    pub base: Option<Morphism>,
    pub search_bound: Option<usize>,
}

impl FeInjVerdict {
    pub(crate) fn finite() -> Self {
        FeInjVerdict {
            tag: VerdictTag::Finite,
            witness: None,
            certificate: None,
            base: None,
            search_bound: None,
        }
    }

    pub(crate) fn unknown(bound: usize) -> Self {
        FeInjVerdict {
            tag: VerdictTag::Unknown,
            witness: None,
            certificate: None,
            base: None,
            search_bound: Some(bound),
        }
    }
}
