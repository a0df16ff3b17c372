use super::{a_factorization, pump_witness, AFactorization, FeInjVerdict, VerdictTag, Witness};
use crate::error::{Error, Result};
use crate::morphism::{Morphism, MorphismSpace};
use crate::word_core::{prefix_comparable, suffix_comparable, Alphabet, Rational, Word};

/// Bounds for the morphism search in [`classify_general_with`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_image_len: usize,
    pub codomain: Alphabet,
    /// Exponent the witness is pumped to; `2|w|` when unset.
    pub target: Option<Rational>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_image_len: 3,
            codomain: Alphabet::binary(),
            target: None,
        }
    }
}

fn default_target(w: &Word) -> Rational {
    Rational::from_integer(2 * w.len() as i64)
}

fn splits(w: &Word) -> Vec<AFactorization> {
    w.letters_used()
        .iter()
        .filter_map(|a| a_factorization(w, a))
        .collect()
}

fn comparable_under(h: &Morphism, fact: &AFactorization) -> bool {
    let (Ok(h1), Ok(h2), Ok(h3)) = (h.apply(&fact.w1), h.apply(&fact.w2), h.apply(&fact.w3)) else {
        return false;
    };
    suffix_comparable(&h1, &h2) && prefix_comparable(&h2, &h3)
}

fn infinite(
    w: &Word,
    fact: AFactorization,
    base: Morphism,
    target: Rational,
    bound: Option<usize>,
) -> Result<FeInjVerdict> {
    let pumped = pump_witness(w, &fact, &base, target)?;
    Ok(FeInjVerdict {
        tag: VerdictTag::Infinite,
        witness: Some(Witness {
            morphism: pumped.morphism,
            exponent: pumped.exponent,
        }),
        certificate: Some(fact),
        base: Some(base),
        search_bound: bound,
    })
}

/// Exact decision for words over at most two letters: the mapped exponent
/// is unbounded iff `w = b^j1 (a b^j2)^k a b^j3` for one of the two letter
/// choices. Never returns `Unknown`.
pub fn classify_binary(w: &Word) -> Result<FeInjVerdict> {
    if w.is_empty() {
        return Err(Error::EmptyInput);
    }
    let used = w.letters_used();
    if used.len() > 2 {
        return Err(Error::AlphabetMismatch(format!(
            "{w} uses {} letters, expected at most 2",
            used.len()
        )));
    }
    match splits(w).into_iter().next() {
        // powers of a single letter are always comparable
        Some(fact) => infinite(w, fact, Morphism::identity(used), default_target(w), None),
        None => Ok(FeInjVerdict::finite()),
    }
}

/// [`classify_general_with`] using a binary codomain and the given image
/// length bound.
pub fn classify_general(w: &Word, max_image_len: usize) -> Result<FeInjVerdict> {
    classify_general_with(
        w,
        &SearchConfig {
            max_image_len,
            ..SearchConfig::default()
        },
    )
}

/// Three-valued classification over any alphabet.
///
/// Splits are tried in letter order. The identity morphism is checked first
/// for every split; after that each split gets a bounded search over
/// injective morphisms of the remaining letters, and the first hit in
/// enumeration order is pumped into a witness.
pub fn classify_general_with(w: &Word, config: &SearchConfig) -> Result<FeInjVerdict> {
    classify_impl(w, config, |space, fact| {
        space.find_first(|h| comparable_under(h, fact).then_some(()))
    })
}

/// Single-threaded twin of [`classify_general_with`].
pub fn classify_general_sequential(w: &Word, config: &SearchConfig) -> Result<FeInjVerdict> {
    classify_impl(w, config, |space, fact| {
        space.find_first_sequential(|h| comparable_under(h, fact).then_some(()))
    })
}

fn classify_impl<F>(w: &Word, config: &SearchConfig, search: F) -> Result<FeInjVerdict>
where
    F: Fn(&MorphismSpace, &AFactorization) -> Option<(u64, Morphism, ())>,
{
    if w.is_empty() {
        return Err(Error::EmptyInput);
    }
    if config.max_image_len == 0 {
        return Err(Error::OutOfRange("max_image_len 0".into()));
    }
    let target = config.target.unwrap_or_else(|| default_target(w));
    let candidates = splits(w);
    if candidates.is_empty() {
        return Ok(FeInjVerdict::finite());
    }
    let used = w.letters_used();
    let identity = Morphism::identity(used);
    if let Some(fact) = candidates.iter().find(|f| comparable_under(&identity, f)) {
        return infinite(w, fact.clone(), identity, target, None);
    }
    for fact in &candidates {
        let space = MorphismSpace::new(
            used.without(fact.letter),
            config.codomain,
            config.max_image_len,
        )?;
        if let Some((_, base, ())) = search(&space, fact) {
            return infinite(w, fact.clone(), base, target, Some(config.max_image_len));
        }
    }
    Ok(FeInjVerdict::unknown(config.max_image_len))
}
