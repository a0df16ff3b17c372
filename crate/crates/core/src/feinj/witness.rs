//! Turning a comparability certificate into a morphism of large exponent.
//!
//! With `p`, `s` such that `h(w1)` is a suffix of `p h(w2)` and `h(w3)` a
//! prefix of `h(w2) s`, sending `a` to `s c p` for a fresh letter `c` gives
//! `h'(w) = (h(w1) s c t)^r` where `p h(w2) = t h(w1)`. The period holds a
//! single `c`, and replacing `c` by `c (t h(w1) s c)^(n-1)` adds `n - 1`
//! periods per occurrence of `a`.

use super::AFactorization;
use crate::error::{Error, Result};
use crate::morphism::Morphism;
use crate::word_core::{exponent_of, prefix_comparable, suffix_comparable, Rational, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PumpedWitness {
    pub morphism: Morphism,
    /// Exact exponent of the image of the word.
    pub exponent: Rational,
    pub fresh_letter: u8,
    /// Number of period copies substituted for the fresh letter.
    pub pump: usize,
}

fn image(h: &Morphism, w: &Word) -> Result<Vec<u8>> {
    let mut out = Vec::new();
    h.apply_bytes(w.as_bytes(), &mut out)?;
    Ok(out)
}

/// Builds an injective morphism `h` with `E(h(w)) >= target` from a split of
/// `w` and a base morphism satisfying both comparabilities on it.
pub fn pump_witness(
    w: &Word,
    fact: &AFactorization,
    base: &Morphism,
    target: Rational,
) -> Result<PumpedWitness> {
    if target < Rational::from_integer(1) {
        return Err(Error::OutOfRange(format!("target {target} (must be >= 1)")));
    }
    if &fact.reassemble() != w {
        return Err(Error::Constraint(format!(
            "{fact} does not reassemble to {w}"
        )));
    }
    let a = fact.letter;
    let others = w.letters_used().without(a);
    let restricted = Morphism::new(
        others,
        base.codomain(),
        others
            .iter()
            .map(|b| {
                base.image(b)
                    .map(|img| (b, img.to_vec()))
                    .ok_or(Error::OutsideDomain(b as char))
            })
            .collect::<Result<Vec<_>>>()?,
    )?;
    if !others.is_empty() && !restricted.is_injective()? {
        return Err(Error::Constraint(
            "base morphism is not injective away from the split letter".into(),
        ));
    }

    let h1 = restricted.apply(&fact.w1)?;
    let h2 = restricted.apply(&fact.w2)?;
    let h3 = restricted.apply(&fact.w3)?;
    if !suffix_comparable(&h1, &h2) {
        return Err(Error::Constraint(format!(
            "h(w1)={h1} and h(w2)={h2} are not suffix comparable"
        )));
    }
    if !prefix_comparable(&h2, &h3) {
        return Err(Error::Constraint(format!(
            "h(w2)={h2} and h(w3)={h3} are not prefix comparable"
        )));
    }
    let (h1, h2, h3) = (h1.as_bytes(), h2.as_bytes(), h3.as_bytes());

    let c = base
        .codomain()
        .fresh_letter()
        .ok_or_else(|| Error::AlphabetExhausted("the marker letter".into()))?;
    let p: &[u8] = if h1.len() > h2.len() {
        &h1[..h1.len() - h2.len()]
    } else {
        &[]
    };
    let s: &[u8] = if h3.len() > h2.len() {
        &h3[h2.len()..]
    } else {
        &[]
    };
    let p_h2: Vec<u8> = [p, h2].concat();
    let t = &p_h2[..p_h2.len() - h1.len()];
    // the period of h'(w), carrying the only occurrence of c
    let period: Vec<u8> = [h1, s, &[c], t].concat();
    let cycle: Vec<u8> = [t, h1, s, &[c]].concat();

    let unpumped_len =
        h1.len() + (fact.k + 1) * (s.len() + 1 + p.len()) + fact.k * h2.len() + h3.len();
    let x = period.len() as i64;
    let occurrences = (fact.k + 1) as i64;
    let deficit = *target.numer() * x - *target.denom() * unpumped_len as i64;
    let per_copy = *target.denom() * occurrences * x;
    let mut pump = 1 + if deficit > 0 {
        ((deficit + per_copy - 1) / per_copy) as usize
    } else {
        0
    };

    let codomain = base.codomain().with(c);
    loop {
        let mut image_a = Vec::with_capacity(s.len() + p.len() + 1 + (pump - 1) * cycle.len());
        image_a.extend_from_slice(s);
        image_a.push(c);
        for _ in 1..pump {
            image_a.extend_from_slice(&cycle);
        }
        image_a.extend_from_slice(p);
        let images = restricted
            .iter()
            .map(|(b, img)| (b, img.to_vec()))
            .chain(std::iter::once((a, image_a)));
        let morphism = Morphism::new(others.with(a), codomain, images.collect::<Vec<_>>())?;
        let exponent = exponent_of(&image(&morphism, w)?);
        if exponent >= target {
            return Ok(PumpedWitness {
                morphism,
                exponent,
                fresh_letter: c,
                pump,
            });
        }
        // unreachable when the comparabilities hold; kept as a guard
        pump += 1;
    }
}

/// Composes a witness with the binary embedding of its codomain. The
/// exponent of the image can only grow.
pub fn reembed_binary(witness: &PumpedWitness, w: &Word) -> Result<PumpedWitness> {
    let embedding = Morphism::binary_embedding(witness.morphism.codomain());
    let morphism = embedding.compose(&witness.morphism)?;
    let exponent = exponent_of(&image(&morphism, w)?);
    Ok(PumpedWitness {
        morphism,
        exponent,
        ..witness.clone()
    })
}
