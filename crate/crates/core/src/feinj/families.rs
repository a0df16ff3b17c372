//! Example families with known mapped exponents, and the exhaustive lower
//! bound search.

use crate::error::{Error, Result};
use crate::morphism::{Morphism, MorphismSpace};
use crate::word_core::{exponent_of, indexed_letter, Alphabet, Rational, Word};

/// A word, a morphism and the exact exponent its image should have.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyInstance {
    pub word: Word,
    pub morphism: Morphism,
    pub expected: Rational,
}

/// `w = (ab)^n ba` with `h_k(a) = (cd)^k c`, `h_k(b) = dc`, whose image
/// has exponent `1 + (4k+4) / ((2k+3)(n-1) + 2)`.
pub fn lowpower_morphism(n: usize, k: usize) -> Result<FamilyInstance> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("n = {n} (must be >= 2)")));
    }
    let word = Word::parse(&format!("{}ba", "ab".repeat(n)))?;
    let mut image_a = b"cd".repeat(k);
    image_a.push(b'c');
    let morphism = Morphism::from_images([(b'a', image_a), (b'b', b"dc".to_vec())])?;
    let (n, k) = (n as i64, k as i64);
    let expected = Rational::from_integer(1) + Rational::new(4 * k + 4, (2 * k + 3) * (n - 1) + 2);
    Ok(FamilyInstance {
        word,
        morphism,
        expected,
    })
}

/// Letters `(a_i, b_i)` for `i >= 1`, taken pairwise from the letter pool.
pub fn letter_pair(i: usize) -> Result<(u8, u8)> {
    assert!(i >= 1);
    match (indexed_letter(2 * i - 2), indexed_letter(2 * i - 1)) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => Err(Error::AlphabetExhausted(format!("letter pair {i}"))),
    }
}

/// `a_i -> c^(i-1) a c^(n-i)`, `b_i -> c^(i-1) b c^(n-i)` into `{a,b,c}`.
pub fn interleaving_morphism(n: usize) -> Result<Morphism> {
    let mut images = Vec::with_capacity(2 * n);
    for i in 1..=n {
        let (ai, bi) = letter_pair(i)?;
        for (letter, core) in [(ai, b'a'), (bi, b'b')] {
            let mut image = vec![b'c'; n];
            image[i - 1] = core;
            images.push((letter, image));
        }
    }
    let domain = Alphabet::from_letters(images.iter().map(|(l, _)| *l))?;
    Morphism::new(domain, Alphabet::parse("abc")?, images)
}

/// `w_n = ∏ a_i a_i b_i a_i b_i b_i` over `2n` letters, with the
/// interleaving morphism and expected exponent `n - n/(6n+1)`.
pub fn highpower_word(n: usize) -> Result<FamilyInstance> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("n = {n} (must be >= 2)")));
    }
    let mut letters = Vec::with_capacity(6 * n);
    for i in 1..=n {
        let (a, b) = letter_pair(i)?;
        letters.extend_from_slice(&[a, a, b, a, b, b]);
    }
    let n = n as i64;
    Ok(FamilyInstance {
        word: Word::from_letters(letters)?,
        morphism: interleaving_morphism(n as usize)?,
        expected: Rational::from_integer(n) - Rational::new(n, 6 * n + 1),
    })
}

/// Best exponent found by exhaustive search, and the first morphism (in
/// enumeration order) attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerBound {
    pub exponent: Rational,
    pub morphism: Morphism,
    pub index: u64,
}

fn lower_bound_space(
    w: &Word,
    max_image_len: usize,
    codomain_size: usize,
) -> Result<MorphismSpace> {
    if w.is_empty() {
        return Err(Error::EmptyInput);
    }
    MorphismSpace::new(
        w.letters_used(),
        Alphabet::numbered(codomain_size)?,
        max_image_len,
    )
}

fn image_exponent(h: &Morphism, w: &Word) -> Rational {
    let mut out = Vec::new();
    h.apply_bytes(w.as_bytes(), &mut out)
        .expect("domain is alph(w)");
    exponent_of(&out)
}

fn no_morphism() -> Error {
    Error::Constraint("no injective morphism within the bounds".into())
}

/// Exact maximum of `E(h(w))` over injective `h` into a `codomain_size`
/// letter alphabet with images of at most `max_image_len` letters.
pub fn fe_inj_lower_bound(
    w: &Word,
    max_image_len: usize,
    codomain_size: usize,
) -> Result<LowerBound> {
    let space = lower_bound_space(w, max_image_len, codomain_size)?;
    let (index, morphism, exponent) = space
        .max_by_key(|h| image_exponent(h, w))
        .ok_or_else(no_morphism)?;
    Ok(LowerBound {
        exponent,
        morphism,
        index,
    })
}

/// Single-threaded twin of [`fe_inj_lower_bound`].
pub fn fe_inj_lower_bound_sequential(
    w: &Word,
    max_image_len: usize,
    codomain_size: usize,
) -> Result<LowerBound> {
    let space = lower_bound_space(w, max_image_len, codomain_size)?;
    let (index, morphism, exponent) = space
        .max_by_key_sequential(|h| image_exponent(h, w))
        .ok_or_else(no_morphism)?;
    Ok(LowerBound {
        exponent,
        morphism,
        index,
    })
}
