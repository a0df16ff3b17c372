//! Morphisms between free monoids: application, composition, an exact
//! injectivity test and bounded enumeration of injective morphisms.

mod enumerate;
mod injectivity;

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

pub use enumerate::{enumerate_injective, InjectiveMorphisms, MorphismSpace};
pub use injectivity::Injectivity;

use crate::error::{Error, Result};
use crate::word_core::{Alphabet, Word};

const NO_SLOT: u8 = u8::MAX;

/// A map from domain letters to words over the codomain, extended to all
/// words by concatenation.
///
/// The injectivity verdict is computed on first request and cached.
#[derive(Clone)]
pub struct Morphism {
    domain: Alphabet,
    codomain: Alphabet,
    /// Images in ascending domain-letter order.
    images: Vec<Vec<u8>>,
    slots: [u8; 128],
    injectivity: OnceLock<Injectivity>,
}

impl Morphism {
    /// Builds a morphism from `(letter, image)` pairs. Every domain letter
    /// needs exactly one image and every image letter must lie in
    /// `codomain`.
    pub fn new<I>(domain: Alphabet, codomain: Alphabet, images: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u8, Vec<u8>)>,
    {
        let mut by_letter: Vec<Option<Vec<u8>>> = vec![None; 128];
        for (letter, image) in images {
            if !domain.contains(letter) {
                return Err(Error::OutsideDomain(letter as char));
            }
            if let Some(&bad) = image.iter().find(|&&b| !codomain.contains(b)) {
                return Err(Error::LetterOutsideAlphabet(bad as char));
            }
            if by_letter[letter as usize].replace(image).is_some() {
                return Err(Error::AlphabetMismatch(format!(
                    "letter {:?} has two images",
                    letter as char
                )));
            }
        }
        let mut slots = [NO_SLOT; 128];
        let mut ordered = Vec::with_capacity(domain.len());
        for letter in domain.iter() {
            let image = by_letter[letter as usize].take().ok_or_else(|| {
                Error::AlphabetMismatch(format!("letter {:?} has no image", letter as char))
            })?;
            slots[letter as usize] = ordered.len() as u8;
            ordered.push(image);
        }
        Ok(Morphism {
            domain,
            codomain,
            images: ordered,
            slots,
            injectivity: OnceLock::new(),
        })
    }

    /// Builds a morphism whose codomain is the set of letters used by the
    /// images.
    pub fn from_images<I>(images: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u8, Vec<u8>)>,
    {
        let pairs: Vec<(u8, Vec<u8>)> = images.into_iter().collect();
        let domain = Alphabet::from_letters(pairs.iter().map(|(l, _)| *l))?;
        let codomain =
            Alphabet::from_letters(pairs.iter().flat_map(|(_, img)| img.iter().copied()))?;
        Morphism::new(domain, codomain, pairs)
    }

    /// Parses `a=cdc,b=dc`. The codomain is inferred from the images.
    pub fn parse(text: &str) -> Result<Self> {
        let err = |position: usize, reason: &str| Error::Parse {
            what: "morphism",
            position,
            reason: reason.to_string(),
        };
        if text.is_empty() {
            return Err(err(0, "empty morphism"));
        }
        let bytes = text.as_bytes();
        let mut pairs = Vec::new();
        let mut seen = Alphabet::EMPTY;
        let mut pos = 0;
        loop {
            let letter = *bytes
                .get(pos)
                .ok_or_else(|| err(pos, "expected a letter"))?;
            if !Alphabet::is_valid_letter(letter) {
                return Err(err(pos, "expected a letter"));
            }
            if seen.contains(letter) {
                return Err(err(pos, "letter defined twice"));
            }
            seen.insert(letter);
            if bytes.get(pos + 1) != Some(&b'=') {
                return Err(err(pos + 1, "expected '='"));
            }
            pos += 2;
            let start = pos;
            while pos < bytes.len() && bytes[pos] != b',' {
                if !Alphabet::is_valid_letter(bytes[pos]) {
                    return Err(err(pos, "image letters must be ASCII letters or digits"));
                }
                pos += 1;
            }
            pairs.push((letter, bytes[start..pos].to_vec()));
            if pos == bytes.len() {
                break;
            }
            pos += 1;
        }
        Morphism::from_images(pairs)
    }

    pub fn identity(alphabet: Alphabet) -> Self {
        Morphism::new(alphabet, alphabet, alphabet.iter().map(|b| (b, vec![b])))
            .expect("identity is well formed")
    }

    /// `c_i -> 0^(n+1-i) 1^i` where `c_1 < ... < c_n` are the letters of
    /// `alphabet` in ascending order. A prefix-free, hence injective, map
    /// into `{0,1}`.
    pub fn binary_embedding(alphabet: Alphabet) -> Self {
        let n = alphabet.len();
        let images = alphabet.iter().enumerate().map(|(idx, letter)| {
            let i = idx + 1;
            let mut image = vec![b'0'; n + 1 - i];
            image.extend(std::iter::repeat_n(b'1', i));
            (letter, image)
        });
        Morphism::new(alphabet, Alphabet::binary(), images).expect("embedding is well formed")
    }

    pub fn domain(&self) -> Alphabet {
        self.domain
    }

    pub fn codomain(&self) -> Alphabet {
        self.codomain
    }

    /// Widens the codomain; the new one must contain the old.
    pub fn with_codomain(mut self, codomain: Alphabet) -> Result<Self> {
        if !self.codomain.is_subset(codomain) {
            return Err(Error::AlphabetMismatch(format!(
                "{} does not contain {}",
                codomain, self.codomain
            )));
        }
        self.codomain = codomain;
        Ok(self)
    }

    pub fn image(&self, letter: u8) -> Option<&[u8]> {
        let slot = *self.slots.get(letter as usize)?;
        (slot != NO_SLOT).then(|| self.images[slot as usize].as_slice())
    }

    pub fn image_word(&self, letter: u8) -> Option<Word> {
        self.image(letter)
            .map(|img| Word::from_raw(img.to_vec(), self.codomain))
    }

    /// `(letter, image)` in ascending letter order.
    pub fn iter(&self) -> impl Iterator<Item = (u8, &[u8])> + '_ {
        self.domain
            .iter()
            .zip(self.images.iter().map(Vec::as_slice))
    }

    pub fn is_erasing(&self) -> bool {
        self.images.iter().any(Vec::is_empty)
    }

    pub(crate) fn images(&self) -> &[Vec<u8>] {
        &self.images
    }

    /// Applies the morphism to raw letters, appending to `out`.
    pub fn apply_bytes(&self, letters: &[u8], out: &mut Vec<u8>) -> Result<()> {
        for &letter in letters {
            let image = self
                .image(letter)
                .ok_or(Error::OutsideDomain(letter as char))?;
            out.extend_from_slice(image);
        }
        Ok(())
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        let mut out = Vec::with_capacity(w.len() * self.max_image_len().max(1));
        self.apply_bytes(w.as_bytes(), &mut out)?;
        Ok(Word::from_raw(out, self.codomain))
    }

    pub fn max_image_len(&self) -> usize {
        self.images.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// `self ∘ inner`: first `inner`, then `self`.
    pub fn compose(&self, inner: &Morphism) -> Result<Morphism> {
        if !inner.codomain.is_subset(self.domain) {
            return Err(Error::AlphabetMismatch(format!(
                "codomain {} is not inside domain {}",
                inner.codomain, self.domain
            )));
        }
        let images = inner.iter().map(|(letter, image)| {
            let mut out = Vec::new();
            self.apply_bytes(image, &mut out)
                .expect("codomain checked against domain");
            (letter, out)
        });
        Morphism::new(inner.domain, self.codomain, images.collect::<Vec<_>>())
    }

    /// Cached injectivity verdict; erasing morphisms are rejected.
    pub fn injectivity(&self) -> Result<&Injectivity> {
        if let Some(verdict) = self.injectivity.get() {
            return Ok(verdict);
        }
        if let Some((letter, _)) = self.iter().find(|(_, img)| img.is_empty()) {
            return Err(Error::ErasingMorphism(letter as char));
        }
        Ok(self.injectivity.get_or_init(|| injectivity::decide(self)))
    }

    pub fn is_injective(&self) -> Result<bool> {
        Ok(self.injectivity()?.is_injective())
    }

    /// The unique preimage of `w` under an injective morphism, or the
    /// leftmost-greedy one otherwise. `None` if `w` is not an image.
    pub fn preimage(&self, w: &Word) -> Option<Word> {
        let s = w.as_bytes();
        let n = s.len();
        // back[i] = (previous position, letter) for a parse of s[..i]
        let mut back: Vec<Option<(usize, u8)>> = vec![None; n + 1];
        let mut reachable = vec![false; n + 1];
        reachable[0] = true;
        for i in 0..n {
            if !reachable[i] {
                continue;
            }
            for (letter, image) in self.iter() {
                let end = i + image.len();
                if !image.is_empty() && end <= n && !reachable[end] && &s[i..end] == image {
                    reachable[end] = true;
                    back[end] = Some((i, letter));
                }
            }
        }
        if !reachable[n] {
            return None;
        }
        let mut letters = Vec::new();
        let mut pos = n;
        while pos > 0 {
            let (prev, letter) = back[pos]?;
            letters.push(letter);
            pos = prev;
        }
        letters.reverse();
        Some(Word::from_raw(letters, self.domain))
    }
}

impl PartialEq for Morphism {
    fn eq(&self, other: &Self) -> bool {
        self.domain == other.domain
            && self.codomain == other.codomain
            && self.images == other.images
    }
}

impl Eq for Morphism {}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (letter, image)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(
                f,
                "{}={}",
                letter as char,
                std::str::from_utf8(image).unwrap_or("?")
            )?;
        }
        Ok(())
    }
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Morphism({self})")
    }
}

impl FromStr for Morphism {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Morphism::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn m(s: &str) -> Morphism {
        Morphism::parse(s).unwrap()
    }

    #[test]
    fn apply_examples() {
        assert_eq!(m("a=cdc,b=dc").apply(&w("ab")).unwrap(), w("cdcdc"));
        let ab = Alphabet::parse("ab").unwrap();
        assert_eq!(Morphism::identity(ab).apply(&w("abba")).unwrap(), w("abba"));
        assert_eq!(
            m("a=x,b=y").apply(&Word::empty(ab)).unwrap(),
            Word::empty(ab)
        );
        assert_eq!(
            m("a=x,b=y").apply(&w("abc")),
            Err(Error::OutsideDomain('c'))
        );
    }

    #[test]
    fn text_format_round_trips() {
        for text in ["a=cdc,b=dc", "0=01,1=10", "a=,b=ab", "Z=z"] {
            assert_eq!(m(text).to_string(), text);
        }
        // printing is in letter order
        assert_eq!(m("b=dc,a=cdc").to_string(), "a=cdc,b=dc");
    }

    #[test]
    fn parse_errors_carry_position() {
        let pos = |s: &str| match Morphism::parse(s) {
            Err(Error::Parse { position, .. }) => position,
            other => panic!("{other:?}"),
        };
        assert_eq!(pos(""), 0);
        assert_eq!(pos("a=b,"), 4);
        assert_eq!(pos("ab=c"), 1);
        assert_eq!(pos("a=b,a=c"), 4);
        assert_eq!(pos("a=b-c"), 3);
    }

    #[test]
    fn compose_examples() {
        let h = m("a=cdc,b=dc");
        let g = m("c=0,d=1");
        assert_eq!(g.compose(&h).unwrap(), m("a=010,b=10"));
        let id = Morphism::identity(h.codomain());
        assert_eq!(id.compose(&h).unwrap(), h);
        assert!(matches!(h.compose(&g), Err(Error::AlphabetMismatch(_))));
    }

    #[test]
    fn binary_embedding_examples() {
        let emb = |s: &str| Morphism::binary_embedding(Alphabet::parse(s).unwrap()).to_string();
        assert_eq!(emb("x"), "x=01");
        assert_eq!(emb("ab"), "a=001,b=011");
        assert_eq!(emb("abc"), "a=0001,b=0011,c=0111");
        assert!(Morphism::binary_embedding(Alphabet::parse("abcd").unwrap())
            .is_injective()
            .unwrap());
    }

    #[test]
    fn erasing_morphisms_have_no_injectivity_verdict() {
        assert_eq!(
            m("a=,b=ab").is_injective(),
            Err(Error::ErasingMorphism('a'))
        );
    }

    #[test]
    fn preimage_decodes() {
        let h = m("a=ab,b=aab");
        assert_eq!(h.preimage(&w("aabab")), Some(w("ba")));
        assert_eq!(h.preimage(&w("aba")), None);
    }

    #[test]
    fn construction_checks() {
        let ab = Alphabet::parse("ab").unwrap();
        let c = Alphabet::parse("c").unwrap();
        assert!(Morphism::new(ab, c, [(b'a', b"c".to_vec())]).is_err());
        assert!(Morphism::new(ab, c, [(b'a', b"c".to_vec()), (b'b', b"d".to_vec())]).is_err());
    }
}
