use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Range;
use std::str::FromStr;

use super::Alphabet;
use crate::error::{Error, Result};

/// A finite word over a declared alphabet.
///
/// Equality, ordering and hashing look at the letters only, so `ab` over
/// `{a,b}` equals `ab` over `{a,b,c}`.
#[derive(Clone)]
pub struct Word {
    alphabet: Alphabet,
    letters: Vec<u8>,
}

impl Word {
    /// Builds a word over `alphabet`, checking every letter.
    pub fn new(letters: Vec<u8>, alphabet: Alphabet) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&b| !alphabet.contains(b)) {
            return Err(Error::LetterOutsideAlphabet(bad as char));
        }
        Ok(Word { alphabet, letters })
    }

    /// Builds a word whose alphabet is the set of letters it uses.
    pub fn from_letters(letters: Vec<u8>) -> Result<Self> {
        let alphabet = Alphabet::from_letters(letters.iter().copied())?;
        Ok(Word { alphabet, letters })
    }

    pub(crate) fn from_raw(letters: Vec<u8>, alphabet: Alphabet) -> Self {
        debug_assert!(letters.iter().all(|&b| alphabet.contains(b)));
        Word { alphabet, letters }
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Word {
            alphabet,
            letters: Vec::new(),
        }
    }

    /// Parses one letter per character; the alphabet is the set of letters
    /// used.
    pub fn parse(s: &str) -> Result<Self> {
        Self::parse_with_context(s, "word")
    }

    pub(crate) fn parse_with_context(s: &str, what: &'static str) -> Result<Self> {
        let letters = s.as_bytes().to_vec();
        Alphabet::from_letters(letters.iter().copied()).map_err(|e| match e {
            Error::Parse {
                position, reason, ..
            } => Error::Parse {
                what,
                position,
                reason,
            },
            other => other,
        })?;
        Self::from_letters(letters)
    }

    /// Parses over a declared alphabet.
    pub fn parse_over(s: &str, alphabet: Alphabet) -> Result<Self> {
        let word = Self::parse(s)?;
        word.with_alphabet(alphabet)
    }

    /// Re-declares the alphabet, which must contain every letter used.
    pub fn with_alphabet(self, alphabet: Alphabet) -> Result<Self> {
        Word::new(self.letters, alphabet)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    /// Letters that actually occur.
    pub fn letters_used(&self) -> Alphabet {
        let mut used = Alphabet::EMPTY;
        for &b in &self.letters {
            used.insert(b);
        }
        used
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.letters
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn count(&self, letter: u8) -> usize {
        self.letters.iter().filter(|&&b| b == letter).count()
    }

    pub fn factor(&self, range: Range<usize>) -> Word {
        Word::from_raw(self.letters[range].to_vec(), self.alphabet)
    }

    pub fn prefix(&self, len: usize) -> Word {
        self.factor(0..len)
    }

    pub fn suffix(&self, len: usize) -> Word {
        self.factor(self.len() - len..self.len())
    }

    /// Concatenation; the result's alphabet is the union of both.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word::from_raw(letters, self.alphabet.union(other.alphabet))
    }

    /// `self^count`.
    pub fn repeat(&self, count: usize) -> Word {
        Word::from_raw(self.letters.repeat(count), self.alphabet)
    }

    /// The prefix of length `len` of `self^ω`. `self` must be nonempty.
    pub fn power_prefix(&self, len: usize) -> Word {
        assert!(!self.is_empty(), "power of the empty word");
        let letters = self.letters.iter().copied().cycle().take(len).collect();
        Word::from_raw(letters, self.alphabet)
    }

    /// Cyclic shift moving the first `shift` letters to the end.
    pub fn rotate(&self, shift: usize) -> Word {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            letters.rotate_left(shift % self.len());
        }
        Word::from_raw(letters, self.alphabet)
    }

    pub fn starts_with(&self, other: &Word) -> bool {
        self.letters.starts_with(&other.letters)
    }

    pub fn ends_with(&self, other: &Word) -> bool {
        self.letters.ends_with(&other.letters)
    }

    /// Leftmost occurrence of `needle` at or after `from`.
    pub fn find(&self, needle: &Word, from: usize) -> Option<usize> {
        find_bytes(&self.letters, &needle.letters, from)
    }
}

pub(crate) fn find_bytes(haystack: &[u8], needle: &[u8], from: usize) -> Option<usize> {
    if needle.is_empty() {
        return (from <= haystack.len()).then_some(from);
    }
    if haystack.len() < needle.len() {
        return None;
    }
    (from..=haystack.len() - needle.len()).find(|&i| &haystack[i..i + needle.len()] == needle)
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        self.letters == other.letters
    }
}

impl Eq for Word {}

impl Hash for Word {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.letters.hash(state);
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters.cmp(&other.letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // letters are ASCII by construction
        f.write_str(std::str::from_utf8(&self.letters).unwrap_or("?"))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?})", self.to_string())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s)
    }
}
