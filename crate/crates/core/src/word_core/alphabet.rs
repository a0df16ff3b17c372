use std::fmt;

use crate::error::{Error, Result};

/// Letters that may appear in a word, in the order used when a construction
/// needs "the i-th letter". All are ASCII alphanumerics so that words,
/// morphisms and codes survive the `a=cdc,b=dc` and `ab,ba` text formats.
pub const LETTER_POOL: &[u8] = b"ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";

/// The `i`-th letter of [`LETTER_POOL`], zero based.
pub fn indexed_letter(i: usize) -> Option<u8> {
    LETTER_POOL.get(i).copied()
}

/// A finite alphabet of ASCII alphanumeric letters, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet(u128);

impl Alphabet {
    pub const EMPTY: Alphabet = Alphabet(0);

    pub fn is_valid_letter(letter: u8) -> bool {
        letter.is_ascii_alphanumeric()
    }

    pub fn from_letters<I: IntoIterator<Item = u8>>(letters: I) -> Result<Self> {
        let mut alphabet = Alphabet::EMPTY;
        for (position, letter) in letters.into_iter().enumerate() {
            if !Self::is_valid_letter(letter) {
                return Err(Error::Parse {
                    what: "alphabet",
                    position,
                    reason: format!("{:?} is not an ASCII letter or digit", letter as char),
                });
            }
            alphabet.0 |= 1 << letter;
        }
        Ok(alphabet)
    }

    /// Parses a string of letters; repeated letters are allowed.
    pub fn parse(s: &str) -> Result<Self> {
        Self::from_letters(s.bytes())
    }

    /// `{0, 1}`, the default codomain for searches.
    pub fn binary() -> Self {
        Alphabet((1 << b'0') | (1 << b'1'))
    }

    /// The first `size` letters of `0123456789abcdefghijklmnopqrstuvwxyz`.
    pub fn numbered(size: usize) -> Result<Self> {
        const DIGITS: &[u8] = b"0123456789abcdefghijklmnopqrstuvwxyz";
        if size == 0 || size > DIGITS.len() {
            return Err(Error::OutOfRange(format!(
                "codomain size {size} (must be 1..={})",
                DIGITS.len()
            )));
        }
        Self::from_letters(DIGITS[..size].iter().copied())
    }

    pub fn contains(self, letter: u8) -> bool {
        letter < 128 && self.0 & (1 << letter) != 0
    }

    pub fn insert(&mut self, letter: u8) {
        debug_assert!(Self::is_valid_letter(letter));
        self.0 |= 1 << letter;
    }

    pub fn with(mut self, letter: u8) -> Self {
        self.insert(letter);
        self
    }

    pub fn without(self, letter: u8) -> Self {
        if letter < 128 {
            Alphabet(self.0 & !(1 << letter))
        } else {
            self
        }
    }

    pub fn union(self, other: Alphabet) -> Self {
        Alphabet(self.0 | other.0)
    }

    pub fn is_subset(self, other: Alphabet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Letters in ascending byte order.
    pub fn iter(self) -> impl Iterator<Item = u8> {
        (0u8..128).filter(move |&b| self.contains(b))
    }

    pub fn letters(self) -> Vec<u8> {
        self.iter().collect()
    }

    /// First letter of [`LETTER_POOL`] (lowercase first) not in the alphabet.
    pub fn fresh_letter(self) -> Option<u8> {
        b"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789"
            .iter()
            .copied()
            .find(|&b| !self.contains(b))
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet({self})")
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, letter) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", letter as char)?;
        }
        f.write_str("}")
    }
}
