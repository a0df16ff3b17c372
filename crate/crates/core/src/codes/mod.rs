//! X-interpretations, X-degree, X-factorisations and synchronizing words
//! for finite sets of words.

mod interpret;
mod sync;

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

pub use interpret::{x_degree, x_factorization_count, x_interpretations, Interpretation};
pub use sync::{default_probe_len, is_synchronizing};

use crate::error::{Error, Result};
use crate::morphism::Morphism;
use crate::word_core::{indexed_letter, Alphabet, Word};

/// A finite set of distinct nonempty words, kept in the order given.
#[derive(Clone, PartialEq, Eq)]
pub struct CodeSet {
    words: Vec<Word>,
    max_len: usize,
    prefixes: HashSet<Vec<u8>>,
    suffixes: HashSet<Vec<u8>>,
}

impl CodeSet {
    pub fn new<I: IntoIterator<Item = Word>>(words: I) -> Result<Self> {
        let words: Vec<Word> = words.into_iter().collect();
        if words.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut seen = HashSet::new();
        for word in &words {
            if word.is_empty() {
                return Err(Error::Constraint("code words must be nonempty".into()));
            }
            if !seen.insert(word.as_bytes()) {
                return Err(Error::Constraint(format!("{word} listed twice")));
            }
        }
        let mut prefixes = HashSet::new();
        let mut suffixes = HashSet::new();
        for word in &words {
            let s = word.as_bytes();
            for i in 1..=s.len() {
                prefixes.insert(s[..i].to_vec());
                suffixes.insert(s[s.len() - i..].to_vec());
            }
        }
        let max_len = words.iter().map(Word::len).max().unwrap_or(0);
        Ok(CodeSet {
            words,
            max_len,
            prefixes,
            suffixes,
        })
    }

    /// Parses `ab,ba`, optionally written `X=ab,ba`.
    pub fn parse(text: &str) -> Result<Self> {
        let (body, offset) = match text.strip_prefix("X=") {
            Some(rest) => (rest, 2),
            None => (text, 0),
        };
        let mut words = Vec::new();
        let mut start = 0;
        for piece in body.split(',') {
            if piece.is_empty() {
                return Err(Error::Parse {
                    what: "code",
                    position: offset + start,
                    reason: "empty code word".into(),
                });
            }
            let word = Word::parse_with_context(piece, "code").map_err(|e| match e {
                Error::Parse {
                    what,
                    position,
                    reason,
                } => Error::Parse {
                    what,
                    position: offset + start + position,
                    reason,
                },
                other => other,
            })?;
            words.push(word);
            start += piece.len() + 1;
        }
        CodeSet::new(words)
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn alphabet(&self) -> Alphabet {
        self.words
            .iter()
            .fold(Alphabet::EMPTY, |acc, w| acc.union(w.letters_used()))
    }

    pub fn contains(&self, piece: &[u8]) -> bool {
        self.words.iter().any(|w| w.as_bytes() == piece)
    }

    /// Nonempty prefix of some element.
    pub fn is_prefix_piece(&self, piece: &[u8]) -> bool {
        self.prefixes.contains(piece)
    }

    /// Nonempty suffix of some element.
    pub fn is_suffix_piece(&self, piece: &[u8]) -> bool {
        self.suffixes.contains(piece)
    }

    /// The morphism sending the i-th pool letter to the i-th element.
    pub fn as_morphism(&self) -> Result<Morphism> {
        let images = self
            .words
            .iter()
            .enumerate()
            .map(|(i, w)| {
                indexed_letter(i)
                    .map(|l| (l, w.as_bytes().to_vec()))
                    .ok_or_else(|| Error::AlphabetExhausted("code letters".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let domain = Alphabet::from_letters(images.iter().map(|(l, _)| *l))?;
        Morphism::new(domain, self.alphabet(), images)
    }

    /// Unique decodability.
    pub fn is_code(&self) -> Result<bool> {
        self.as_morphism()?.is_injective()
    }
}

impl fmt::Display for CodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.words.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CodeSet(X={self})")
    }
}

impl FromStr for CodeSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CodeSet::parse(s)
    }
}
