use std::fmt;

use super::constructions::{BigAcei, OptimalBinary};
use crate::error::{Error, Result};
use crate::morphism::Morphism;
use crate::word_core::{Alphabet, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    Periodic,
    MorphicFixedPoint,
    BigAcei,
    OptimalBinary,
    Custom,
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GeneratorKind::Periodic => "periodic",
            GeneratorKind::MorphicFixedPoint => "morphic",
            GeneratorKind::BigAcei => "big-acei",
            GeneratorKind::OptimalBinary => "optimal-binary",
            GeneratorKind::Custom => "custom",
        })
    }
}

pub(super) enum Source {
    Periodic(Vec<u8>),
    Morphic {
        morphism: Morphism,
        expanded: usize,
    },
    BigAcei {
        plan: BigAcei,
        next_round: usize,
    },
    OptimalBinary {
        plan: OptimalBinary,
        next_block: usize,
        mapped: bool,
    },
    Custom(Box<dyn Iterator<Item = u8> + Send>),
}

/// Produces prefixes of a right-infinite word on demand. Letters already
/// produced are cached, so prefixes are stable.
pub struct WordGenerator {
    kind: GeneratorKind,
    alphabet: Alphabet,
    buffer: Vec<u8>,
    source: Source,
}

impl fmt::Debug for WordGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WordGenerator")
            .field("kind", &self.kind)
            .field("alphabet", &self.alphabet)
            .field("cached", &self.buffer.len())
            .finish()
    }
}

impl WordGenerator {
    pub(super) fn from_source(kind: GeneratorKind, alphabet: Alphabet, source: Source) -> Self {
        WordGenerator {
            kind,
            alphabet,
            buffer: Vec::new(),
            source,
        }
    }

    /// Wraps an arbitrary letter stream. A stream that ends makes longer
    /// prefix requests fail.
    pub fn custom<I>(alphabet: Alphabet, letters: I) -> Self
    where
        I: IntoIterator<Item = u8>,
        I::IntoIter: Send + 'static,
    {
        Self::from_source(
            GeneratorKind::Custom,
            alphabet,
            Source::Custom(Box::new(letters.into_iter())),
        )
    }

    /// Fixed point of `0 -> 01, 1 -> 10`.
    pub fn thue_morse() -> Self {
        let g = Morphism::parse("0=01,1=10").expect("valid morphism");
        morphic_generator(g, b'0').expect("prolongable")
    }

    /// Fixed point of `a -> ab, b -> a`.
    pub fn fibonacci() -> Self {
        let g = Morphism::parse("a=ab,b=a").expect("valid morphism");
        morphic_generator(g, b'a').expect("prolongable")
    }

    pub fn kind(&self) -> GeneratorKind {
        self.kind
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn prefix(&mut self, n: usize) -> Result<Word> {
        let alphabet = self.alphabet;
        self.prefix_bytes(n)
            .map(|s| Word::from_raw(s.to_vec(), alphabet))
    }

    pub(crate) fn prefix_bytes(&mut self, n: usize) -> Result<&[u8]> {
        self.fill(n)?;
        Ok(&self.buffer[..n])
    }

    fn fill(&mut self, n: usize) -> Result<()> {
        let buffer = &mut self.buffer;
        while buffer.len() < n {
            match &mut self.source {
                Source::Periodic(v) => {
                    let need = n - buffer.len();
                    let start = buffer.len() % v.len();
                    buffer.extend(v.iter().cycle().skip(start).take(need));
                }
                Source::Morphic { morphism, expanded } => {
                    let letter = buffer[*expanded];
                    let image = morphism.image(letter).expect("endomorphism");
                    if *expanded == 0 {
                        buffer.extend_from_slice(&image[1..]);
                    } else {
                        buffer.extend_from_slice(image);
                    }
                    *expanded += 1;
                }
                Source::BigAcei { plan, next_round } => {
                    *next_round += 1;
                    plan.append_round(*next_round, buffer)?;
                }
                Source::OptimalBinary {
                    plan,
                    next_block,
                    mapped,
                } => {
                    *next_block += 1;
                    let segment = plan.segment(*next_block)?;
                    if *mapped {
                        plan.morphism().apply_bytes(segment.as_bytes(), buffer)?;
                    } else {
                        buffer.extend_from_slice(segment.as_bytes());
                    }
                }
                Source::Custom(stream) => match stream.next() {
                    Some(letter) if self.alphabet.contains(letter) => buffer.push(letter),
                    Some(letter) => return Err(Error::LetterOutsideAlphabet(letter as char)),
                    None => return Err(Error::GeneratorExhausted(buffer.len())),
                },
            }
        }
        Ok(())
    }
}

/// `v^ω`.
pub fn periodic_generator(v: &Word) -> Result<WordGenerator> {
    if v.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(WordGenerator::from_source(
        GeneratorKind::Periodic,
        v.alphabet(),
        Source::Periodic(v.as_bytes().to_vec()),
    ))
}

/// Fixed point of `g` starting with `seed`. Requires `g(seed)` to start
/// with `seed` and have length at least 2, and `g` to be nonerasing.
pub fn morphic_generator(g: Morphism, seed: u8) -> Result<WordGenerator> {
    if !g.codomain().is_subset(g.domain()) {
        return Err(Error::AlphabetMismatch(format!(
            "codomain {} is not inside domain {}",
            g.codomain(),
            g.domain()
        )));
    }
    if let Some((letter, _)) = g.iter().find(|(_, image)| image.is_empty()) {
        return Err(Error::ErasingMorphism(letter as char));
    }
    let image = g.image(seed).ok_or(Error::OutsideDomain(seed as char))?;
    if image.len() < 2 || image[0] != seed {
        return Err(Error::Constraint(format!(
            "{} is not prolongable on {}",
            g, seed as char
        )));
    }
    let mut gen = WordGenerator::from_source(
        GeneratorKind::MorphicFixedPoint,
        g.domain(),
        Source::Morphic {
            morphism: g,
            expanded: 0,
        },
    );
    gen.buffer.push(seed);
    Ok(gen)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn periodic_prefixes() {
        let mut g = periodic_generator(&w("ab")).unwrap();
        assert_eq!(g.prefix(5).unwrap().to_string(), "ababa");
        assert_eq!(g.prefix(2).unwrap().to_string(), "ab");
        assert_eq!(
            periodic_generator(&w("a"))
                .unwrap()
                .prefix(3)
                .unwrap()
                .to_string(),
            "aaa"
        );
        assert_eq!(
            periodic_generator(&w("abc"))
                .unwrap()
                .prefix(4)
                .unwrap()
                .to_string(),
            "abca"
        );
        assert!(periodic_generator(&w("")).is_err());
    }

    fn iterate(g: &Morphism, seed: u8, n: usize) -> String {
        let mut cur = vec![seed];
        while cur.len() < n {
            let mut next = Vec::new();
            g.apply_bytes(&cur, &mut next).unwrap();
            cur = next;
        }
        String::from_utf8(cur[..n].to_vec()).unwrap()
    }

    #[test]
    fn morphic_prefixes() {
        let mut tm = WordGenerator::thue_morse();
        assert_eq!(tm.prefix(8).unwrap().to_string(), "01101001");
        let g = Morphism::parse("a=ab,b=b").unwrap();
        let mut gen = morphic_generator(g.clone(), b'a').unwrap();
        assert_eq!(gen.prefix(6).unwrap().to_string(), "abbbbb");
        assert_eq!(gen.prefix(6).unwrap().to_string(), iterate(&g, b'a', 6));

        for spec in ["0=01,1=10", "a=ab,b=a", "a=abc,b=ac,c=b", "a=aab,b=ba"] {
            let g = Morphism::parse(spec).unwrap();
            let seed = g.domain().iter().next().unwrap();
            let mut gen = morphic_generator(g.clone(), seed).unwrap();
            assert_eq!(gen.prefix(300).unwrap().to_string(), iterate(&g, seed, 300));
        }
    }

    #[test]
    fn morphic_errors() {
        let g = Morphism::parse("a=ba,b=a").unwrap();
        assert!(matches!(
            morphic_generator(g, b'a'),
            Err(Error::Constraint(_))
        ));
        let g = Morphism::parse("a=a,b=ab").unwrap();
        assert!(matches!(
            morphic_generator(g, b'a'),
            Err(Error::Constraint(_))
        ));
        let g = Morphism::parse("a=ab,b=").unwrap();
        assert!(matches!(
            morphic_generator(g, b'a'),
            Err(Error::ErasingMorphism('b'))
        ));
        let g = Morphism::parse("a=ac,b=b").unwrap();
        assert!(matches!(
            morphic_generator(g, b'a'),
            Err(Error::AlphabetMismatch(_))
        ));
    }

    #[test]
    fn custom_streams() {
        let mut g = WordGenerator::custom(Alphabet::binary(), *b"011");
        assert_eq!(g.prefix(3).unwrap().to_string(), "011");
        assert_eq!(g.prefix(4), Err(Error::GeneratorExhausted(3)));
        let mut g = WordGenerator::custom(Alphabet::binary(), std::iter::repeat(b'2'));
        assert_eq!(g.prefix(1), Err(Error::LetterOutsideAlphabet('2')));
    }

    #[test]
    fn prefixes_are_stable() {
        let mut gens = vec![
            WordGenerator::thue_morse(),
            WordGenerator::fibonacci(),
            periodic_generator(&w("aab")).unwrap(),
        ];
        for g in &mut gens {
            for n in [1, 4, 7, 33, 100] {
                let short = g.prefix(n).unwrap();
                let long = g.prefix(2 * n).unwrap();
                assert!(long.starts_with(&short), "{:?}", g.kind());
            }
        }
    }
}
