use super::generator::{GeneratorKind, Source, WordGenerator};
use crate::error::{Error, Result};
use crate::feinj::{interleaving_morphism, letter_pair};
use crate::morphism::Morphism;
use crate::word_core::{Alphabet, Rational, Word};

/// Letters of a generator with at most two letters, in ascending order.
fn binary_letters(base: &WordGenerator) -> Result<Vec<u8>> {
    let letters = base.alphabet().letters();
    if letters.is_empty() || letters.len() > 2 {
        return Err(Error::Constraint(format!(
            "base alphabet {} must have one or two letters",
            base.alphabet()
        )));
    }
    Ok(letters)
}

fn rename(letters: &[u8], from: &[u8], to: [u8; 2]) -> Vec<u8> {
    letters
        .iter()
        .map(|&l| if l == from[0] { to[0] } else { to[1] })
        .collect()
}

/// `n` renamed copies `u_1, ..., u_n` of a binary base word, each cut into
/// chunks `u_{i,j}` of length `j`, interleaved as
/// `u_{1,1} ... u_{n,1} u_{1,2} ... u_{n,2} ...`.
#[derive(Debug)]
pub struct BigAcei {
    n: usize,
    base: Box<WordGenerator>,
    base_letters: Vec<u8>,
    pairs: Vec<[u8; 2]>,
}

impl BigAcei {
    pub fn new(n: usize, base: WordGenerator) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange("n = 0 (must be >= 1)".into()));
        }
        let base_letters = binary_letters(&base)?;
        let pairs = (1..=n)
            .map(|i| letter_pair(i).map(|(a, b)| [a, b]))
            .collect::<Result<_>>()?;
        Ok(BigAcei {
            n,
            base: Box::new(base),
            base_letters,
            pairs,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alphabet(&self) -> Alphabet {
        self.pairs
            .iter()
            .fold(Alphabet::EMPTY, |acc, [a, b]| acc.with(*a).with(*b))
    }

    /// `u_{i,j}`, for `1 <= i <= n` and `j >= 1`.
    pub fn chunk(&mut self, i: usize, j: usize) -> Result<Word> {
        if i == 0 || i > self.n || j == 0 {
            return Err(Error::OutOfRange(format!("chunk ({i}, {j})")));
        }
        let start = j * (j - 1) / 2;
        let base = self.base.prefix_bytes(start + j)?;
        let letters = rename(&base[start..], &self.base_letters, self.pairs[i - 1]);
        Ok(Word::from_raw(letters, self.alphabet()))
    }

    /// `u_{1,j} u_{2,j} ... u_{n,j}`.
    pub fn round(&mut self, j: usize) -> Result<Word> {
        let mut out = Vec::with_capacity(self.n * j);
        self.append_round(j, &mut out)?;
        Ok(Word::from_raw(out, self.alphabet()))
    }

    pub(super) fn append_round(&mut self, j: usize, out: &mut Vec<u8>) -> Result<()> {
        for i in 1..=self.n {
            out.extend_from_slice(self.chunk(i, j)?.as_bytes());
        }
        Ok(())
    }

    /// `a_i -> c^(i-1) a c^(n-i)`, `b_i -> c^(i-1) b c^(n-i)`.
    pub fn morphism(&self) -> Result<Morphism> {
        interleaving_morphism(self.n)
    }
}

/// The interleaved word built from `n` copies of `base`.
pub fn big_acei_generator(n: usize, base: WordGenerator) -> Result<WordGenerator> {
    let plan = BigAcei::new(n, base)?;
    Ok(WordGenerator::from_source(
        GeneratorKind::BigAcei,
        plan.alphabet(),
        Source::BigAcei {
            plan,
            next_round: 0,
        },
    ))
}

const DIGITS: &[u8] = b"123456789";

/// `c_i -> a^(m - f(i)) b^(f(i))` for `i = 1..=d`, with `c_i` written as
/// the digit `i`.
pub fn cassaigne_family_morphism(d: usize, f: &[usize], m: usize) -> Result<Morphism> {
    if d == 0 {
        return Err(Error::EmptyInput);
    }
    if f.len() != d {
        return Err(Error::Constraint(format!(
            "f has {} values, expected {d}",
            f.len()
        )));
    }
    if d > DIGITS.len() {
        return Err(Error::AlphabetExhausted(format!("d = {d} (at most 9)")));
    }
    let max_f = *f.iter().max().expect("nonempty");
    if m < max_f + 1 {
        return Err(Error::OutOfRange(format!(
            "m = {m} (must be >= {})",
            max_f + 1
        )));
    }
    for (i, x) in f.iter().enumerate() {
        if f[..i].contains(x) {
            return Err(Error::Constraint(format!(
                "f is not injective: value {x} repeats"
            )));
        }
    }
    let images = f.iter().enumerate().map(|(i, &fi)| {
        let mut image = vec![b'a'; m - fi];
        image.resize(m, b'b');
        (DIGITS[i], image)
    });
    let domain = Alphabet::from_letters(DIGITS[..d].iter().copied())?;
    Morphism::new(domain, Alphabet::parse("ab")?, images.collect::<Vec<_>>())
}

/// The six-letter word `∏ (u_i 5 v_i 5)^n u_i 5 6` over `1..6` and its
/// binary image.
///
/// `u = u_1 u_2 ...` is the base renamed to `{1,2}` and `v = v_1 v_2 ...`
/// the base renamed to `{3,4}`. Blocks are indexed from 1 with
/// `|u_1| = k+1`, `|u_{i+1}| = i^2 (k+1) |u_i|` and `|v_i| = k(|u_i|+1) - 1`.
#[derive(Debug)]
pub struct OptimalBinary {
    n: usize,
    k: usize,
    m: usize,
    base: Box<WordGenerator>,
    base_letters: Vec<u8>,
    morphism: Morphism,
}

impl OptimalBinary {
    pub fn new(n: usize, k: usize, m: usize, base: WordGenerator) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange("n = 0 (must be >= 1)".into()));
        }
        if k < 2 {
            return Err(Error::OutOfRange(format!("k = {k} (must be >= 2)")));
        }
        if m <= 2 + 2 * k {
            return Err(Error::OutOfRange(format!(
                "m = {m} (must be > 2 + 2k = {})",
                2 + 2 * k
            )));
        }
        let base_letters = binary_letters(&base)?;
        let morphism = cassaigne_family_morphism(6, &[m - 1, m - 2, 2, 1, 3, 4], m)?;
        Ok(OptimalBinary {
            n,
            k,
            m,
            base: Box::new(base),
            base_letters,
            morphism,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `1 -> ab^(m-1)`, `2 -> aab^(m-2)`, `3 -> a^(m-2)bb`, `4 -> a^(m-1)b`,
    /// `5 -> a^(m-3)bbb`, `6 -> a^(m-4)bbbb`.
    pub fn morphism(&self) -> &Morphism {
        &self.morphism
    }

    pub fn intermediate_alphabet() -> Alphabet {
        Alphabet::parse("123456").expect("digits")
    }

    pub fn u_len(&self, i: usize) -> Result<usize> {
        if i == 0 {
            return Err(Error::OutOfRange("block 0 (blocks start at 1)".into()));
        }
        let overflow = || Error::OutOfRange(format!("block {i} is too long"));
        let mut len = self.k + 1;
        for t in 1..i {
            len = (t * t)
                .checked_mul(self.k + 1)
                .and_then(|x| x.checked_mul(len))
                .ok_or_else(overflow)?;
        }
        Ok(len)
    }

    pub fn v_len(&self, i: usize) -> Result<usize> {
        let u = self.u_len(i)?;
        Ok(self.k * (u + 1) - 1)
    }

    fn base_slice(&mut self, start: usize, len: usize, to: [u8; 2]) -> Result<Vec<u8>> {
        let base = self.base.prefix_bytes(start + len)?;
        Ok(rename(&base[start..], &self.base_letters, to))
    }

    pub fn u(&mut self, i: usize) -> Result<Word> {
        let start = (1..i).map(|t| self.u_len(t)).sum::<Result<usize>>()?;
        let len = self.u_len(i)?;
        let letters = self.base_slice(start, len, *b"12")?;
        Ok(Word::from_raw(letters, Self::intermediate_alphabet()))
    }

    pub fn v(&mut self, i: usize) -> Result<Word> {
        let start = (1..i).map(|t| self.v_len(t)).sum::<Result<usize>>()?;
        let len = self.v_len(i)?;
        let letters = self.base_slice(start, len, *b"34")?;
        Ok(Word::from_raw(letters, Self::intermediate_alphabet()))
    }

    /// `(u_i 5 v_i 5)^n u_i 5`.
    pub fn block(&mut self, i: usize) -> Result<Word> {
        let u = self.u(i)?.into_bytes();
        let v = self.v(i)?.into_bytes();
        let mut period = u.clone();
        period.push(b'5');
        period.extend_from_slice(&v);
        period.push(b'5');
        let mut out = period.repeat(self.n);
        out.extend_from_slice(&u);
        out.push(b'5');
        Ok(Word::from_raw(out, Self::intermediate_alphabet()))
    }

    /// The block followed by the separator `6`.
    pub fn segment(&mut self, i: usize) -> Result<Word> {
        let block = self.block(i)?;
        Ok(block.concat(&Word::from_raw(vec![b'6'], Self::intermediate_alphabet())))
    }

    /// `n + 1/(k+1)`, the exponent of every block.
    pub fn block_exponent(&self) -> Rational {
        Rational::from_integer(self.n as i64) + Rational::new(1, self.k as i64 + 1)
    }

    /// `n + (m-2)/(m+2k)`, the limit of the stretched block exponents.
    pub fn stretched_limit(&self) -> Rational {
        let (m, k) = (self.m as i64, self.k as i64);
        Rational::from_integer(self.n as i64) + Rational::new(m - 2, m + 2 * k)
    }

    /// The smallest `δ` with `m > (2+2k)/δ + 2k + 6` not yet satisfied,
    /// i.e. `(2+2k)/(m-2k-6)`; any larger `δ` is met. `None` when `m` is
    /// too small for any `δ`.
    pub fn implied_delta(&self) -> Option<Rational> {
        let (m, k) = (self.m as i64, self.k as i64);
        (m > 2 * k + 6).then(|| Rational::new(2 + 2 * k, m - 2 * k - 6))
    }

    /// `1/k`: the construction needs `k > 1/λ`, so any `λ` above this works.
    pub fn implied_lambda(&self) -> Rational {
        Rational::new(1, self.k as i64)
    }
}

/// Prefixes of `h(w)` for the six-letter word `w` of [`OptimalBinary`].
pub fn optimal_binary_generator(
    n: usize,
    k: usize,
    m: usize,
    base: WordGenerator,
) -> Result<WordGenerator> {
    let plan = OptimalBinary::new(n, k, m, base)?;
    Ok(WordGenerator::from_source(
        GeneratorKind::OptimalBinary,
        Alphabet::parse("ab")?,
        Source::OptimalBinary {
            plan,
            next_block: 0,
            mapped: true,
        },
    ))
}

impl OptimalBinary {
    /// Prefixes of the six-letter word itself.
    pub fn into_intermediate_generator(self) -> WordGenerator {
        WordGenerator::from_source(
            GeneratorKind::OptimalBinary,
            Self::intermediate_alphabet(),
            Source::OptimalBinary {
                plan: self,
                next_block: 0,
                mapped: false,
            },
        )
    }
}
