//! Deterministic enumeration of morphisms with bounded image length.
//!
//! Candidate images are ordered shortlex (by length, then lexicographically)
//! and image tuples lexicographically, first domain letter most significant.
//! Every morphism therefore has a stable index, which lets the parallel
//! searches reduce over indices instead of completion order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use super::Morphism;
use crate::error::{Error, Result};
use crate::word_core::Alphabet;

#[derive(Clone, Debug)]
pub struct MorphismSpace {
    domain: Alphabet,
    codomain: Alphabet,
    letters: Vec<u8>,
    candidates: Vec<Vec<u8>>,
    size: u64,
}

impl MorphismSpace {
    pub fn new(domain: Alphabet, codomain: Alphabet, max_image_len: usize) -> Result<Self> {
        if max_image_len == 0 {
            return Err(Error::OutOfRange("max_image_len 0".into()));
        }
        if codomain.is_empty() {
            return Err(Error::OutOfRange("empty codomain".into()));
        }
        let symbols = codomain.letters();
        let mut candidates = Vec::new();
        let mut layer: Vec<Vec<u8>> = vec![Vec::new()];
        for _ in 0..max_image_len {
            layer = layer
                .iter()
                .flat_map(|w| {
                    symbols.iter().map(move |&s| {
                        let mut next = w.clone();
                        next.push(s);
                        next
                    })
                })
                .collect();
            candidates.extend(layer.iter().cloned());
        }
        let letters = domain.letters();
        let size = (candidates.len() as u64)
            .checked_pow(letters.len() as u32)
            .ok_or_else(|| Error::OutOfRange("morphism space size".into()))?;
        Ok(MorphismSpace {
            domain,
            codomain,
            letters,
            candidates,
            size,
        })
    }

    /// Number of morphisms, injective or not.
    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn domain(&self) -> Alphabet {
        self.domain
    }

    pub fn codomain(&self) -> Alphabet {
        self.codomain
    }

    /// The morphism at `index` in enumeration order.
    pub fn morphism(&self, index: u64) -> Morphism {
        assert!(index < self.size, "index out of range");
        let base = self.candidates.len() as u64;
        let mut rest = index;
        let mut digits = vec![0usize; self.letters.len()];
        for digit in digits.iter_mut().rev() {
            *digit = (rest % base) as usize;
            rest /= base;
        }
        let images = self
            .letters
            .iter()
            .zip(digits)
            .map(|(&letter, d)| (letter, self.candidates[d].clone()));
        Morphism::new(self.domain, self.codomain, images).expect("candidates lie in the codomain")
    }

    /// All morphisms in enumeration order.
    pub fn iter(&self) -> impl Iterator<Item = Morphism> + '_ {
        (0..self.size).map(move |i| self.morphism(i))
    }

    fn injective_at(&self, index: u64) -> Option<Morphism> {
        let h = self.morphism(index);
        let images = h.images();
        let distinct =
            (0..images.len()).all(|i| (i + 1..images.len()).all(|j| images[i] != images[j]));
        (distinct && h.is_injective().unwrap_or(false)).then_some(h)
    }

    /// First injective morphism (in enumeration order) for which `probe`
    /// returns something.
    pub fn find_first_sequential<T, F>(&self, probe: F) -> Option<(u64, Morphism, T)>
    where
        F: Fn(&Morphism) -> Option<T>,
    {
        (0..self.size).find_map(|i| {
            let h = self.injective_at(i)?;
            let t = probe(&h)?;
            Some((i, h, t))
        })
    }

    #[cfg(feature = "parallel")]
    pub fn find_first_parallel<T, F>(&self, probe: F) -> Option<(u64, Morphism, T)>
    where
        T: Send,
        F: Fn(&Morphism) -> Option<T> + Sync,
    {
        (0..self.size).into_par_iter().find_map_first(|i| {
            let h = self.injective_at(i)?;
            let t = probe(&h)?;
            Some((i, h, t))
        })
    }

    pub fn find_first<T, F>(&self, probe: F) -> Option<(u64, Morphism, T)>
    where
        T: Send,
        F: Fn(&Morphism) -> Option<T> + Sync,
    {
        #[cfg(feature = "parallel")]
        {
            self.find_first_parallel(probe)
        }
        #[cfg(not(feature = "parallel"))]
        {
            self.find_first_sequential(probe)
        }
    }

    /// Injective morphism maximising `key`; ties go to the smallest index.
    pub fn max_by_key_sequential<K, F>(&self, key: F) -> Option<(u64, Morphism, K)>
    where
        K: Ord,
        F: Fn(&Morphism) -> K,
    {
        let mut best: Option<(u64, Morphism, K)> = None;
        for i in 0..self.size {
            let Some(h) = self.injective_at(i) else {
                continue;
            };
            let k = key(&h);
            if best.as_ref().is_none_or(|(_, _, b)| k > *b) {
                best = Some((i, h, k));
            }
        }
        best
    }

    #[cfg(feature = "parallel")]
    pub fn max_by_key_parallel<K, F>(&self, key: F) -> Option<(u64, Morphism, K)>
    where
        K: Ord + Send,
        F: Fn(&Morphism) -> K + Sync,
    {
        let best = (0..self.size)
            .into_par_iter()
            .filter_map(|i| {
                let h = self.injective_at(i)?;
                Some((key(&h), std::cmp::Reverse(i)))
            })
            .max()?;
        let index = best.1 .0;
        Some((index, self.morphism(index), best.0))
    }

    pub fn max_by_key<K, F>(&self, key: F) -> Option<(u64, Morphism, K)>
    where
        K: Ord + Send,
        F: Fn(&Morphism) -> K + Sync,
    {
        #[cfg(feature = "parallel")]
        {
            self.max_by_key_parallel(key)
        }
        #[cfg(not(feature = "parallel"))]
        {
            self.max_by_key_sequential(key)
        }
    }
}

/// Stream of the injective morphisms of a [`MorphismSpace`], in order.
pub struct InjectiveMorphisms {
    space: MorphismSpace,
    next: u64,
}

impl Iterator for InjectiveMorphisms {
    type Item = Morphism;

    fn next(&mut self) -> Option<Morphism> {
        while self.next < self.space.size {
            let i = self.next;
            self.next += 1;
            if let Some(h) = self.space.injective_at(i) {
                return Some(h);
            }
        }
        None
    }
}

/// Every injective morphism `domain* -> codomain*` with all images of length
/// at most `max_image_len`, each exactly once.
pub fn enumerate_injective(
    domain: Alphabet,
    codomain: Alphabet,
    max_image_len: usize,
) -> Result<InjectiveMorphisms> {
    Ok(InjectiveMorphisms {
        space: MorphismSpace::new(domain, codomain, max_image_len)?,
        next: 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn ab() -> Alphabet {
        Alphabet::parse("ab").unwrap()
    }

    #[test]
    fn length_one_binary() {
        let all: Vec<String> = enumerate_injective(ab(), Alphabet::binary(), 1)
            .unwrap()
            .map(|h| h.to_string())
            .collect();
        assert_eq!(all, vec!["a=0,b=1", "a=1,b=0"]);
    }

    #[test]
    fn length_two_binary_matches_brute_count() {
        // images of length <= 2: 0,1,00,01,10,11. A two-letter map is
        // injective iff the images are distinct and do not commute; the
        // commuting distinct pairs are {0,00} and {1,11}, in both orders.
        let cands = ["0", "1", "00", "01", "10", "11"];
        let commute = |x: &str, y: &str| format!("{x}{y}") == format!("{y}{x}");
        let brute = cands
            .iter()
            .flat_map(|x| cands.iter().map(move |y| (x, y)))
            .filter(|(x, y)| x != y && !commute(x, y))
            .count();
        assert_eq!(brute, 26);
        let found: Vec<Morphism> = enumerate_injective(ab(), Alphabet::binary(), 2)
            .unwrap()
            .collect();
        assert_eq!(found.len(), brute);
        let distinct: HashSet<String> = found.iter().map(|h| h.to_string()).collect();
        assert_eq!(distinct.len(), found.len());
        assert!(found.iter().all(|h| h.is_injective().unwrap()));
    }

    #[test]
    fn shortlex_candidate_order() {
        let space =
            MorphismSpace::new(Alphabet::parse("a").unwrap(), Alphabet::binary(), 2).unwrap();
        let images: Vec<String> = space.iter().map(|h| h.to_string()).collect();
        assert_eq!(images, vec!["a=0", "a=1", "a=00", "a=01", "a=10", "a=11"]);
    }

    #[test]
    fn zero_bound_rejected() {
        assert!(MorphismSpace::new(ab(), Alphabet::binary(), 0).is_err());
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_search_matches_sequential() {
        let space =
            MorphismSpace::new(Alphabet::parse("abc").unwrap(), Alphabet::binary(), 3).unwrap();
        let probe = |h: &Morphism| (h.image(b'c').unwrap().len() == 3).then_some(());
        let seq = space.find_first_sequential(probe).map(|r| r.0);
        let par = space.find_first_parallel(probe).map(|r| r.0);
        assert_eq!(seq, par);
        let key = |h: &Morphism| h.images()[0].len() + h.images()[2].len();
        let seq = space.max_by_key_sequential(key).map(|r| (r.0, r.2));
        let par = space.max_by_key_parallel(key).map(|r| (r.0, r.2));
        assert_eq!(seq, par);
    }
}
