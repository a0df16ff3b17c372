//! Unique decodability of the image set, decided by a dangling-suffix search.
//!
//! A state records the letters still "owed" by the shorter of two competing
//! parses. Starting from pairs of distinct letters whose images are prefix
//! comparable, the shorter parse is extended one letter at a time. Reaching
//! an empty dangling suffix means two different words share an image. The
//! states are suffixes of images, so the search is finite. States are
//! expanded in order of the common image length, which makes the first
//! witness found a shortest one.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use super::Morphism;
use crate::word_core::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Injectivity {
    Injective,
    /// Two distinct words with the same image, of minimal image length.
    NotInjective {
        left: Word,
        right: Word,
    },
}

impl Injectivity {
    pub fn is_injective(&self) -> bool {
        matches!(self, Injectivity::Injective)
    }

    pub fn witness(&self) -> Option<(&Word, &Word)> {
        match self {
            Injectivity::Injective => None,
            Injectivity::NotInjective { left, right } => Some((left, right)),
        }
    }
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
struct State {
    dangling: Vec<u8>,
    long: Vec<u8>,
    short: Vec<u8>,
}

pub(super) fn decide(h: &Morphism) -> Injectivity {
    let letters: Vec<(u8, &[u8])> = h.iter().collect();
    let mut heap = BinaryHeap::new();
    let mut seq = 0usize;
    let mut push = |heap: &mut BinaryHeap<_>, cost: usize, state: State| {
        heap.push(Reverse((cost, seq, state)));
        seq += 1;
    };

    for &(x, hx) in &letters {
        for &(y, hy) in &letters {
            if x == y || !hy.starts_with(hx) {
                continue;
            }
            if hx.len() == hy.len() && x > y {
                continue;
            }
            push(
                &mut heap,
                hy.len(),
                State {
                    dangling: hy[hx.len()..].to_vec(),
                    long: vec![y],
                    short: vec![x],
                },
            );
        }
    }

    let mut settled: HashSet<Vec<u8>> = HashSet::new();
    while let Some(Reverse((cost, _, state))) = heap.pop() {
        if state.dangling.is_empty() {
            let left = Word::from_raw(state.short, h.domain());
            let right = Word::from_raw(state.long, h.domain());
            let (left, right) = if left <= right {
                (left, right)
            } else {
                (right, left)
            };
            return Injectivity::NotInjective { left, right };
        }
        if !settled.insert(state.dangling.clone()) {
            continue;
        }
        let s = &state.dangling;
        for &(c, hc) in &letters {
            let mut short = state.short.clone();
            short.push(c);
            if s.starts_with(hc) {
                push(
                    &mut heap,
                    cost,
                    State {
                        dangling: s[hc.len()..].to_vec(),
                        long: state.long.clone(),
                        short,
                    },
                );
            } else if hc.starts_with(s) {
                push(
                    &mut heap,
                    cost + hc.len() - s.len(),
                    State {
                        dangling: hc[s.len()..].to_vec(),
                        long: short,
                        short: state.long.clone(),
                    },
                );
            }
        }
    }
    Injectivity::Injective
}
