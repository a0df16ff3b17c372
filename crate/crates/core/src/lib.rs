//! Exponents of finite and infinite words under injective morphisms.
//!
//! The crate is organised around five modules:
//!
//! * [`word_core`]: words, alphabets, periods, fractional exponents and the
//!   comparability predicates used everywhere else.
//! * [`morphism`]: letter-to-word maps, their application, an exact
//!   injectivity test and a deterministic enumeration of injective maps.
//! * [`feinj`]: classification of words whose images under injective
//!   morphisms can reach unbounded exponent, witness construction and the
//!   low/high power example families.
//! * [`codes`]: X-interpretations, X-degree, X-factorisations and
//!   synchronizing words for finite codes.
//! * [`infinite`]: prefix generators for infinite words and empirical
//!   asymptotic critical exponent estimation.
//!
//! Exponents are exact rationals throughout. With the default `parallel`
//! feature the search and profiling loops run on rayon; every parallel entry
//! point has a `*_sequential` twin that produces identical output.

pub mod codes;
pub mod error;
pub mod feinj;
pub mod infinite;
pub mod morphism;
pub mod word_core;

pub use error::{Error, Result};
pub use morphism::Morphism;
pub use word_core::{Alphabet, FractionalPower, Rational, Word};
