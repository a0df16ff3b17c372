//! Periodicity, exponent, primitivity, conjugacy and comparability
//! primitives on finite words.

mod alphabet;
mod period;
mod profile;
mod word;

pub use alphabet::{indexed_letter, Alphabet, LETTER_POOL};
pub use period::{
    exponent_of, fine_wilf_root, fractional_exponent, integer_exponent, is_conjugate, is_primitive,
    period_of, prefix_comparable, smallest_period, suffix_comparable, FractionalPower,
};
#[cfg(feature = "parallel")]
pub use profile::period_profile_parallel;
pub use profile::{
    max_exponent_factor, period_profile, period_profile_sequential, ExtremalFactor, PeriodProfile,
};
pub use word::Word;

/// Exact exponent value. Always kept in lowest terms with a positive
/// denominator; prints as `p/q`, or `p` when `q = 1`.
pub type Rational = num_rational::Ratio<i64>;

pub(crate) fn ratio(num: usize, den: usize) -> Rational {
    Rational::new(num as i64, den as i64)
}
