//! Generators for infinite words and prefix-based estimates of their
//! asymptotic critical exponent.

mod constructions;
mod estimate;
mod generator;

pub use constructions::{
    big_acei_generator, cassaigne_family_morphism, optimal_binary_generator, BigAcei, OptimalBinary,
};
pub use estimate::{ace_estimate, factor_complexity, AceEstimate, CurvePoint};
pub use generator::{morphic_generator, periodic_generator, GeneratorKind, WordGenerator};
